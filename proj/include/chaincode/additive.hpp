#pragma once
// Additive codes over Eisenstein-type extensions of chain rings.
//
// An additive code of length n over the extension ring is a subgroup of the
// n-fold product under addition.  Unpacking every ring element into its
// coefficient residues identifies such a code with a linear code over the
// mixed alphabet Z_{p^e}^{n*r*t} x Z_{p^{e-1}}^{n*r*(k-t)}; this module keeps
// that image as the working representation and layers the character-theoretic
// duality on top of it.
//
// Requires e >= 2: for e = 1 the low block of the alphabet degenerates.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chaincode/mixedcode.hpp"
#include "chaincode/ringcore.hpp"

namespace chaincode {

using AdditiveWord = std::vector<AdditiveElement>;

// Ambient of the coefficient images of length-n words.
inline MixedAmbient additive_ambient(const EisensteinParams& par, std::size_t n) {
  if (par.e < 2)
    throw std::invalid_argument("additive_ambient: extension degree must have e >= 2");
  if (n == 0) throw std::invalid_argument("additive_ambient: length must be positive");
  return MixedAmbient(par.p, par.e, n * static_cast<std::size_t>(par.hi_rank()),
                      n * static_cast<std::size_t>(par.lo_rank()));
}

// Character pairing, evaluated directly on ring coordinates.  Two words are
// chi-orthogonal when
//   sum over positions of [ sum_hi a_hi*b_hi + p * sum_lo a_lo*b_lo ] = 0
// in Z_{p^e}.  This is deliberately independent of the packed representation
// so it can serve as the second route when testing duality transport.
inline bool chi_orthogonal(const EisensteinParams& par, const AdditiveWord& a,
                           const AdditiveWord& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("chi_orthogonal: words of different lengths");
  const std::int64_t m = par.hi_modulus();
  std::int64_t acc = 0;
  for (std::size_t l = 0; l < a.size(); ++l) {
    const AdditiveElement& x = a[l];
    const AdditiveElement& y = b[l];
    if (!(x.params == par) || !(y.params == par))
      throw std::invalid_argument("chi_orthogonal: parameter mismatch");
    for (std::size_t i = 0; i < x.hi.size(); ++i) acc = (acc + x.hi[i] * y.hi[i]) % m;
    for (std::size_t j = 0; j < x.lo.size(); ++j)
      acc = (acc + par.p * x.lo[j] * y.lo[j]) % m;
  }
  return acc == 0;
}

class AdditiveCode {
 public:
  AdditiveCode(EisensteinParams par, std::size_t n, MixedCode image)
      : par_(par), n_(n), image_(std::move(image)) {
    if (!(image_.ambient() == additive_ambient(par_, n_)))
      throw std::invalid_argument("AdditiveCode: image lives in the wrong ambient");
  }

  const EisensteinParams& params() const { return par_; }
  std::size_t length() const { return n_; }
  const MixedCode& image() const { return image_; }
  mpz_class cardinality() const { return image_.cardinality(); }

  bool contains(const AdditiveWord& w) const {
    return image_.contains(unembed_row(image_.ambient(), embedded_row(w)));
  }

  std::vector<AdditiveWord> codewords() const {
    std::vector<AdditiveWord> out;
    for (const MixedWord& w : all_codewords(image_)) {
      auto row = w.hi;
      row.insert(row.end(), w.lo.begin(), w.lo.end());
      out.push_back(psi_unpack(par_, row));
    }
    return out;
  }

  std::vector<AdditiveWord> generators() const {
    std::vector<AdditiveWord> out;
    for (const MixedWord& w : image_.generators()) {
      auto row = w.hi;
      row.insert(row.end(), w.lo.begin(), w.lo.end());
      out.push_back(psi_unpack(par_, row));
    }
    return out;
  }

  bool operator==(const AdditiveCode& o) const {
    return par_ == o.par_ && n_ == o.n_ && image_ == o.image_;
  }

 private:
  std::vector<std::int64_t> embedded_row(const AdditiveWord& w) const {
    if (w.size() != n_) throw std::invalid_argument("AdditiveCode: word of wrong length");
    return embed_word(image_.ambient(), packed_word(image_.ambient(), psi_pack(w)));
  }
  static MixedWord packed_word(const MixedAmbient& amb, std::vector<std::int64_t> row) {
    MixedWord w;
    w.hi.assign(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(amb.n1));
    w.lo.assign(row.begin() + static_cast<std::ptrdiff_t>(amb.n1), row.end());
    return w;
  }

  EisensteinParams par_;
  std::size_t n_;
  MixedCode image_;

  friend AdditiveCode additive_from_generators(const EisensteinParams&, std::size_t,
                                               const std::vector<AdditiveWord>&);
};

// The subgroup generated by the given words.  Because every scalar of the
// mixed alphabet is an integer residue, the additive closure of the packed
// generators coincides with their module span.
inline AdditiveCode additive_from_generators(const EisensteinParams& par, std::size_t n,
                                             const std::vector<AdditiveWord>& gens) {
  const MixedAmbient amb = additive_ambient(par, n);
  std::vector<MixedWord> rows;
  for (const AdditiveWord& g : gens) {
    if (g.size() != n)
      throw std::invalid_argument("additive_from_generators: generator of wrong length");
    auto packed = psi_pack(g);
    MixedWord w;
    w.hi.assign(packed.begin(), packed.begin() + static_cast<std::ptrdiff_t>(amb.n1));
    w.lo.assign(packed.begin() + static_cast<std::ptrdiff_t>(amb.n1), packed.end());
    rows.push_back(std::move(w));
  }
  return AdditiveCode(par, n, from_generators(amb, rows));
}

inline AdditiveCode additive_zero_code(const EisensteinParams& par, std::size_t n) {
  return AdditiveCode(par, n, zero_code(additive_ambient(par, n)));
}

// Character-theoretic dual.  The coefficient packing intertwines the chi
// pairing with the mixed inner product, so the dual is computed on the image.
inline AdditiveCode chi_dual(const AdditiveCode& C) {
  return AdditiveCode(C.params(), C.length(), dual(C.image()));
}

inline bool is_chi_self_orthogonal(const AdditiveCode& C) {
  return is_self_orthogonal(C.image());
}
inline bool is_chi_self_dual(const AdditiveCode& C) { return is_self_dual(C.image()); }
inline bool is_chi_lcd(const AdditiveCode& C) { return is_lcd(C.image()); }

// Minimum homogeneous distance of the image; defined for the paired family
// (r = 1, k = 2, t = 1, e = 2) whose image alphabet is Z_{p^2}^N x Z_p^N.
inline std::optional<std::int64_t> hom_distance(const AdditiveCode& C) {
  return min_hom_distance(C.image());
}

// Whether (N, M, d) meets the homogeneous-weight Plotkin-type bound
//   d <= (p-1) p floor(N M / (M - 1))
// with equality.
inline bool plotkin_achieved(std::int64_t p, std::int64_t N, const mpz_class& M,
                             std::int64_t d) {
  if (M < 2) throw std::invalid_argument("plotkin_achieved: need at least two words");
  mpz_class bound = (mpz_class(N) * M) / (M - 1);  // floor division
  bound *= (p - 1) * p;
  return bound == d;
}

// --------------------------------------------------------------------------
// Files: {"p","e","r","k","t","n","generators":[...]} with each generator a
// row of n*r*k residues in packed order (all hi blocks, then all lo blocks).
// --------------------------------------------------------------------------

inline AdditiveCode read_additive_code_json(const nlohmann::json& j) {
  EisensteinParams par(j.at("p").get<std::int64_t>(), j.at("e").get<int>(),
                       j.at("r").get<int>(), j.at("k").get<int>(), j.at("t").get<int>());
  const std::size_t n = j.at("n").get<std::size_t>();
  std::vector<AdditiveWord> gens;
  for (const auto& row : j.at("generators")) {
    std::vector<std::int64_t> packed = row.get<std::vector<std::int64_t>>();
    const std::size_t expect =
        n * static_cast<std::size_t>(par.hi_rank() + par.lo_rank());
    if (packed.size() != expect)
      throw std::invalid_argument("additive code file: generator row of wrong length");
    gens.push_back(psi_unpack(par, packed));
  }
  return additive_from_generators(par, n, gens);
}

inline nlohmann::json write_additive_code_json(const AdditiveCode& C) {
  nlohmann::json j;
  const EisensteinParams& par = C.params();
  j["p"] = par.p;
  j["e"] = par.e;
  j["r"] = par.r;
  j["k"] = par.k;
  j["t"] = par.t;
  j["n"] = C.length();
  nlohmann::json rows = nlohmann::json::array();
  for (const AdditiveWord& g : C.generators()) rows.push_back(psi_pack(g));
  j["generators"] = rows;
  return j;
}

inline AdditiveCode read_additive_code_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  f >> j;
  return read_additive_code_json(j);
}

}  // namespace chaincode
