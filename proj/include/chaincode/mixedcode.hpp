// Linear codes over the mixed alphabet Z_{p^mu}^{n1} (+) Z_{p^{mu-1}}^{n2}.
//
// A code is a Z_{p^mu}-submodule of the mixed ambient.  Internally every
// code is held in an embedded form: a word (c | d) becomes the row
// (c | p * d) over Z_{p^mu}, so the ambient embeds as Z^{n1} x (pZ)^{n2} and
// submodules correspond exactly.  The stored basis is the canonical normal
// form of the embedded generators, which makes code identity a byte
// comparison.
#pragma once

#include <json.hpp>

#include <fstream>
#include <numeric>
#include <optional>
#include <string>

#include "chaincode/modmatrix.hpp"
#include "chaincode/ringcore.hpp"

namespace chaincode {

// ---------------------------------------------------------------------------
// ambient and words
// ---------------------------------------------------------------------------

struct MixedAmbient {
  std::int64_t p = 0;
  int mu = 0;  // hi block lives mod p^mu, lo block mod p^{mu-1}
  std::size_t n1 = 0;
  std::size_t n2 = 0;

  MixedAmbient() = default;
  MixedAmbient(std::int64_t p_, int mu_, std::size_t n1_, std::size_t n2_)
      : p(p_), mu(mu_), n1(n1_), n2(n2_) {
    if (mu < 2) throw std::invalid_argument("MixedAmbient: mu must be >= 2");
    if (n1 + n2 == 0) throw std::invalid_argument("MixedAmbient: empty ambient");
    Modulus guard(p, mu);  // validates p prime and p^mu in range
    (void)guard;
  }

  bool operator==(const MixedAmbient&) const = default;

  Modulus hi_modulus() const { return Modulus(p, mu); }
  Modulus lo_modulus() const { return Modulus(p, mu - 1); }
  std::size_t length() const { return n1 + n2; }

  mpz_class cardinality() const {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(static_cast<std::size_t>(mu) * n1 +
                                             static_cast<std::size_t>(mu - 1) * n2));
    return out;
  }
};

// A word in natural (non-embedded) coordinates.
struct MixedWord {
  std::vector<std::int64_t> hi;  // length n1, mod p^mu
  std::vector<std::int64_t> lo;  // length n2, mod p^{mu-1}

  bool operator==(const MixedWord&) const = default;
};

inline std::vector<std::int64_t> embed_word(const MixedAmbient& amb, const MixedWord& w) {
  if (w.hi.size() != amb.n1 || w.lo.size() != amb.n2)
    throw std::invalid_argument("embed_word: wrong block sizes");
  const Modulus hi = amb.hi_modulus();
  const Modulus lo = amb.lo_modulus();
  std::vector<std::int64_t> row;
  row.reserve(amb.length());
  for (auto x : w.hi) row.push_back(hi.reduce(x));
  for (auto x : w.lo) row.push_back(amb.p * lo.reduce(x));
  return row;
}

inline MixedWord unembed_row(const MixedAmbient& amb, const std::vector<std::int64_t>& row) {
  if (row.size() != amb.length()) throw std::invalid_argument("unembed_row: wrong length");
  MixedWord w;
  w.hi.assign(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(amb.n1));
  w.lo.reserve(amb.n2);
  for (std::size_t j = amb.n1; j < row.size(); ++j) {
    if (row[j] % amb.p != 0) throw std::invalid_argument("unembed_row: lo entry not embedded");
    w.lo.push_back(row[j] / amb.p);
  }
  return w;
}

// <(c|d), (c'|d')> = sum c_i c'_i + p * sum d_j d'_j  (mod p^mu)
inline std::int64_t inner_product(const MixedAmbient& amb, const MixedWord& a, const MixedWord& b) {
  const Modulus m = amb.hi_modulus();
  std::int64_t s = 0;
  for (std::size_t i = 0; i < amb.n1; ++i) s = m.reduce(s + a.hi[i] * b.hi[i]);
  for (std::size_t j = 0; j < amb.n2; ++j) s = m.reduce(s + amb.p * (a.lo[j] * b.lo[j]));
  return s;
}

// Same bilinear form evaluated on embedded rows.
inline std::int64_t inner_product_embedded(const MixedAmbient& amb,
                                           const std::vector<std::int64_t>& a,
                                           const std::vector<std::int64_t>& b) {
  const Modulus m = amb.hi_modulus();
  std::int64_t s = 0;
  for (std::size_t i = 0; i < amb.n1; ++i) s = m.reduce(s + a[i] * b[i]);
  for (std::size_t j = amb.n1; j < amb.length(); ++j)
    s = m.reduce(s + (a[j] / amb.p) * b[j]);  // (p d)(p d')/p = p d d'
  return s;
}

// ---------------------------------------------------------------------------
// the code object
// ---------------------------------------------------------------------------

struct CodeType {
  std::vector<int> ks;  // sizes k_0..k_{mu-1}
  std::vector<int> ls;  // sizes l_0..l_{mu-2}

  bool operator==(const CodeType&) const = default;
  auto operator<=>(const CodeType&) const = default;
};

class MixedCode {
 public:
  MixedCode(MixedAmbient amb, ResidueMatrix canonical_basis)
      : amb_(amb), basis_(std::move(canonical_basis)) {}

  const MixedAmbient& ambient() const { return amb_; }
  // Embedded canonical basis (lo columns carry p * value).
  const ResidueMatrix& basis() const { return basis_; }

  bool operator==(const MixedCode& o) const { return amb_ == o.amb_ && basis_ == o.basis_; }

  mpz_class cardinality() const { return span_cardinality(basis_); }

  bool contains(const MixedWord& w) const { return in_span(basis_, embed_word(amb_, w)); }
  bool contains_embedded(const std::vector<std::int64_t>& row) const { return in_span(basis_, row); }

  std::vector<MixedWord> generators() const {
    std::vector<MixedWord> out;
    out.reserve(basis_.rows);
    for (std::size_t i = 0; i < basis_.rows; ++i) out.push_back(unembed_row(amb_, basis_.row(i)));
    return out;
  }

 private:
  MixedAmbient amb_;
  ResidueMatrix basis_;
};

inline MixedCode from_generators(const MixedAmbient& amb, const std::vector<MixedWord>& gens) {
  ResidueMatrix M(amb.hi_modulus(), gens.size(), amb.length());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto row = embed_word(amb, gens[i]);
    std::copy(row.begin(), row.end(), M.a.begin() + static_cast<std::ptrdiff_t>(i * amb.length()));
  }
  return MixedCode(amb, howell_form(M));
}

inline MixedCode from_embedded_rows(const MixedAmbient& amb,
                                    const std::vector<std::vector<std::int64_t>>& rows) {
  ResidueMatrix M(amb.hi_modulus(), rows.size(), amb.length());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != amb.length()) throw std::invalid_argument("from_embedded_rows: bad row");
    for (std::size_t j = 0; j < amb.length(); ++j) M.at(i, j) = M.m.reduce(rows[i][j]);
  }
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = amb.n1; j < amb.length(); ++j)
      if (M.at(i, j) % amb.p != 0) throw std::invalid_argument("from_embedded_rows: lo entry not embedded");
  return MixedCode(amb, howell_form(M));
}

inline MixedCode zero_code(const MixedAmbient& amb) {
  return MixedCode(amb, ResidueMatrix(amb.hi_modulus(), 0, amb.length()));
}

inline MixedCode full_ambient_code(const MixedAmbient& amb) {
  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t i = 0; i < amb.length(); ++i) {
    std::vector<std::int64_t> r(amb.length(), 0);
    r[i] = i < amb.n1 ? 1 : amb.p;
    rows.push_back(std::move(r));
  }
  return from_embedded_rows(amb, rows);
}

// ---------------------------------------------------------------------------
// duality
// ---------------------------------------------------------------------------
//
// The dual is the kernel of the embedded generator matrix: a row (u | w)
// over Z_{p^mu} satisfies  sum c_i u_i + sum (p d_j) w_j = 0  exactly when
// the word (u | w mod p^{mu-1}) pairs to zero with (c | d), because
// (p d_j) w_j = p * d_j w_j.  Re-embedding multiplies the w block by p.

inline MixedCode dual(const MixedCode& C) {
  const MixedAmbient& amb = C.ambient();
  ResidueMatrix K = kernel(C.basis());
  std::vector<std::vector<std::int64_t>> rows;
  rows.reserve(K.rows);
  for (std::size_t i = 0; i < K.rows; ++i) {
    auto r = K.row(i);
    for (std::size_t j = amb.n1; j < amb.length(); ++j) r[j] = K.m.reduce(r[j] * amb.p);
    rows.push_back(std::move(r));
  }
  return from_embedded_rows(amb, rows);
}

inline MixedCode sum_codes(const MixedCode& A, const MixedCode& B) {
  if (!(A.ambient() == B.ambient())) throw std::invalid_argument("sum_codes: ambient mismatch");
  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t i = 0; i < A.basis().rows; ++i) rows.push_back(A.basis().row(i));
  for (std::size_t i = 0; i < B.basis().rows; ++i) rows.push_back(B.basis().row(i));
  return from_embedded_rows(A.ambient(), rows);
}

// C1 cap C2 = (C1^perp + C2^perp)^perp
inline MixedCode intersect_codes(const MixedCode& A, const MixedCode& B) {
  return dual(sum_codes(dual(A), dual(B)));
}

inline bool is_self_orthogonal(const MixedCode& C) {
  const auto& B = C.basis();
  for (std::size_t i = 0; i < B.rows; ++i)
    for (std::size_t j = i; j < B.rows; ++j)
      if (inner_product_embedded(C.ambient(), B.row(i), B.row(j)) != 0) return false;
  return true;
}

inline bool is_self_dual(const MixedCode& C) {
  if (!is_self_orthogonal(C)) return false;
  return C.cardinality() * C.cardinality() == C.ambient().cardinality();
}

// LCD: C cap C^perp = 0, tested as |C + C^perp| = |ambient|.
inline bool is_lcd(const MixedCode& C) {
  return sum_codes(C, dual(C)).cardinality() == C.ambient().cardinality();
}

// ---------------------------------------------------------------------------
// standard form
// ---------------------------------------------------------------------------
//
// After permuting hi and lo coordinates separately, every code has a
// generator matrix in the graded block shape: for each grade g there are
// k_g rows whose pivot is gamma^g on a hi coordinate and (for g <= mu-2)
// l_g rows whose pivot is gamma^g on a lo coordinate.  Rows are listed
// X-grades first, then Y-grades; pivot columns are gathered into blocks by
// grade; entries above a pivot of grade g are reduced modulo the pivot.
// X-grade-g rows are divisible by gamma^g throughout, Y-grade-g rows carry
// gamma^{g+1} on their hi part, and Y pivot blocks of index <= g are zero in
// X-grade-g rows (and conversely), which is exactly what the interleaved
// elimination below produces.
//
// The matrix is stored in embedded coordinates (lo entries carry p * value),
// so a Y-grade-g pivot appears as p^{g+1}.

struct StandardForm {
  CodeType type;
  std::vector<std::size_t> perm_hi;  // position -> original hi coordinate
  std::vector<std::size_t> perm_lo;  // position -> original lo coordinate
  ResidueMatrix matrix;              // embedded, columns permuted as above
};

inline StandardForm standard_form(const MixedCode& C) {
  const MixedAmbient& amb = C.ambient();
  const Modulus m = amb.hi_modulus();
  const int mu = amb.mu;

  std::vector<std::vector<std::int64_t>> remaining;
  for (std::size_t i = 0; i < C.basis().rows; ++i) remaining.push_back(C.basis().row(i));

  struct Placed {
    int grade;
    bool is_lo;
    std::vector<std::int64_t> row;
  };
  std::vector<Placed> placed;
  std::vector<std::size_t> pivot_hi, pivot_lo;  // original columns, placement order
  std::vector<int> grade_hi, grade_lo;
  std::vector<bool> used_hi(amb.n1, false), used_lo(amb.n2, false);

  auto eliminate_with = [&](const std::vector<std::int64_t>& piv, std::size_t col,
                            std::int64_t pivot_value) {
    for (auto& s : remaining)
      if (s[col] != 0) detail::row_axpy(m, s, piv, s[col] / pivot_value);
    for (auto& pl : placed)
      if (pl.row[col] >= pivot_value) detail::row_axpy(m, pl.row, piv, pl.row[col] / pivot_value);
  };

  auto run_phase = [&](int g, bool lo_side) {
    const int emb_val = lo_side ? g + 1 : g;
    const std::int64_t pv = checked_pow(m.p, emb_val);
    const std::size_t begin = lo_side ? amb.n1 : 0;
    const std::size_t end = lo_side ? amb.length() : amb.n1;
    auto& used = lo_side ? used_lo : used_hi;
    while (true) {
      std::size_t found_row = remaining.size(), found_col = 0;
      for (std::size_t i = 0; i < remaining.size() && found_row == remaining.size(); ++i)
        for (std::size_t c = begin; c < end; ++c) {
          if (used[c - begin]) continue;
          if (remaining[i][c] != 0 && m.valuation(remaining[i][c]) == emb_val) {
            found_row = i;
            found_col = c;
            break;
          }
        }
      if (found_row == remaining.size()) break;

      std::vector<std::int64_t> piv = std::move(remaining[found_row]);
      remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(found_row));
      detail::row_scale(m, piv, m.inv_unit(piv[found_col] / pv));  // pivot -> p^{emb_val}
      eliminate_with(piv, found_col, pv);

      used[found_col - begin] = true;
      if (lo_side) {
        pivot_lo.push_back(found_col - amb.n1);
        grade_lo.push_back(g);
      } else {
        pivot_hi.push_back(found_col);
        grade_hi.push_back(g);
      }
      placed.push_back({g, lo_side, std::move(piv)});
    }
  };

  for (int g = 0; g < mu; ++g) {
    run_phase(g, false);
    if (g <= mu - 2) run_phase(g, true);
  }
  for (const auto& r : remaining)
    if (!detail::row_is_zero(r)) throw std::logic_error("standard_form: unplaced nonzero row");

  StandardForm sf;
  sf.type.ks.assign(mu, 0);
  sf.type.ls.assign(mu - 1, 0);
  for (int g : grade_hi) ++sf.type.ks[static_cast<std::size_t>(g)];
  for (int g : grade_lo) ++sf.type.ls[static_cast<std::size_t>(g)];

  // column order: pivot columns by grade (placement order within a grade),
  // then the remaining columns in original order
  sf.perm_hi = pivot_hi;
  for (std::size_t c = 0; c < amb.n1; ++c)
    if (!used_hi[c]) sf.perm_hi.push_back(c);
  sf.perm_lo = pivot_lo;
  for (std::size_t c = 0; c < amb.n2; ++c)
    if (!used_lo[c]) sf.perm_lo.push_back(c);

  // rows: X grades ascending, then Y grades ascending (stable in placement
  // order, which already sorts each side by grade)
  std::vector<const Placed*> ordered;
  for (const auto& pl : placed)
    if (!pl.is_lo) ordered.push_back(&pl);
  for (const auto& pl : placed)
    if (pl.is_lo) ordered.push_back(&pl);

  sf.matrix = ResidueMatrix(m, ordered.size(), amb.length());
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    for (std::size_t jc = 0; jc < amb.n1; ++jc) sf.matrix.at(i, jc) = ordered[i]->row[sf.perm_hi[jc]];
    for (std::size_t jc = 0; jc < amb.n2; ++jc)
      sf.matrix.at(i, amb.n1 + jc) = ordered[i]->row[amb.n1 + sf.perm_lo[jc]];
  }
  return sf;
}

// Structural audit of a standard form against its defining block pattern.
inline bool standard_form_shape_ok(const MixedAmbient& amb, const StandardForm& sf) {
  const Modulus m = amb.hi_modulus();
  const int mu = amb.mu;
  const auto& M = sf.matrix;
  std::vector<int> row_grade;
  std::vector<bool> row_is_lo;
  for (int g = 0; g < mu; ++g)
    for (int i = 0; i < sf.type.ks[static_cast<std::size_t>(g)]; ++i) {
      row_grade.push_back(g);
      row_is_lo.push_back(false);
    }
  for (int g = 0; g <= mu - 2; ++g)
    for (int i = 0; i < sf.type.ls[static_cast<std::size_t>(g)]; ++i) {
      row_grade.push_back(g);
      row_is_lo.push_back(true);
    }
  if (row_grade.size() != M.rows) return false;

  // pivot column index of each row inside the permuted matrix
  std::vector<std::size_t> pivot_col(M.rows);
  {
    std::size_t hi_at = 0, lo_at = amb.n1;
    for (std::size_t r = 0; r < M.rows; ++r) pivot_col[r] = row_is_lo[r] ? lo_at++ : hi_at++;
  }
  for (std::size_t r = 0; r < M.rows; ++r) {
    const int g = row_grade[r];
    const int emb = row_is_lo[r] ? g + 1 : g;
    const std::int64_t pv = checked_pow(m.p, emb);
    if (M.at(r, pivot_col[r]) != pv) return false;  // normalized pivot
    for (std::size_t r2 = 0; r2 < M.rows; ++r2) {
      if (r2 == r) continue;
      const std::int64_t e = M.at(r2, pivot_col[r]);
      if (e >= pv) return false;  // reduced above, zero below/elsewhere
      if (r2 > r && row_is_lo[r2] == row_is_lo[r] && e != 0) return false;
    }
    // divisibility pattern of the whole row: an X-grade-g row is divisible
    // by gamma^g (its embedded lo entries by p^{g+1}); a Y-grade-g row
    // carries gamma^{g+1} on its hi part and gamma^g (true) on its lo part,
    // both of which appear as p^{g+1} in embedded coordinates.
    for (std::size_t c = 0; c < M.cols; ++c) {
      const bool c_lo = c >= amb.n1;
      const int need = row_is_lo[r] ? g + 1 : (c_lo ? g + 1 : g);
      if (M.at(r, c) % checked_pow(m.p, std::min(need, mu)) != 0) return false;
    }
  }
  return true;
}

inline CodeType type_of(const MixedCode& C) { return standard_form(C).type; }

// log_p |C| from a type: sum (mu - i) k_i + sum (mu - 1 - j) l_j
inline std::size_t type_log_cardinality(const MixedAmbient& amb, const CodeType& t) {
  std::size_t s = 0;
  for (std::size_t i = 0; i < t.ks.size(); ++i)
    s += static_cast<std::size_t>(t.ks[i]) * (static_cast<std::size_t>(amb.mu) - i);
  for (std::size_t j = 0; j < t.ls.size(); ++j)
    s += static_cast<std::size_t>(t.ls[j]) * (static_cast<std::size_t>(amb.mu) - 1 - j);
  return s;
}

inline CodeType dual_type(const MixedAmbient& amb, const CodeType& t) {
  CodeType d;
  d.ks.resize(static_cast<std::size_t>(amb.mu));
  d.ls.resize(static_cast<std::size_t>(amb.mu - 1));
  d.ks[0] = static_cast<int>(amb.n1) - std::accumulate(t.ks.begin(), t.ks.end(), 0);
  for (int i = 1; i < amb.mu; ++i) d.ks[static_cast<std::size_t>(i)] = t.ks[static_cast<std::size_t>(amb.mu - i)];
  d.ls[0] = static_cast<int>(amb.n2) - std::accumulate(t.ls.begin(), t.ls.end(), 0);
  for (int j = 1; j <= amb.mu - 2; ++j) d.ls[static_cast<std::size_t>(j)] = t.ls[static_cast<std::size_t>(amb.mu - 1 - j)];
  return d;
}

// ---------------------------------------------------------------------------
// component codes and torsion
// ---------------------------------------------------------------------------
//
// The X component code is spanned by the hi parts of the X-pivot rows of a
// standard form (mapped back to the original coordinate order); the Y
// component by the lo parts of the Y-pivot rows.  These are chain-ring codes
// over Z_{p^mu} and Z_{p^{mu-1}} respectively.  The i-th torsion code of a
// chain-ring code D is the residue-field code {x mod p : gamma^{i-1} x in D}.

enum class Side { X, Y };

// Torsion code as a canonical matrix over F_p (original coordinates).
inline ResidueMatrix torsion(const MixedCode& C, int i, Side side) {
  const MixedAmbient& amb = C.ambient();
  const int mu_side = side == Side::X ? amb.mu : amb.mu - 1;
  if (i < 1 || i > mu_side) throw std::invalid_argument("torsion: index out of range");
  const StandardForm sf = standard_form(C);
  const std::size_t n = side == Side::X ? amb.n1 : amb.n2;
  const auto& perm = side == Side::X ? sf.perm_hi : sf.perm_lo;
  const std::size_t col0 = side == Side::X ? 0 : amb.n1;

  // rows of the component generator matrix with grade <= i-1, divided by
  // gamma^grade and reduced mod p
  std::vector<std::int64_t> flat;
  std::size_t count = 0;
  std::size_t row_at = side == Side::X ? 0 : std::accumulate(sf.type.ks.begin(), sf.type.ks.end(), std::size_t{0});
  const auto& sizes = side == Side::X ? sf.type.ks : sf.type.ls;
  for (int g = 0; g < static_cast<int>(sizes.size()); ++g) {
    for (int rr = 0; rr < sizes[static_cast<std::size_t>(g)]; ++rr, ++row_at) {
      if (g > i - 1) continue;
      // embedded divisor: gamma^g on the X side is p^g; on the Y side the
      // true value is entry / p and the grade divisor is p^g
      const std::int64_t div = checked_pow(amb.p, side == Side::X ? g : g + 1);
      std::vector<std::int64_t> out(n, 0);
      for (std::size_t c = 0; c < n; ++c) {
        const std::int64_t e = sf.matrix.at(row_at, col0 + c);
        out[perm[c]] = (e / div) % amb.p;
      }
      flat.insert(flat.end(), out.begin(), out.end());
      ++count;
    }
  }
  return howell_form(ResidueMatrix(Modulus(amb.p, 1), count, n, std::move(flat)));
}

// ---------------------------------------------------------------------------
// homogeneous weight (mu == 2, paired coordinates)
// ---------------------------------------------------------------------------
//
// For mu = 2 and n1 == n2 = N, the word (c | d) is read as N ring elements
// c_i + d_i y; the homogeneous weight of a nonzero element is p^2 when it
// lies in the nonzero socle (c_i a nonzero multiple of p, d_i = 0), and
// (p-1) p otherwise.

inline std::int64_t hom_weight_word(const MixedAmbient& amb, const MixedWord& w) {
  if (amb.mu != 2) throw std::invalid_argument("hom_weight_word: defined for mu == 2 only");
  if (amb.n1 != amb.n2) throw std::invalid_argument("hom_weight_word: needs paired coordinates");
  const std::int64_t p = amb.p;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < amb.n1; ++i) {
    const std::int64_t c = w.hi[i], d = w.lo[i];
    if (c == 0 && d == 0) continue;
    if (d == 0 && c % p == 0) total += p * p;
    else total += (p - 1) * p;
  }
  return total;
}

// All codewords, each exactly once (coefficient ranges p^{mu-v} per basis row).
inline std::vector<MixedWord> all_codewords(const MixedCode& C) {
  const MixedAmbient& amb = C.ambient();
  const Modulus m = amb.hi_modulus();
  const auto prof = pivot_profile(C.basis());
  std::vector<std::int64_t> limit;
  for (const auto& [c, v] : prof) limit.push_back(checked_pow(m.p, m.mu - v));
  std::vector<MixedWord> out;
  std::vector<std::int64_t> coef(prof.size(), 0);
  while (true) {
    std::vector<std::int64_t> row(amb.length(), 0);
    for (std::size_t i = 0; i < coef.size(); ++i)
      if (coef[i] != 0)
        for (std::size_t j = 0; j < amb.length(); ++j)
          row[j] = m.reduce(row[j] + coef[i] * C.basis().at(i, j));
    out.push_back(unembed_row(amb, row));
    std::size_t i = 0;
    while (i < coef.size() && ++coef[i] == limit[i]) coef[i++] = 0;
    if (i == coef.size()) break;
  }
  return out;
}

inline std::optional<std::int64_t> min_hom_distance(const MixedCode& C) {
  std::optional<std::int64_t> best;
  for (const auto& w : all_codewords(C)) {
    const std::int64_t wt = hom_weight_word(C.ambient(), w);
    if (wt == 0) continue;  // the zero word
    if (!best || wt < *best) best = wt;
  }
  return best;  // empty for the zero code
}

// ---------------------------------------------------------------------------
// file form
// ---------------------------------------------------------------------------
//
// {"p": 3, "e": 2, "n1": 2, "n2": 2, "generators": [[3,0,0,0], ...]}
// Generator rows hold natural (non-embedded) values: n1 entries mod p^e
// followed by n2 entries mod p^{e-1}.

inline MixedCode read_mixed_code_json(const nlohmann::json& j) {
  const MixedAmbient amb(j.at("p").get<std::int64_t>(), j.at("e").get<int>(),
                         j.at("n1").get<std::size_t>(), j.at("n2").get<std::size_t>());
  std::vector<MixedWord> gens;
  for (const auto& row : j.at("generators")) {
    if (row.size() != amb.length()) throw std::invalid_argument("mixed code file: bad row length");
    MixedWord w;
    for (std::size_t i = 0; i < amb.n1; ++i) w.hi.push_back(row.at(i).get<std::int64_t>());
    for (std::size_t i = amb.n1; i < amb.length(); ++i) w.lo.push_back(row.at(i).get<std::int64_t>());
    gens.push_back(std::move(w));
  }
  return from_generators(amb, gens);
}

inline MixedCode read_mixed_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open code file: " + path);
  nlohmann::json j;
  in >> j;
  return read_mixed_code_json(j);
}

inline nlohmann::json write_mixed_code_json(const MixedCode& C) {
  const MixedAmbient& amb = C.ambient();
  nlohmann::json j;
  j["p"] = amb.p;
  j["e"] = amb.mu;
  j["n1"] = amb.n1;
  j["n2"] = amb.n2;
  j["generators"] = nlohmann::json::array();
  for (const auto& g : C.generators()) {
    nlohmann::json row = nlohmann::json::array();
    for (auto x : g.hi) row.push_back(x);
    for (auto x : g.lo) row.push_back(x);
    j["generators"].push_back(std::move(row));
  }
  return j;
}

}  // namespace chaincode
