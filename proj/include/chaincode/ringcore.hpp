// Core residue arithmetic for finite chain rings Z_{p^mu} and for the
// Eisenstein-type extension rings whose additive structure unpacks into a
// pair of free blocks over Z_{p^e} and Z_{p^{e-1}}.
//
// Everything here is exact integer arithmetic on int64_t.  Moduli are
// restricted to p^mu <= 2^31 so that products of two reduced residues never
// overflow a signed 64-bit integer.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace chaincode {

// ---------------------------------------------------------------------------
// small number-theory helpers
// ---------------------------------------------------------------------------

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// If n = p^r for a prime p and r >= 1, returns {p, r}; otherwise {0, 0}.
inline std::pair<std::int64_t, int> prime_power_decompose(std::int64_t n) {
  if (n < 2) return {0, 0};
  std::int64_t p = n;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  int r = 0;
  std::int64_t m = n;
  while (m % p == 0) {
    m /= p;
    ++r;
  }
  if (m != 1) return {0, 0};
  return {p, r};
}

// p^k with overflow guard (throws if the result would exceed limit).
inline std::int64_t checked_pow(std::int64_t p, int k,
                                std::int64_t limit = (std::int64_t{1} << 62)) {
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) {
    if (r > limit / p) throw std::overflow_error("checked_pow: overflow");
    r *= p;
  }
  return r;
}

// Whether (-1)^m_exp is a square in F_q.  q must be an odd prime power.
// For even exponents this is trivially true; for odd exponents it reduces to
// -1 being a square in F_q, which for odd q = p^r holds iff q == 1 (mod 4).
inline bool neg_one_power_is_square(std::int64_t q, std::int64_t m_exp) {
  auto [p, r] = prime_power_decompose(q);
  if (p == 0) throw std::invalid_argument("neg_one_power_is_square: q must be a prime power");
  if (p == 2) throw std::invalid_argument("neg_one_power_is_square: q must be odd");
  if (m_exp % 2 == 0) return true;
  return q % 4 == 1;
}

// ---------------------------------------------------------------------------
// Modulus: the chain ring Z_{p^mu}
// ---------------------------------------------------------------------------

struct Modulus {
  std::int64_t p = 0;  // prime
  int mu = 0;          // nilpotency index of <p>; modulus is p^mu
  std::int64_t m = 0;  // p^mu, cached

  Modulus() = default;
  Modulus(std::int64_t p_, int mu_) : p(p_), mu(mu_) {
    if (!is_prime(p)) throw std::invalid_argument("Modulus: p must be prime");
    if (mu < 1) throw std::invalid_argument("Modulus: mu must be >= 1");
    m = checked_pow(p, mu, (std::int64_t{1} << 31));
  }

  bool operator==(const Modulus&) const = default;

  std::int64_t reduce(std::int64_t x) const {
    x %= m;
    return x < 0 ? x + m : x;
  }
  std::int64_t add(std::int64_t a, std::int64_t b) const { return reduce(a + b); }
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return reduce(a - b); }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return reduce(reduce(a) * reduce(b)); }
  std::int64_t neg(std::int64_t a) const { return reduce(-a); }

  // p-adic valuation of x mod p^mu; by convention valuation(0) = mu.
  int valuation(std::int64_t x) const {
    x = reduce(x);
    if (x == 0) return mu;
    int v = 0;
    while (x % p == 0) {
      x /= p;
      ++v;
    }
    return v;
  }

  bool is_unit(std::int64_t x) const { return reduce(x) % p != 0; }

  // Multiplicative inverse of a unit (extended Euclid).
  std::int64_t inv_unit(std::int64_t a) const {
    a = reduce(a);
    if (!is_unit(a)) throw std::domain_error("inv_unit: not a unit");
    std::int64_t t = 0, new_t = 1, r = m, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    return reduce(t);
  }

  // Every x factors as p^valuation(x) * unit (unit defined up to mod p^{mu-v}).
  std::int64_t unit_part(std::int64_t x) const {
    x = reduce(x);
    if (x == 0) throw std::domain_error("unit_part: zero has no unit part");
    while (x % p == 0) x /= p;
    return x;
  }

  // All units of Z_{p^mu} in ascending order.
  std::vector<std::int64_t> units() const {
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(m - m / p));
    for (std::int64_t x = 1; x < m; ++x)
      if (x % p != 0) out.push_back(x);
    return out;
  }
};

// ---------------------------------------------------------------------------
// EisensteinParams: R = GR(p^e, r)[y] / <g(y), p^{e-1} y^t>
// ---------------------------------------------------------------------------
//
// The ring is a finite chain ring; additively it is free of rank r*t over
// Z_{p^e} and of rank r*(k-t) over Z_{p^{e-1}}.  Only that additive shape
// matters for additive codes and their character-theoretic duals, so the
// Eisenstein polynomial coefficients are retained purely as metadata.

struct EisensteinParams {
  std::int64_t p = 0;  // prime
  int e = 0;           // precision of the Galois ring GR(p^e, r)
  int r = 0;           // residue-field degree, |F| = p^r
  int k = 0;           // degree of the Eisenstein polynomial g(y)
  int t = 0;           // truncation exponent in <g(y), p^{e-1} y^t>
  // Optional: coefficients g_0..g_{k-1} with g(y) = y^k + p*(sum g_i y^i).
  // Metadata only; never used in computations.
  std::vector<std::int64_t> g_coeffs{};

  EisensteinParams() = default;
  EisensteinParams(std::int64_t p_, int e_, int r_, int k_, int t_,
                   std::vector<std::int64_t> g = {})
      : p(p_), e(e_), r(r_), k(k_), t(t_), g_coeffs(std::move(g)) {
    if (!is_prime(p)) throw std::invalid_argument("EisensteinParams: p must be prime");
    if (e < 1) throw std::invalid_argument("EisensteinParams: e must be >= 1");
    if (r < 1) throw std::invalid_argument("EisensteinParams: r must be >= 1");
    if (k < 1) throw std::invalid_argument("EisensteinParams: k must be >= 1");
    if (e == 1) {
      if (t != k) throw std::invalid_argument("EisensteinParams: e == 1 forces t == k");
    } else {
      if (t < 1 || t > k) throw std::invalid_argument("EisensteinParams: need 1 <= t <= k");
    }
    checked_pow(p, e, (std::int64_t{1} << 31));  // overflow guard for residues
  }

  bool operator==(const EisensteinParams&) const = default;

  std::int64_t hi_modulus() const { return checked_pow(p, e); }
  std::int64_t lo_modulus() const { return checked_pow(p, e - 1); }
  // Per ring element: r*t residues mod p^e and r*(k-t) residues mod p^{e-1}.
  int hi_rank() const { return r * t; }
  int lo_rank() const { return r * (k - t); }
  // |R| = p^{e*r*t + (e-1)*r*(k-t)}
};

// One ring element in unpacked coordinate form: the y^0..y^{t-1} block holds
// r-tuples of Z_{p^e} coefficients, the y^t..y^{k-1} block holds r-tuples of
// Z_{p^{e-1}} coefficients.
struct AdditiveElement {
  EisensteinParams params;
  std::vector<std::int64_t> hi;  // length r*t, residues mod p^e
  std::vector<std::int64_t> lo;  // length r*(k-t), residues mod p^{e-1}

  AdditiveElement() = default;
  explicit AdditiveElement(const EisensteinParams& pr)
      : params(pr),
        hi(static_cast<std::size_t>(pr.hi_rank()), 0),
        lo(static_cast<std::size_t>(pr.lo_rank()), 0) {}
  AdditiveElement(const EisensteinParams& pr, std::vector<std::int64_t> hi_,
                  std::vector<std::int64_t> lo_)
      : params(pr), hi(std::move(hi_)), lo(std::move(lo_)) {
    if (hi.size() != static_cast<std::size_t>(pr.hi_rank()) ||
        lo.size() != static_cast<std::size_t>(pr.lo_rank()))
      throw std::invalid_argument("AdditiveElement: wrong block sizes");
    const std::int64_t mh = pr.hi_modulus(), ml = pr.lo_modulus();
    for (auto& x : hi) x = ((x % mh) + mh) % mh;
    for (auto& x : lo) x = ((x % ml) + ml) % ml;
  }

  bool operator==(const AdditiveElement&) const = default;
};

// ---------------------------------------------------------------------------
// Coefficient unpacking of words
// ---------------------------------------------------------------------------
//
// A word (a^(0), ..., a^(N-1)) over the extension ring maps to the
// concatenation of all hi blocks followed by all lo blocks:
//     ( hi(a^(0)) ... hi(a^(N-1)) | lo(a^(0)) ... lo(a^(N-1)) ),
// an element of Z_{p^e}^{N*r*t} (+) Z_{p^{e-1}}^{N*r*(k-t)}.  This is an
// isomorphism of Z_{p^e}-modules, so additive codes correspond exactly to
// linear codes over the mixed alphabet.

inline std::vector<std::int64_t> psi_pack(const std::vector<AdditiveElement>& word) {
  if (word.empty()) return {};
  const EisensteinParams& pr = word.front().params;
  std::vector<std::int64_t> out;
  out.reserve(word.size() * static_cast<std::size_t>(pr.hi_rank() + pr.lo_rank()));
  for (const auto& el : word) {
    if (!(el.params == pr)) throw std::invalid_argument("psi_pack: mixed parameter sets");
    out.insert(out.end(), el.hi.begin(), el.hi.end());
  }
  for (const auto& el : word) out.insert(out.end(), el.lo.begin(), el.lo.end());
  return out;
}

inline std::vector<AdditiveElement> psi_unpack(const EisensteinParams& pr,
                                               const std::vector<std::int64_t>& row) {
  const std::size_t per_hi = static_cast<std::size_t>(pr.hi_rank());
  const std::size_t per_lo = static_cast<std::size_t>(pr.lo_rank());
  const std::size_t per = per_hi + per_lo;
  if (per == 0 || row.size() % per != 0)
    throw std::invalid_argument("psi_unpack: length not a multiple of the element rank");
  const std::size_t n = row.size() / per;
  std::vector<AdditiveElement> word;
  word.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> hi(row.begin() + static_cast<std::ptrdiff_t>(i * per_hi),
                                 row.begin() + static_cast<std::ptrdiff_t>((i + 1) * per_hi));
    std::vector<std::int64_t> lo(
        row.begin() + static_cast<std::ptrdiff_t>(n * per_hi + i * per_lo),
        row.begin() + static_cast<std::ptrdiff_t>(n * per_hi + (i + 1) * per_lo));
    word.emplace_back(pr, std::move(hi), std::move(lo));
  }
  return word;
}

}  // namespace chaincode
