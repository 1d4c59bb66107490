#pragma once
// Closed-form enumeration of self-orthogonal, self-dual and complementary-dual
// codes over the mixed alphabet Z_{p^e}^{N1} x Z_{p^{e-1}}^{N2}.
//
// Layout of the machinery:
//   * gauss_binom, sigma_so, lcd_field_count: residue-field ingredients.
//     sigma_so (and everything built on it) requires odd characteristic; the
//     quadratic-form kernel counts behind it change in characteristic two.
//   * theta2 / theta3 / theta_general: exponents counting the codes with a
//     fully prescribed torsion chain.  theta_general has three selectable
//     renderings (ThetaVariant); the audit machinery picks the one that
//     matches the brute-force census type-by-type.
//   * delta_exponent + small_exponent + binomial factors: the telescoped
//     product over two-step contractions of the type vector.
//   * count_so_typed / count_so_total / count_sd_total / count_lcd_mixed:
//     the user-facing counts.  Totals include the zero code.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "chaincode/ringcore.hpp"

namespace chaincode {

// Gaussian binomial coefficient with base q (exact integer).
inline mpz_class gauss_binom(long long n, long long k, const mpz_class& q) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class num = 1, den = 1;
  for (long long i = 0; i < k; ++i) {
    mpz_class qa, qb;
    mpz_pow_ui(qa.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n - i));
    mpz_pow_ui(qb.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(i + 1));
    num *= qa - 1;
    den *= qb - 1;
  }
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::logic_error("gauss_binom: non-exact division");
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

inline mpz_class pow_mpz(const mpz_class& q, long long e) {
  if (e < 0) throw std::invalid_argument("pow_mpz: negative exponent");
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

namespace detail {
inline void require_odd_field(std::int64_t q, const char* who) {
  if (!is_prime(q) || q == 2)
    throw std::invalid_argument(std::string(who) + ": requires an odd prime field size");
}
}  // namespace detail

// Number of self-orthogonal [n, s] codes over F_q (odd q).
inline mpz_class sigma_so(std::int64_t q, int n, int s) {
  detail::require_odd_field(q, "sigma_so");
  if (n < 0) throw std::invalid_argument("sigma_so: negative length");
  if (s < 0 || 2 * s > n) return 0;
  if (s == 0) return 1;
  const mpz_class Q(static_cast<long>(q));
  mpz_class num = 1, den = 1;
  if (n % 2 == 1) {
    for (int i = 0; i <= s - 1; ++i) num *= pow_mpz(Q, n - 1 - 2 * i) - 1;
  } else {
    const int nu = neg_one_power_is_square(q, n / 2) ? 1 : -1;
    num = pow_mpz(Q, n - s) - nu * pow_mpz(Q, n / 2 - s) + nu * pow_mpz(Q, n / 2) - 1;
    for (int i = 1; i <= s - 1; ++i) num *= pow_mpz(Q, n - 2 * i) - 1;
  }
  for (int j = 1; j <= s; ++j) den *= pow_mpz(Q, j) - 1;
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::logic_error("sigma_so: non-exact division");
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

// Self-dual [n, n/2] codes over F_q exist iff n is even and (-1)^{n/2} is a
// square in F_q.
inline bool sd_exists_field(std::int64_t q, int n) {
  detail::require_odd_field(q, "sd_exists_field");
  return n % 2 == 0 && neg_one_power_is_square(q, n / 2);
}

// ---------------------------------------------------------------------------
// Type-vector helpers.  A type is the pair of multiplicity vectors
// (k_0..k_{e-1}; l_0..l_{e-2}) of pivot grades on the two alphabet blocks.
// ---------------------------------------------------------------------------

// Prefix sum m_i = k_0 + ... + k_i, with m_{-1} = 0.
inline long long m_prefix(const std::vector<int>& v, int i) {
  if (i < 0) return 0;
  if (i >= static_cast<int>(v.size()))
    throw std::invalid_argument("m_prefix: index out of range");
  long long s = 0;
  for (int w = 0; w <= i; ++w) s += v[static_cast<std::size_t>(w)];
  return s;
}

// Two-step contraction: v^{(i)} = (m_i(v), v_{i+1}, ..., v_{s-1-i}).
inline std::vector<int> type_contraction(const std::vector<int>& v, int i) {
  const int s = static_cast<int>(v.size());
  if (i < 0 || 2 * i >= s) throw std::invalid_argument("type_contraction: bad index");
  std::vector<int> out;
  out.push_back(static_cast<int>(m_prefix(v, i)));
  for (int w = i + 1; w <= s - 1 - i; ++w) out.push_back(v[static_cast<std::size_t>(w)]);
  return out;
}

// Membership in the feasibility region for self-orthogonal types: for every
// floor(s/2) <= i <= s-1,  sum_{w <= s-1-i} 2 v_w + sum_{w = s-i}^{i} v_w <= n.
inline bool type_feasible_so(int n, const std::vector<int>& v) {
  const int s = static_cast<int>(v.size());
  for (const int x : v)
    if (x < 0) return false;
  for (int i = s / 2; i <= s - 1; ++i) {
    long long lhs = 0;
    for (int w = 0; w <= s - 1 - i; ++w) lhs += 2LL * v[static_cast<std::size_t>(w)];
    for (int w = s - i; w <= i; ++w) lhs += v[static_cast<std::size_t>(w)];
    if (lhs > n) return false;
  }
  return true;
}

// Membership in the self-dual locus: mirror symmetry v_i = v_{s-i} for
// 1 <= i <= s-1 together with the exact-size condition
// 2 (v_0 + ... + v_{floor((s-1)/2)}) + [s even] v_{s/2} = n.
inline bool type_self_dual(int n, const std::vector<int>& v) {
  const int s = static_cast<int>(v.size());
  for (const int x : v)
    if (x < 0) return false;
  for (int i = 1; i <= s - 1; ++i)
    if (v[static_cast<std::size_t>(i)] != v[static_cast<std::size_t>(s - i)]) return false;
  long long total = 0;
  for (int w = 0; w <= (s - 1) / 2; ++w) total += 2LL * v[static_cast<std::size_t>(w)];
  if (s % 2 == 0) total += v[static_cast<std::size_t>(s / 2)];
  return total == n;
}

// All nonnegative type vectors of a given length inside the feasibility
// region (coordinates are bounded by n, so the search space is finite).
inline std::vector<std::vector<int>> all_so_types(int n, int s) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(static_cast<std::size_t>(s), 0);
  while (true) {
    if (type_feasible_so(n, v)) out.push_back(v);
    std::size_t i = 0;
    while (i < v.size() && ++v[i] > n) v[i++] = 0;
    if (i == v.size()) break;
  }
  return out;
}

inline std::vector<std::vector<int>> all_sd_types(int n, int s) {
  std::vector<std::vector<int>> out;
  for (auto& v : all_so_types(n, s))
    if (type_self_dual(n, v)) out.push_back(std::move(v));
  return out;
}

// ---------------------------------------------------------------------------
// Chain-count exponents
// ---------------------------------------------------------------------------

// Chain-length >= 4 exponent renderings.
//   printed          the exponent exactly as announced alongside the closed
//                    form; on some types it is fractional (the count q^theta
//                    fails integrality), so it cannot be the intended one.
//   sign_corrected   the same exponent with the k_{e-1} l_{e-2} cross term
//                    sign flipped; always integral, but the census refutes it
//                    on types with both top blocks populated.
//   census_adjusted  printed plus l_{e-2} * (N1 - m_{e-2}(k)): one extra free
//                    residue per (top-grade low-block row, high-block column
//                    not consumed by a lower-grade pivot).  This is the unique
//                    rendering matching the exhaustive census on every type
//                    whose grade-0 and grade-1 rows are absent -- in
//                    particular on all (2,2)-block ambients -- and is the
//                    variant the audit selects.  Census data shows that no
//                    exponent rendering can be exact on grade-0-populated
//                    types at chain length >= 4 (some per-type counts there
//                    carry prime factors foreign to every product of sigma,
//                    Gaussian-binomial and q-power factors), so the closed
//                    form's validity boundary is recorded by the audit rather
//                    than widened here.
enum class ThetaVariant { printed, sign_corrected, census_adjusted };

inline const char* variant_name(ThetaVariant v) {
  switch (v) {
    case ThetaVariant::printed: return "printed";
    case ThetaVariant::sign_corrected: return "sign-corrected";
    case ThetaVariant::census_adjusted: return "census-adjusted";
  }
  return "?";
}

// Chain length 2: prescribed torsion (k_0, k_1; l_0).
inline long long theta2(long long N1, long long N2, long long k0, long long k1,
                        long long l0) {
  const long long twice = k0 * (2 * N1 + 2 * N2 - 3 * k0 - 2 * k1 - 2 * l0 - 1) +
                          2 * l0 * (N1 - 2 * k0 - k1);
  if (twice % 2 != 0) throw std::logic_error("theta2: odd numerator");
  return twice / 2;
}

// Chain length 3: prescribed torsion (k_0, k_1, k_2; l_0, l_1).
inline long long theta3(long long N1, long long N2, const std::vector<int>& k,
                        const std::vector<int>& l) {
  if (k.size() != 3 || l.size() != 2) throw std::invalid_argument("theta3: wrong lengths");
  const long long k0 = k[0], k1 = k[1], k2 = k[2], l0 = l[0], l1 = l[1];
  const long long twice = 2 * (N1 - 3 * k0 - k1 - k2) * (k0 + 2 * l0 + k1 + l1) +
                          2 * k0 * (N1 + 2 * N2 - 1) + 2 * k1 * (N2 - 2 * l0 - l1) +
                          l0 * (2 * N2 - 3 * l0 - 2 * l1 + 2 * k2 - 1);
  if (twice % 2 != 0) throw std::logic_error("theta3: odd numerator");
  return twice / 2;
}

// Chain length >= 4. See the ThetaVariant comment for what distinguishes the
// three renderings.
inline long long theta_general(ThetaVariant variant, long long N1, long long N2,
                               const std::vector<int>& k, const std::vector<int>& l) {
  const int e = static_cast<int>(k.size());
  if (e < 4 || static_cast<int>(l.size()) != e - 1)
    throw std::invalid_argument("theta_general: need chain length >= 4");
  const long long mk = m_prefix(k, e - 2);   // m_{e-2}(k)
  const long long mk1 = m_prefix(k, 1);      // m_1(k)
  const long long ml = m_prefix(l, e - 3);   // m_{e-3}(l)
  const long long ml1 = m_prefix(l, 1);      // m_1(l)
  const long long k0 = k[0], k1 = k[1], l0 = l[0];
  const long long ktop = k[static_cast<std::size_t>(e - 1)];
  const long long ltop = l[static_cast<std::size_t>(e - 2)];
  const long long cross =
      (variant == ThetaVariant::sign_corrected ? +1 : -1) * ktop * ltop;
  const long long adjust =
      (variant == ThetaVariant::census_adjusted ? ltop * (N1 - mk) : 0);
  return k0 * (2 * N1 - 2 * mk - mk1 - 1) + l0 * (2 * N2 - 2 * ml - ml1 - k1 - 1) + cross +
         (mk + ml - k0 - l0) * (N1 + N2 - mk - ml) + 2 * k0 * (N2 - ml) +
         (k0 + 2 * l0) * (N1 - mk - k0) - (mk + ml) * (ktop + ltop) + adjust;
}

// Codes with a fully prescribed torsion chain for chain lengths 2 and 3 are
// counted by a pure power of the field size.
inline mpz_class count_so_prescribed_torsion(std::int64_t q, int N1, int N2,
                                             const std::vector<int>& k,
                                             const std::vector<int>& l) {
  detail::require_odd_field(q, "count_so_prescribed_torsion");
  long long exp = 0;
  if (k.size() == 2 && l.size() == 1)
    exp = theta2(N1, N2, k[0], k[1], l[0]);
  else if (k.size() == 3 && l.size() == 2)
    exp = theta3(N1, N2, k, l);
  else
    throw std::invalid_argument("count_so_prescribed_torsion: chain length must be 2 or 3");
  if (exp < 0) throw std::logic_error("count_so_prescribed_torsion: negative exponent");
  return pow_mpz(mpz_class(static_cast<long>(q)), exp);
}

// Telescoped exponent over contractions, plus the terminal small exponent.
inline long long delta_exponent(ThetaVariant variant, int N1, int N2,
                                const std::vector<int>& k, const std::vector<int>& l) {
  const int e = static_cast<int>(k.size());
  if (static_cast<int>(l.size()) != e - 1)
    throw std::invalid_argument("delta_exponent: mismatched type lengths");
  if (e <= 3) return 0;
  long long total = 0;
  const int top = (e % 2 == 1) ? (e - 5) / 2 : (e - 4) / 2;
  for (int i = 0; i <= top; ++i) {
    const int j = top - i;
    total += theta_general(variant, N1, N2, type_contraction(k, j), type_contraction(l, j));
  }
  return total;
}

inline long long small_exponent(int N1, int N2, const std::vector<int>& k,
                                const std::vector<int>& l) {
  const int e = static_cast<int>(k.size());
  if (static_cast<int>(l.size()) != e - 1)
    throw std::invalid_argument("small_exponent: mismatched type lengths");
  if (e % 2 == 1) {
    const int j = (e - 3) / 2;
    return theta3(N1, N2, type_contraction(k, j), type_contraction(l, j));
  }
  const int j = (e - 2) / 2;
  const auto kk = type_contraction(k, j);
  return theta2(N1, N2, kk[0], kk[1], m_prefix(l, j));
}

// Product of Gaussian binomials attached to a type (the full set).
inline mpz_class binomial_factor(std::int64_t q, int N1, int N2, const std::vector<int>& k,
                                 const std::vector<int>& l) {
  const int e = static_cast<int>(k.size());
  const mpz_class Q(static_cast<long>(q));
  mpz_class out = 1;
  for (int i = 1; i <= (e - 1) / 2; ++i)
    out *= gauss_binom(m_prefix(k, i), k[static_cast<std::size_t>(i)], Q);
  for (int j = 1; j <= (e - 2) / 2; ++j)
    out *= gauss_binom(m_prefix(l, j), l[static_cast<std::size_t>(j)], Q);
  for (int w = (e - 1) / 2; w <= e - 2; ++w)
    out *= gauss_binom(N1 - m_prefix(k, w) - m_prefix(k, e - 2 - w),
                       k[static_cast<std::size_t>(w + 1)], Q);
  for (int s = (e - 2) / 2; s <= e - 3; ++s)
    out *= gauss_binom(N2 - m_prefix(l, s) - m_prefix(l, e - 3 - s),
                       l[static_cast<std::size_t>(s + 1)], Q);
  return out;
}

// The two leading sub-products of binomial_factor (the remaining ones are
// identically 1 on self-dual types).
inline mpz_class binomial_factor_sd(std::int64_t q, const std::vector<int>& k,
                                    const std::vector<int>& l) {
  const int e = static_cast<int>(k.size());
  const mpz_class Q(static_cast<long>(q));
  mpz_class out = 1;
  for (int i = 1; i <= (e - 1) / 2; ++i)
    out *= gauss_binom(m_prefix(k, i), k[static_cast<std::size_t>(i)], Q);
  for (int j = 1; j <= (e - 2) / 2; ++j)
    out *= gauss_binom(m_prefix(l, j), l[static_cast<std::size_t>(j)], Q);
  return out;
}

// Self-orthogonal codes of one fixed type; empty optional when the announced
// exponent fails to produce an integer (possible only for the printed
// chain-length >= 4 variant).
inline std::optional<mpz_class> count_so_typed_checked(
    std::int64_t q, int N1, int N2, const std::vector<int>& k, const std::vector<int>& l,
    ThetaVariant variant = ThetaVariant::census_adjusted) {
  detail::require_odd_field(q, "count_so_typed");
  const int e = static_cast<int>(k.size());
  if (e < 2 || static_cast<int>(l.size()) != e - 1)
    throw std::invalid_argument("count_so_typed: mismatched type lengths");
  if (!type_feasible_so(N1, k) || !type_feasible_so(N2, l)) return mpz_class(0);
  const mpz_class Q(static_cast<long>(q));
  mpz_class out = sigma_so(q, N1, static_cast<int>(m_prefix(k, (e - 1) / 2)));
  out *= sigma_so(q, N2, static_cast<int>(m_prefix(l, (e - 2) / 2)));
  out *= binomial_factor(q, N1, N2, k, l);
  const long long exp = delta_exponent(variant, N1, N2, k, l) + small_exponent(N1, N2, k, l);
  if (exp >= 0) return out * pow_mpz(Q, exp);
  const mpz_class div = pow_mpz(Q, -exp);
  if (!mpz_divisible_p(out.get_mpz_t(), div.get_mpz_t())) return std::nullopt;
  mpz_class exact;
  mpz_divexact(exact.get_mpz_t(), out.get_mpz_t(), div.get_mpz_t());
  return exact;
}

inline mpz_class count_so_typed(std::int64_t q, int N1, int N2, const std::vector<int>& k,
                                const std::vector<int>& l,
                                ThetaVariant variant = ThetaVariant::census_adjusted) {
  auto r = count_so_typed_checked(q, N1, N2, k, l, variant);
  if (!r) throw std::logic_error("count_so_typed: exponent yields a non-integer count");
  return *r;
}

// Total number of self-orthogonal codes (zero code included).
inline mpz_class count_so_total(std::int64_t q, int e, int N1, int N2,
                                ThetaVariant variant = ThetaVariant::census_adjusted) {
  detail::require_odd_field(q, "count_so_total");
  if (e < 2) throw std::invalid_argument("count_so_total: chain length must be >= 2");
  mpz_class out = 0;
  for (const auto& k : all_so_types(N1, e))
    for (const auto& l : all_so_types(N2, e - 1))
      out += count_so_typed(q, N1, N2, k, l, variant);
  return out;
}

// Self-dual codes exist iff the relevant block admits field self-dual codes:
// the high block for odd chain length, the low block for even chain length.
inline bool sd_exists_mixed(std::int64_t q, int e, int N1, int N2) {
  detail::require_odd_field(q, "sd_exists_mixed");
  if (e < 2) throw std::invalid_argument("sd_exists_mixed: chain length must be >= 2");
  return (e % 2 == 1) ? sd_exists_field(q, N1) : sd_exists_field(q, N2);
}

inline mpz_class count_sd_total(std::int64_t q, int e, int N1, int N2,
                                ThetaVariant variant = ThetaVariant::census_adjusted) {
  detail::require_odd_field(q, "count_sd_total");
  if (e < 2) throw std::invalid_argument("count_sd_total: chain length must be >= 2");
  mpz_class out = 0;
  const mpz_class Q(static_cast<long>(q));
  for (const auto& k : all_sd_types(N1, e)) {
    for (const auto& l : all_sd_types(N2, e - 1)) {
      mpz_class term = sigma_so(q, N1, static_cast<int>(m_prefix(k, (e - 1) / 2)));
      term *= sigma_so(q, N2, static_cast<int>(m_prefix(l, (e - 2) / 2)));
      term *= binomial_factor_sd(q, k, l);
      const long long exp =
          delta_exponent(variant, N1, N2, k, l) + small_exponent(N1, N2, k, l);
      if (exp < 0) throw std::logic_error("count_sd_total: negative exponent");
      out += term * pow_mpz(Q, exp);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Complementary-dual counts (any characteristic)
// ---------------------------------------------------------------------------

// Number of LCD [n, s] codes over F_p.  Conventions first: the zero and full
// codes are complementary-dual, so L(n, 0) = L(n, n) = 1.
inline mpz_class lcd_field_count(std::int64_t p, int n, int s) {
  if (!is_prime(p)) throw std::invalid_argument("lcd_field_count: p must be prime");
  if (n < 0) throw std::invalid_argument("lcd_field_count: negative length");
  if (s < 0 || s > n) return 0;
  if (s == 0 || s == n) return 1;
  const mpz_class P(static_cast<long>(p));
  const mpz_class P2 = P * P;
  const long long N = n, S = s;
  if (p == 2) {
    if (n % 2 == 1 && s % 2 == 1)
      return pow_mpz(P, (N - S) * (S + 1) / 2) * gauss_binom((n - 1) / 2, (s - 1) / 2, P2);
    if (n % 2 == 0 && s % 2 == 1)
      return pow_mpz(P, (N * S - S * S + N - 1) / 2) *
             gauss_binom((n - 2) / 2, (s - 1) / 2, P2);
    if (n % 2 == 1 && s % 2 == 0)
      return pow_mpz(P, S * (N - S + 1) / 2) * gauss_binom((n - 1) / 2, s / 2, P2);
    return pow_mpz(P, (N * S - S * S - 2) / 2) *
           ((pow_mpz(P, S) + 1) * gauss_binom((n - 2) / 2, s / 2, P2) +
            (pow_mpz(P, N - S + 1) - pow_mpz(P, N - S) + 1) *
                gauss_binom((n - 2) / 2, (s - 2) / 2, P2));
  }
  if (s % 2 == 1 && n % 2 == 1)
    return pow_mpz(P, (N - S) * (S + 1) / 2) * gauss_binom((n - 1) / 2, (s - 1) / 2, P2);
  if (s % 2 == 1 && n % 2 == 0) {
    const bool plus_case = (p % 4 == 3) && (n % 4 == 2);
    const mpz_class mid = pow_mpz(P, N / 2) + (plus_case ? 1 : -1);
    return pow_mpz(P, (N * S - S * S - 1) / 2) * mid *
           gauss_binom((n - 2) / 2, (s - 1) / 2, P2);
  }
  if (s % 2 == 0 && n % 2 == 1)
    return pow_mpz(P, S * (N - S + 1) / 2) * gauss_binom((n - 1) / 2, s / 2, P2);
  return pow_mpz(P, S * (N - S) / 2) * gauss_binom(n / 2, s / 2, P2);
}

// Total number of complementary-dual codes over the mixed alphabet (zero code
// included).
inline mpz_class count_lcd_mixed(std::int64_t p, int e, int N1, int N2) {
  if (!is_prime(p)) throw std::invalid_argument("count_lcd_mixed: p must be prime");
  if (e < 2) throw std::invalid_argument("count_lcd_mixed: chain length must be >= 2");
  const mpz_class P(static_cast<long>(p));
  mpz_class out = 0;
  for (int i = 0; i <= N1; ++i) {
    for (int j = 0; j <= N2; ++j) {
      const long long exp = static_cast<long long>(N1 - i) * (e - 1) * (i + j) +
                            static_cast<long long>(N2 - j) *
                                (static_cast<long long>(e - 1) * i +
                                 static_cast<long long>(e - 2) * j);
      out += lcd_field_count(p, N1, i) * lcd_field_count(p, N2, j) * pow_mpz(P, exp);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Wrappers for additive codes over extension rings: a length-n code unpacks
// into the mixed alphabet with N1 = n r t and N2 = n r (k - t).
// ---------------------------------------------------------------------------

inline mpz_class count_so_additive(const EisensteinParams& par, int n,
                                   ThetaVariant variant = ThetaVariant::census_adjusted) {
  if (par.e < 2) throw std::invalid_argument("count_so_additive: need e >= 2");
  return count_so_total(par.p, par.e, n * par.hi_rank(), n * par.lo_rank(), variant);
}

inline mpz_class count_sd_additive(const EisensteinParams& par, int n,
                                   ThetaVariant variant = ThetaVariant::census_adjusted) {
  if (par.e < 2) throw std::invalid_argument("count_sd_additive: need e >= 2");
  return count_sd_total(par.p, par.e, n * par.hi_rank(), n * par.lo_rank(), variant);
}

inline bool sd_exists_additive(const EisensteinParams& par, int n) {
  if (par.e < 2) throw std::invalid_argument("sd_exists_additive: need e >= 2");
  return sd_exists_mixed(par.p, par.e, n * par.hi_rank(), n * par.lo_rank());
}

inline mpz_class count_lcd_additive(const EisensteinParams& par, int n) {
  if (par.e < 2) throw std::invalid_argument("count_lcd_additive: need e >= 2");
  return count_lcd_mixed(par.p, par.e, n * par.hi_rank(), n * par.lo_rank());
}

}  // namespace chaincode
