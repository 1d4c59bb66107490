// Matrices over a chain ring Z_{p^mu}: canonical row-span normal form
// (pivot entries p^v, entries above a pivot reduced modulo p^v, spans
// saturated so equal row spans give byte-identical forms), kernels, span
// cardinality, and the split bilinear product used by mixed-alphabet codes.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "chaincode/ringcore.hpp"

namespace chaincode {

struct ResidueMatrix {
  Modulus m;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> a;  // row-major, reduced representatives

  ResidueMatrix() = default;
  ResidueMatrix(Modulus mod, std::size_t r, std::size_t c)
      : m(mod), rows(r), cols(c), a(r * c, 0) {}
  ResidueMatrix(Modulus mod, std::size_t r, std::size_t c, std::vector<std::int64_t> entries)
      : m(mod), rows(r), cols(c), a(std::move(entries)) {
    if (a.size() != rows * cols) throw std::invalid_argument("ResidueMatrix: size mismatch");
    for (auto& x : a) x = m.reduce(x);
  }

  std::int64_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  std::int64_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  std::vector<std::int64_t> row(std::size_t i) const {
    return {a.begin() + static_cast<std::ptrdiff_t>(i * cols),
            a.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols)};
  }

  bool operator==(const ResidueMatrix&) const = default;
};

namespace detail {

// rows[i] -= c * rows[j], in place on flat row vectors
inline void row_axpy(const Modulus& m, std::vector<std::int64_t>& target,
                     const std::vector<std::int64_t>& source, std::int64_t c) {
  c = m.reduce(c);
  if (c == 0) return;
  for (std::size_t j = 0; j < target.size(); ++j)
    target[j] = m.reduce(target[j] - c * source[j]);
}

inline void row_scale(const Modulus& m, std::vector<std::int64_t>& r, std::int64_t c) {
  for (auto& x : r) x = m.mul(x, c);
}

inline bool row_is_zero(const std::vector<std::int64_t>& r) {
  return std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x == 0; });
}

}  // namespace detail

// Canonical row-span normal form.  Rows are processed column by column; each
// pivot is normalized to p^v, every other candidate row is cleared at the
// pivot column, and the annihilator p^{mu-v} * (pivot row) is fed back so the
// span stays saturated.  A final pass reduces entries above each pivot into
// [0, p^v).  Zero rows are dropped.  Two generating sets span the same
// submodule iff their normal forms are identical.
inline ResidueMatrix howell_form(const ResidueMatrix& M) {
  const Modulus& m = M.m;
  std::vector<std::vector<std::int64_t>> work;
  work.reserve(M.rows);
  for (std::size_t i = 0; i < M.rows; ++i) {
    auto r = M.row(i);
    if (!detail::row_is_zero(r)) work.push_back(std::move(r));
  }

  struct Pivot {
    std::size_t col;
    int val;
    std::vector<std::int64_t> row;
  };
  std::vector<Pivot> pivots;

  for (std::size_t c = 0; c < M.cols; ++c) {
    // pick the work row with minimal valuation at column c
    std::size_t best = work.size();
    int best_v = m.mu;
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (work[i][c] == 0) continue;
      int v = m.valuation(work[i][c]);
      if (v < best_v) {
        best_v = v;
        best = i;
      }
    }
    if (best == work.size()) continue;

    std::vector<std::int64_t> piv = std::move(work[best]);
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(best));

    const std::int64_t pv = checked_pow(m.p, best_v);
    detail::row_scale(m, piv, m.inv_unit(piv[c] / pv));  // pivot entry -> p^v

    for (auto& s : work) {
      if (s[c] != 0) detail::row_axpy(m, s, piv, s[c] / pv);
    }
    // saturate: p^{mu - v} * pivot row stays in the span and starts later
    if (best_v > 0) {
      std::vector<std::int64_t> ann = piv;
      detail::row_scale(m, ann, checked_pow(m.p, m.mu - best_v));
      if (!detail::row_is_zero(ann)) work.push_back(std::move(ann));
    }
    pivots.push_back({c, best_v, std::move(piv)});
  }

  // entries above a pivot reduced modulo p^{v}
  for (std::size_t j = 0; j < pivots.size(); ++j) {
    const std::int64_t pv = checked_pow(m.p, pivots[j].val);
    for (std::size_t i = 0; i < j; ++i) {
      std::int64_t e = pivots[i].row[pivots[j].col];
      if (e >= pv) detail::row_axpy(m, pivots[i].row, pivots[j].row, e / pv);
    }
  }

  ResidueMatrix H(m, pivots.size(), M.cols);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    std::copy(pivots[i].row.begin(), pivots[i].row.end(), H.a.begin() + static_cast<std::ptrdiff_t>(i * M.cols));
  return H;
}

// Pivot positions (column, valuation) of a matrix already in normal form.
inline std::vector<std::pair<std::size_t, int>> pivot_profile(const ResidueMatrix& H) {
  std::vector<std::pair<std::size_t, int>> out;
  out.reserve(H.rows);
  for (std::size_t i = 0; i < H.rows; ++i) {
    std::size_t c = 0;
    while (c < H.cols && H.at(i, c) == 0) ++c;
    if (c == H.cols) throw std::invalid_argument("pivot_profile: zero row");
    out.emplace_back(c, H.m.valuation(H.at(i, c)));
  }
  return out;
}

// |row span| = prod p^{mu - v_i} over the pivots of the normal form.
inline mpz_class span_cardinality(const ResidueMatrix& H) {
  mpz_class n = 1;
  for (const auto& [c, v] : pivot_profile(H)) {
    mpz_class f;
    mpz_ui_pow_ui(f.get_mpz_t(), static_cast<unsigned long>(H.m.p),
                  static_cast<unsigned long>(H.m.mu - v));
    n *= f;
  }
  return n;
}

// Membership test against a matrix in normal form: reduce x by each pivot
// row in turn; x lies in the span iff the residual vanishes.
inline bool in_span(const ResidueMatrix& H, std::vector<std::int64_t> x) {
  const Modulus& m = H.m;
  for (auto& e : x) e = m.reduce(e);
  for (std::size_t i = 0; i < H.rows; ++i) {
    std::size_t c = 0;
    while (c < H.cols && H.at(i, c) == 0) ++c;
    if (c == H.cols) continue;
    const std::int64_t pv = H.at(i, c);  // p^{v}
    if (x[c] % pv != 0) return false;
    std::int64_t q = x[c] / pv;
    for (std::size_t j = 0; j < H.cols; ++j) x[j] = m.reduce(x[j] - q * H.at(i, j));
  }
  return detail::row_is_zero(x);
}

// Kernel {x : M x^T = 0}, returned in canonical normal form.  Computed from
// the normal form of [M^T | I]: the saturation property guarantees that the
// rows whose left part vanishes generate every such x.
inline ResidueMatrix kernel(const ResidueMatrix& M) {
  const Modulus& m = M.m;
  const std::size_t n = M.cols, r = M.rows;
  ResidueMatrix aug(m, n, r + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < r; ++j) aug.at(i, j) = M.at(j, i);
    aug.at(i, r + i) = 1;
  }
  ResidueMatrix H = howell_form(aug);
  std::vector<std::int64_t> gens;
  std::size_t count = 0;
  for (std::size_t i = 0; i < H.rows; ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < r && left_zero; ++j) left_zero = H.at(i, j) == 0;
    if (!left_zero) continue;
    for (std::size_t j = 0; j < n; ++j) gens.push_back(H.at(i, r + j));
    ++count;
  }
  return howell_form(ResidueMatrix(m, count, n, std::move(gens)));
}

// Split bilinear product of row sets: with G = [A1 | B1] and H = [A2 | B2]
// (split after column n1), returns A1 A2^T + gamma * B1 B2^T over Z_{p^mu}.
// The B blocks hold ordinary representatives (their natural modulus is one
// gamma-power lower; any lift works because of the gamma factor).
inline ResidueMatrix diamond(const ResidueMatrix& G, const ResidueMatrix& H, std::size_t n1,
                             std::int64_t gamma) {
  if (G.cols != H.cols || n1 > G.cols) throw std::invalid_argument("diamond: shape mismatch");
  if (!(G.m == H.m)) throw std::invalid_argument("diamond: modulus mismatch");
  const Modulus& m = G.m;
  ResidueMatrix out(m, G.rows, H.rows);
  for (std::size_t i = 0; i < G.rows; ++i) {
    for (std::size_t j = 0; j < H.rows; ++j) {
      std::int64_t hi = 0, lo = 0;
      for (std::size_t c = 0; c < n1; ++c) hi = m.reduce(hi + G.at(i, c) * H.at(j, c));
      for (std::size_t c = n1; c < G.cols; ++c) lo = m.reduce(lo + G.at(i, c) * H.at(j, c));
      out.at(i, j) = m.reduce(hi + gamma * lo);
    }
  }
  return out;
}

// A B^T + B A^T (same shapes, same modulus).
inline ResidueMatrix symmetrize(const ResidueMatrix& A, const ResidueMatrix& B) {
  if (A.rows != B.rows || A.cols != B.cols || !(A.m == B.m))
    throw std::invalid_argument("symmetrize: shape mismatch");
  const Modulus& m = A.m;
  ResidueMatrix out(m, A.rows, A.rows);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < A.rows; ++j) {
      std::int64_t s = 0;
      for (std::size_t c = 0; c < A.cols; ++c)
        s = m.reduce(s + A.at(i, c) * B.at(j, c) + B.at(i, c) * A.at(j, c));
      out.at(i, j) = s;
    }
  return out;
}

// Rank of a matrix over the residue field (mu must be 1).
inline std::size_t field_rank(const ResidueMatrix& A) {
  if (A.m.mu != 1) throw std::invalid_argument("field_rank: modulus must be a field");
  return howell_form(A).rows;
}

// Number of solutions X (n x ell) of A X = J over the residue field, for A
// (s x n) of full row rank s: q^{(n-s) ell}, independent of J.
inline mpz_class count_solutions(const ResidueMatrix& A, std::size_t ell) {
  if (A.m.mu != 1) throw std::invalid_argument("count_solutions: modulus must be a field");
  if (field_rank(A) != A.rows) throw std::invalid_argument("count_solutions: matrix must have full row rank");
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(A.m.p),
                static_cast<unsigned long>((A.cols - A.rows) * ell));
  return out;
}

// Exhaustive companion to count_solutions: all x over the residue field with
// A x = j.  Intended for small n only.
inline std::vector<std::vector<std::int64_t>> solve_all(const ResidueMatrix& A,
                                                        const std::vector<std::int64_t>& j) {
  if (A.m.mu != 1) throw std::invalid_argument("solve_all: modulus must be a field");
  if (j.size() != A.rows) throw std::invalid_argument("solve_all: rhs size mismatch");
  const std::int64_t q = A.m.p;
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> x(A.cols, 0);
  while (true) {
    bool ok = true;
    for (std::size_t r = 0; r < A.rows && ok; ++r) {
      std::int64_t s = 0;
      for (std::size_t c = 0; c < A.cols; ++c) s += A.at(r, c) * x[c];
      ok = A.m.reduce(s) == A.m.reduce(j[r]);
    }
    if (ok) out.push_back(x);
    std::size_t i = 0;
    while (i < x.size() && ++x[i] == q) x[i++] = 0;
    if (i == x.size()) break;
  }
  return out;
}

}  // namespace chaincode
