// Canonical normal form, kernels, and bilinear products over Z_{p^mu}.
//
// The load-bearing check is the closure sweep: over every pair of generators
// in a small ambient module, the explicit subgroup closure (independent
// breadth-first span, no matrix code involved) must agree with the normal
// form on identity, cardinality, and membership.  That pins down "equal
// spans iff byte-identical forms", which the census layer relies on.
#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

#include "chaincode/modmatrix.hpp"

using namespace chaincode;

namespace {

// Explicit subgroup closure of a set of rows in Z_m^n (BFS, no matrix code).
std::set<std::vector<std::int64_t>> closure(const Modulus& m,
                                            const std::vector<std::vector<std::int64_t>>& gens,
                                            std::size_t n) {
  std::set<std::vector<std::int64_t>> seen;
  seen.insert(std::vector<std::int64_t>(n, 0));
  std::vector<std::vector<std::int64_t>> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& w : frontier) {
      for (const auto& g : gens) {
        std::vector<std::int64_t> s(n);
        for (std::size_t i = 0; i < n; ++i) s[i] = m.reduce(w[i] + g[i]);
        if (seen.insert(s).second) next.push_back(std::move(s));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

ResidueMatrix from_rows(const Modulus& m, const std::vector<std::vector<std::int64_t>>& rows,
                        std::size_t n) {
  std::vector<std::int64_t> flat;
  for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
  return ResidueMatrix(m, rows.size(), n, std::move(flat));
}

}  // namespace

TEST_CASE("normal form fixed points and idempotence") {
  Modulus z4(2, 2);
  // already canonical: pivots 2 and 2, entry above the second pivot is 1 < 2
  ResidueMatrix h(z4, 2, 2, {2, 1, 0, 2});
  CHECK(howell_form(h) == h);

  Modulus z9(3, 2);
  ResidueMatrix g(z9, 3, 2, {3, 0, 6, 0, 0, 0});
  ResidueMatrix expect(z9, 1, 2, {3, 0});
  CHECK(howell_form(g) == expect);
  CHECK(howell_form(howell_form(g)) == howell_form(g));
}

TEST_CASE("normal form is invariant under span-preserving edits") {
  Modulus m(3, 2);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::int64_t> entry(0, 8);
  for (int trial = 0; trial < 200; ++trial) {
    ResidueMatrix M(m, 2, 3);
    for (auto& x : M.a) x = entry(rng);
    ResidueMatrix H = howell_form(M);

    // append a random combination of the rows
    std::int64_t c0 = entry(rng), c1 = entry(rng);
    ResidueMatrix M2(m, 3, 3);
    std::copy(M.a.begin(), M.a.end(), M2.a.begin());
    for (std::size_t j = 0; j < 3; ++j) M2.at(2, j) = m.reduce(c0 * M.at(0, j) + c1 * M.at(1, j));
    CHECK(howell_form(M2) == H);

    // scale one row by a unit
    ResidueMatrix M3 = M;
    for (std::size_t j = 0; j < 3; ++j) M3.at(0, j) = m.mul(M3.at(0, j), 2);
    CHECK(howell_form(M3) == H);
  }
}

TEST_CASE("closure sweep: forms separate and represent submodules exactly") {
  // Every submodule of Z_9 x Z_9 generated by at most two elements, checked
  // against the explicit closure.
  Modulus m(3, 2);
  const std::size_t n = 2;
  std::vector<std::vector<std::int64_t>> elements;
  for (std::int64_t a = 0; a < 9; ++a)
    for (std::int64_t b = 0; b < 9; ++b) elements.push_back({a, b});

  std::map<std::vector<std::int64_t>, std::set<std::vector<std::int64_t>>> form_to_set;
  for (const auto& g1 : elements) {
    for (const auto& g2 : elements) {
      auto cl = closure(m, {g1, g2}, n);
      ResidueMatrix H = howell_form(from_rows(m, {g1, g2}, n));

      // cardinality agrees with the explicit closure
      CHECK(span_cardinality(H) == mpz_class(static_cast<unsigned long>(cl.size())));

      // identical submodule iff identical normal form
      auto key = H.a;
      key.push_back(static_cast<std::int64_t>(H.rows));
      auto [it, inserted] = form_to_set.emplace(key, cl);
      if (!inserted) CHECK(it->second == cl);

      // membership agrees on a sample of points
      CHECK(in_span(H, {0, 0}));
      CHECK(in_span(H, *cl.begin()));
      CHECK(in_span(H, *cl.rbegin()));
      std::size_t misses = 0;
      for (const auto& x : elements)
        if (in_span(H, x) != (cl.count(x) > 0)) ++misses;
      CHECK(misses == 0);
    }
  }
  // distinct forms really correspond to distinct submodules: count them
  std::set<std::set<std::vector<std::int64_t>>> distinct_sets;
  for (auto& [k, v] : form_to_set) distinct_sets.insert(v);
  CHECK(distinct_sets.size() == form_to_set.size());
}

TEST_CASE("kernel agrees with brute force over several moduli") {
  std::mt19937 rng(11);
  for (auto [p, mu] : std::vector<std::pair<std::int64_t, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    Modulus m(p, mu);
    std::uniform_int_distribution<std::int64_t> entry(0, m.m - 1);
    for (int trial = 0; trial < 60; ++trial) {
      ResidueMatrix M(m, 2, 3);
      for (auto& x : M.a) x = entry(rng);
      ResidueMatrix K = kernel(M);

      // brute force {x : M x^T = 0}
      std::size_t brute = 0;
      std::vector<std::int64_t> x(3, 0);
      while (true) {
        bool ok = true;
        for (std::size_t r = 0; r < 2 && ok; ++r) {
          std::int64_t s = 0;
          for (std::size_t c = 0; c < 3; ++c) s += M.at(r, c) * x[c];
          ok = m.reduce(s) == 0;
        }
        if (ok) {
          ++brute;
          CHECK(in_span(K, x));
        }
        std::size_t i = 0;
        while (i < x.size() && ++x[i] == m.m) x[i++] = 0;
        if (i == x.size()) break;
      }
      CHECK(span_cardinality(K) == mpz_class(static_cast<unsigned long>(brute)));
    }
  }
}

TEST_CASE("split bilinear product") {
  // rows over Z9 with a two-column lo block (entries are lower-ring values)
  Modulus m(3, 2);
  ResidueMatrix G(m, 2, 4,
                  {3, 0, 0, 0,    // (3,0 | 0,0)
                   1, 1, 1, 0});  // (1,1 | 1,0)
  ResidueMatrix D = diamond(G, G, 2, 3);
  REQUIRE(D.rows == 2);
  REQUIRE(D.cols == 2);
  CHECK(D.at(0, 0) == 0);  // 9 = 0
  CHECK(D.at(0, 1) == 3);  // 3*1
  CHECK(D.at(1, 0) == 3);
  CHECK(D.at(1, 1) == 5);  // 1 + 1 + 3*1
}

TEST_CASE("symmetrized product and its kernel size") {
  // For full-row-rank A (s x n) over F_q with q odd, the map
  // B -> A B^T + B A^T onto symmetric matrices has kernel of size
  // q^{s(2n - s - 1)/2}.  In characteristic two the diagonal of the image
  // vanishes identically, so the kernel grows by a factor q^s.
  auto kernel_size = [](std::int64_t q) {
    Modulus f(q, 1);
    ResidueMatrix A(f, 2, 3, {1, 0, 0, 0, 1, 0});
    std::size_t kernel_count = 0;
    std::vector<std::int64_t> b(6, 0);
    while (true) {
      ResidueMatrix B(f, 2, 3, b);
      ResidueMatrix S = symmetrize(A, B);
      if (std::all_of(S.a.begin(), S.a.end(), [](std::int64_t x) { return x == 0; }))
        ++kernel_count;
      std::size_t i = 0;
      while (i < b.size() && ++b[i] == q) b[i++] = 0;
      if (i == b.size()) break;
    }
    return kernel_count;
  };
  // s=2, n=3, odd q: q^{2*(6-2-1)/2} = q^3
  CHECK(kernel_size(3) == 27);
  CHECK(kernel_size(5) == 125);
  // q = 2: extra factor q^s on top of q^3
  CHECK(kernel_size(2) == 32);
}

TEST_CASE("solution counting over the residue field") {
  Modulus f(3, 1);
  ResidueMatrix A(f, 2, 4, {1, 2, 0, 1, 0, 1, 1, 1});
  REQUIRE(field_rank(A) == 2);
  CHECK(count_solutions(A, 1) == 9);   // 3^{(4-2)*1}
  CHECK(count_solutions(A, 3) == 729);

  // exhaustive companion agrees for every right-hand side
  for (std::int64_t j0 = 0; j0 < 3; ++j0)
    for (std::int64_t j1 = 0; j1 < 3; ++j1)
      CHECK(solve_all(A, {j0, j1}).size() == 9);

  ResidueMatrix singular(f, 2, 3, {1, 1, 0, 2, 2, 0});
  CHECK_THROWS_AS(count_solutions(singular, 1), std::invalid_argument);
  // rank deficit shows up as q^{n - rank} homogeneous solutions
  CHECK(solve_all(singular, {0, 0}).size() == 9);  // 3^{3-1}
}
