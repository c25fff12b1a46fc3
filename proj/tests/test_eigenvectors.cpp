#include "doctest.h"

#include <algorithm>

#include "oracles.hpp"
#include "rooklab/canonical.hpp"
#include "rooklab/closed_forms.hpp"
#include "rooklab/eigenvectors.hpp"

using namespace rooklab;

namespace {

std::size_t family_rank(const std::vector<SparseVector>& vs, std::size_t dim) {
  return oracle::rational_rank(stack_rows(vs, dim));
}

}  // namespace

TEST_CASE("permutations and inversion vectors") {
  const auto pi = Permutation::parse("231");
  CHECK(inversion_vector(pi) == std::vector<int>{1, 1, 0});
  CHECK(pi.inversions() == 2);
  CHECK(pi.sign() == 1);
  CHECK(Permutation::parse("2,1,3").sign() == -1);
  CHECK(Permutation::parse("2 3 1") == pi);
  CHECK(inversion_vector(Permutation::reversal(5)) == std::vector<int>{4, 3, 2, 1, 0});
  CHECK(Permutation::from_inversion_vector({1, 1, 0}) == pi);
  CHECK(pi.to_string() == "231");
  CHECK_THROWS_AS(Permutation::parse("221"), Error);
  CHECK_THROWS_AS(Permutation({1, 4, 2}), Error);
  for (int m = 1; m <= 6; ++m)
    for (int n = 0; n <= m * (m - 1) / 2; ++n) {
      const auto perms = permutations_with_inversions(m, n);
      CHECK(static_cast<std::int64_t>(perms.size()) == mahonian(m, n));
      CHECK(std::is_sorted(perms.begin(), perms.end()));
      for (const auto& p : perms) CHECK(Permutation::from_inversion_vector(inversion_vector(p)) == p);
    }
}

TEST_CASE("admissible sets") {
  CHECK(admissible_set(Permutation::reversal(4)).size() == 24);
  CHECK(admissible_set(Permutation::identity(4)).size() == 1);
  const auto adm = admissible_set(Permutation::parse("231"));
  CHECK(adm.size() == 4);
  for (const auto& a : adm) CHECK(std::accumulate(a.x.begin(), a.x.end(), 0) == 2);
}

TEST_CASE("F_pi are independent (-n)-eigenvectors") {
  for (int m = 1; m <= 5; ++m)
    for (int n = 0; n <= std::min(6, m * (m - 1) / 2); ++n) {
      const Graph g = build_sr(m, n);
      std::vector<SparseVector> vs;
      for (const auto& pi : permutations_with_inversions(m, n)) {
        vs.push_back(f_pi(pi));
        CHECK(verify_eigenvector(g, vs.back(), -n));
      }
      CHECK(static_cast<std::int64_t>(family_rank(vs, g.order())) == mahonian(m, n));
    }
}

TEST_CASE("F_pi of the identity on SR(m,0)") {
  const auto v = f_pi(Permutation::identity(3));
  CHECK(v.support_size() == 1);
  CHECK(v.at(0) == 1);
}

TEST_CASE("F_pw for the half-integral w") {
  const auto w = canonical_w(3);
  CHECK(w == std::vector<Rational>{Rational(-1), Rational(0), Rational(1)});
  const auto w4 = canonical_w(4);
  CHECK(w4.front() == Rational(-3, 2));
  const std::vector<Rational> p{Rational(1), Rational(1), Rational(1)};
  const auto v = f_pw(p, w, 3, 3);
  CHECK(v.support_size() == 6);
  CHECK(verify_eigenvector(build_sr(3, 3), v, -3));
  CHECK(canonical_p_values(3, 4).size() == 3);
  CHECK_THROWS_AS(f_pw(p, {Rational(0), Rational(0), Rational(0)}, 3, 3), InvalidOrbit);
  CHECK_THROWS_AS(f_pw({Rational(0), Rational(1), Rational(2)}, w, 3, 3), InvalidOrbit);
  for (int m = 2; m <= 4; ++m)
    for (int n = 0; n <= 8; ++n) {
      const auto ps = canonical_p_values(m, n);
      const std::int64_t expected = n >= (m - 1) * (m - 2) / 2 ? binom(n - (m - 1) * (m - 2) / 2, m - 1) : 0;
      CHECK(static_cast<std::int64_t>(ps.size()) == expected);
      if (ps.empty()) continue;
      const Graph g = build_sr(m, n);
      std::vector<SparseVector> vs;
      for (const auto& pv : ps) {
        vs.push_back(f_pw(pv, canonical_w(m), m, n));
        CHECK(verify_eigenvector(g, vs.back(), -m * (m - 1) / 2));
      }
      CHECK(family_rank(vs, g.order()) == ps.size());
    }
}

TEST_CASE("Gamma graphs") {
  const Graph k33 = gamma_graph(Permutation::reversal(3));
  CHECK(isomorphic(k33, complete_bipartite(3, 3)));
  CHECK(isomorphic(gamma_graph(Permutation::reversal(4)), transposition_cayley_graph(4)));
  CHECK(isomorphic(gamma_graph(Permutation::parse("213")), complete_graph(2)));
  CHECK(isomorphic(gamma_graph(Permutation::parse("231")), cycle_graph(4)));
}

TEST_CASE("Gamma classification for small n") {
  auto names = [](int n) {
    std::vector<std::string> out;
    for (const auto& c : classify_gamma(n)) {
      out.push_back(c.name);
      CHECK(c.bipartite);
      CHECK(c.degree == static_cast<std::size_t>(n));
      CHECK(c.spectrum.missing == 0);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(names(1) == std::vector<std::string>{"Q_1"});
  CHECK(names(2) == std::vector<std::string>{"Q_2"});
  CHECK(names(3) == std::vector<std::string>{"K_{3,3}", "Q_3"});
  CHECK(names(4) == std::vector<std::string>{"K_{3,3} x K_2", "Q_4"});
}

TEST_CASE("Gamma beyond m = 2n is already classified") {
  for (int n = 1; n <= 3; ++n) {
    const auto classes = classify_gamma(n);
    for (int m = 2 * n + 1; m <= 7; ++m)
      for (const auto& pi : permutations_with_inversions(m, n)) {
        const auto f = canonical_form(gamma_graph(pi));
        CHECK(std::any_of(classes.begin(), classes.end(), [&](const GammaClass& c) { return c.form.same_graph_as(f); }));
      }
  }
}

TEST_CASE("small-n eigenvectors") {
  using K = SmallEigenvectorKind;
  CHECK(verify_eigenvector(build_sr(4, 3), small_n_eigenvector(K::kN3MMinus3, 4, 1), 1));
  CHECK(verify_eigenvector(build_sr(4, 4), small_n_eigenvector(K::kN4TwoMMinus5, 4, 2), 3));
  CHECK(parse_small_kind("n4_m-6") == K::kN4MMinus6);
  for (int m = 4; m <= 6; ++m) {
    std::vector<SparseVector> a, b, c;
    for (int h = 1; h <= m; ++h) {
      a.push_back(small_n_eigenvector(K::kN3MMinus3, m, h));
      b.push_back(small_n_eigenvector(K::kN4TwoMMinus5, m, h));
      for (int i = h + 1; i <= m; ++i) c.push_back(small_n_eigenvector(K::kN4MMinus6, m, h, i));
    }
    const Graph g3 = build_sr(m, 3);
    const Graph g4 = build_sr(m, 4);
    for (const auto& v : a) CHECK(verify_eigenvector(g3, v, small_kind_eigenvalue(K::kN3MMinus3, m)));
    for (const auto& v : b) CHECK(verify_eigenvector(g4, v, small_kind_eigenvalue(K::kN4TwoMMinus5, m)));
    for (const auto& v : c) CHECK(verify_eigenvector(g4, v, small_kind_eigenvalue(K::kN4MMinus6, m)));
    CHECK(family_rank(a, g3.order()) == static_cast<std::size_t>(m - 1));
    CHECK(family_rank(b, g4.order()) == static_cast<std::size_t>(m));
    CHECK(family_rank(c, g4.order()) == static_cast<std::size_t>(m * (m - 1) / 2));
  }
}
