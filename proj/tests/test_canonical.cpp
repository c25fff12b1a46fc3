#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "rooklab/canonical.hpp"

using namespace rooklab;

TEST_CASE("automorphism counts agree with brute force on random small graphs") {
  std::mt19937 rng(314);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + static_cast<std::size_t>(trial % 5);
    const Graph g = oracle::random_graph(n, trial % 3 == 0 ? 0.3 : 0.5, rng);
    CHECK(automorphism_count(g) == oracle::brute_automorphisms(g));
  }
}

TEST_CASE("isomorphism agrees with brute force") {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph a = oracle::random_graph(6, 0.5, rng);
    const Graph b = trial % 2 == 0 ? permute(a, oracle::random_permutation(6, rng)) : oracle::random_graph(6, 0.5, rng);
    CHECK(isomorphic(a, b) == oracle::brute_isomorphic(a, b));
  }
}

TEST_CASE("canonical forms are invariant under relabelling") {
  std::mt19937 rng(99);
  for (const Graph& g : {build_sr(4, 3), build_sr(3, 4), hypercube(4), build_johnson(6, 2)}) {
    const auto f = canonical_form(g);
    for (int k = 0; k < 3; ++k) {
      const Graph h = permute(g, oracle::random_permutation(g.order(), rng));
      CHECK(canonical_form(h).same_graph_as(f));
      CHECK(CertificateHash{}(canonical_form(h)) == CertificateHash{}(f));
    }
    CHECK(is_automorphism(g, std::vector<int>(f.relabeling.size(), 0)) == false);
  }
}

TEST_CASE("known automorphism group orders") {
  CHECK(automorphism_count(complete_graph(5)) == 120);
  CHECK(automorphism_count(cycle_graph(7)) == 14);
  CHECK(automorphism_count(hypercube(4)) == 384);
  CHECK(automorphism_count(complement(build_johnson(5, 2))) == 120);
  CHECK(automorphism_count(build_sr(4, 3)) == 48);
  CHECK(automorphism_count(build_sr(5, 3)) == 240);
  CHECK(automorphism_count(build_sr(4, 4)) == 24);
  CHECK(automorphism_count(build_sr(5, 4)) == 120);
  CHECK(automorphism_count(Graph{}) == 1);
}

TEST_CASE("SR(4,2) and J(5,2) are isomorphic; SR(4,3) and J(6,3) are not") {
  CHECK(isomorphic(build_sr(4, 2), build_johnson(5, 2)));
  CHECK_FALSE(isomorphic(build_sr(4, 3), build_johnson(6, 3)));
  CHECK_FALSE(isomorphic(complete_graph(3), complete_graph(4)));
}

TEST_CASE("is_automorphism") {
  const Graph c = cycle_graph(5);
  CHECK(is_automorphism(c, {1, 2, 3, 4, 0}));
  CHECK_FALSE(is_automorphism(c, {1, 0, 2, 3, 4}));
}

TEST_CASE("colour refinement separates by degree") {
  GraphBuilder b(4);
  b.add_edge(0, 1);
  b.add_edge(1, 2);
  b.add_edge(2, 3);
  const auto cells = color_refinement(std::move(b).build());
  CHECK(cells.size() == 2);
}

TEST_CASE("size limits are enforced") {
  CanonicalOptions tight;
  tight.max_vertices = 10;
  CHECK_THROWS_AS(canonical_form(build_sr(4, 3), tight), SizeLimit);
}
