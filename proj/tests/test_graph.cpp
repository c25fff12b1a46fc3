#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "rooklab/canonical.hpp"
#include "rooklab/graph.hpp"
#include "rooklab/graph_io.hpp"

using namespace rooklab;

TEST_CASE("compositions are enumerated lexicographically with the right count") {
  for (int m = 1; m <= 6; ++m) {
    for (int n = 0; n <= 6; ++n) {
      const auto v = enumerate_vertices(m, n);
      CHECK(static_cast<std::int64_t>(v.size()) == binom(n + m - 1, n));
      CHECK(std::is_sorted(v.begin(), v.end()));
      for (std::size_t i = 0; i < v.size(); ++i) {
        CHECK(std::accumulate(v[i].begin(), v[i].end(), 0) == n);
        CHECK(composition_index(v[i]) == i);
      }
    }
  }
  CHECK(enumerate_vertices(3, 2).front() == Composition{0, 0, 2});
  CHECK(enumerate_vertices(3, 2).back() == Composition{2, 0, 0});
  CHECK_THROWS_AS(composition_index({1, -1}), Error);
}

TEST_CASE("SR(m,n) basic shape") {
  SUBCASE("valency n(m-1) and edge count") {
    for (int m = 1; m <= 5; ++m)
      for (int n = 0; n <= 5; ++n) {
        const Graph g = build_sr(m, n);
        CHECK(is_simple(g));
        REQUIRE(g.regular_degree().has_value());
        if (g.order() > 1) CHECK(*g.regular_degree() == static_cast<std::size_t>(n * (m - 1)));
        CHECK(g.family() == Family::kSimplicialRook);
        CHECK(g.parameters() == std::make_pair(m, n));
      }
  }
  SUBCASE("SR(2,n) is complete and SR(m,1) is complete") {
    for (int n = 1; n <= 6; ++n) CHECK(build_sr(2, n) == complete_graph(static_cast<std::size_t>(n + 1)));
    for (int m = 1; m <= 6; ++m) CHECK(build_sr(m, 1) == complete_graph(static_cast<std::size_t>(m)));
  }
  SUBCASE("adjacency means exactly two coordinates differ") {
    const Graph g = build_sr(4, 3);
    for (std::size_t i = 0; i < g.order(); ++i)
      for (std::size_t j = 0; j < g.order(); ++j) {
        int diff = 0;
        for (std::size_t c = 0; c < 4; ++c) diff += g.label(i)[c] != g.label(j)[c];
        CHECK(g.adjacent(i, j) == (diff == 2));
      }
  }
  SUBCASE("find locates labels") {
    const Graph g = build_sr(4, 3);
    CHECK(g.find({3, 0, 0, 0}).has_value());
    CHECK_FALSE(g.find({3, 1, 0, 0}).has_value());
  }
}

TEST_CASE("SR(m,2) is the triangular graph J(m+1,2)") {
  for (int m = 2; m <= 6; ++m) CHECK(isomorphic(build_sr(m, 2), build_johnson(m + 1, 2)));
}

TEST_CASE("Johnson graphs") {
  const Graph j = build_johnson(5, 2);
  CHECK(j.order() == 10);
  CHECK(*j.regular_degree() == 6);
  CHECK(automorphism_count(complement(j)) == 120);
  CHECK(build_johnson(4, 1) == complete_graph(4));
}

TEST_CASE("small named graphs") {
  CHECK(hypercube(3).order() == 8);
  CHECK(*hypercube(3).regular_degree() == 3);
  CHECK(complete_bipartite(3, 3).edge_count() == 9);
  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK(transposition_cayley_graph(3).order() == 6);
  CHECK(isomorphic(transposition_cayley_graph(3), complete_bipartite(3, 3)));
  CHECK(isomorphic(cartesian_product(complete_graph(2), complete_graph(2)), cycle_graph(4)));
  CHECK(bipartition(cycle_graph(6)).has_value());
  CHECK_FALSE(bipartition(cycle_graph(5)).has_value());
}

TEST_CASE("builder rejects loops and bad indices") {
  GraphBuilder b(3);
  CHECK_THROWS_AS(b.add_edge(1, 1), Error);
  CHECK_THROWS_AS(b.add_edge(0, 3), Error);
  b.add_edge(0, 1);
  b.toggle_edge(0, 1);
  CHECK_FALSE(b.adjacent(0, 1));
}

TEST_CASE("induced subgraph and permutation") {
  const Graph g = build_sr(3, 3);
  const std::vector<int> idx{0, 1, 2, 3};
  const Graph h = induced_subgraph(g, idx);
  CHECK(h.order() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(h.adjacent(i, j) == g.adjacent(i, j));
  std::mt19937 rng(7);
  const auto perm = oracle::random_permutation(g.order(), rng);
  const Graph p = permute(g, perm);
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j)
      CHECK(g.adjacent(i, j) == p.adjacent(static_cast<std::size_t>(perm[i]), static_cast<std::size_t>(perm[j])));
  const std::vector<int> bad{0, 99};
  CHECK_THROWS_AS(induced_subgraph(g, bad), Error);
}

TEST_CASE("graph6 round trip") {
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(from_graph6("C~") == complete_graph(4));
  CHECK(from_graph6(">>graph6<<C~") == complete_graph(4));
  CHECK(to_graph6(Graph{}) == "?");
  std::mt19937 rng(11);
  for (std::size_t n : {1u, 5u, 30u, 63u, 64u, 100u}) {
    const Graph g = oracle::random_graph(n, 0.4, rng);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
  CHECK_THROWS_AS(from_graph6("C"), Error);
}

TEST_CASE("json export") {
  const auto j = to_json(build_sr(3, 1));
  CHECK(j["m"] == 3);
  CHECK(j["n"] == 1);
  CHECK(j["vertices"].size() == 3);
  CHECK(j["edges"].size() == 3);
}
