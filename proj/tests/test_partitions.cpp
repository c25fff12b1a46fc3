#include "doctest.h"

#include <algorithm>

#include "rooklab/closed_forms.hpp"
#include "rooklab/partitions.hpp"

using namespace rooklab;

namespace {

std::vector<std::size_t> block_sizes(const VertexPartition& p) {
  std::vector<std::size_t> sizes;
  for (const auto& b : p.blocks) sizes.push_back(b.size());
  return sizes;
}

}  // namespace

TEST_CASE("weight partition sizes") {
  CHECK(block_sizes(weight_partition(build_sr(4, 3))) == std::vector<std::size_t>{4, 12, 4});
  CHECK(block_sizes(weight_partition(build_sr(3, 5))) == std::vector<std::size_t>{3, 12, 6});
  CHECK_THROWS_AS(weight_partition(build_johnson(5, 2)), Error);
}

TEST_CASE("support partition of SR(2,3)") {
  const auto p = support_partition(build_sr(2, 3));
  REQUIRE(p.size() == 3);
  CHECK(block_sizes(p) == std::vector<std::size_t>{1, 1, 2});
  CHECK(p.labels[0] == std::vector<int>{1});
  CHECK(p.labels[1] == std::vector<int>{2});
  CHECK(p.labels[2] == std::vector<int>{1, 2});
}

TEST_CASE("support partitions of SR(4,3) and J(6,3) have the same profile") {
  const auto a = support_partition(build_sr(4, 3));
  const auto b = johnson_support_partition(build_johnson(6, 3), 4);
  CHECK(a.size() == 14);
  CHECK(b.size() == 14);
  auto sa = block_sizes(a);
  auto sb = block_sizes(b);
  CHECK(sa == sb);
  CHECK(a.labels == b.labels);
}

TEST_CASE("weight quotient of SR(4,3) is tridiagonal") {
  const auto e = check_equitable(build_sr(4, 3), weight_partition(build_sr(4, 3)));
  REQUIRE(e.size() == 3);
  CHECK(e.entries[0][1] == 6);
  CHECK(e.entries[1][2] == 2);
  CHECK(e.entries[1][0] == 2);
  CHECK(e.entries[2][1] == 6);
  CHECK(e.entries[0][2] == 0);
  CHECK(quotient_spectrum(e).to_string() == "9^1 3^1 (-1)^1");
}

TEST_CASE("weight quotient eigenvalues (m-i)(n-i)-n") {
  for (int m = 2; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n) {
      const Graph g = build_sr(m, n);
      std::vector<Spectrum::Pair> expected;
      for (int i = 0; i < std::min(m, n); ++i) expected.push_back({(m - i) * (n - i) - n, 1});
      CHECK(quotient_spectrum(check_equitable(g, weight_partition(g))) == Spectrum::from_pairs(expected));
    }
}

TEST_CASE("support quotient agrees with the e_ST formula and with J(m+n-1,n)") {
  for (int m = 2; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n) {
      const Graph g = build_sr(m, n);
      const auto p = support_partition(g);
      const auto e = check_equitable(g, p);
      for (std::size_t s = 0; s < e.size(); ++s)
        for (std::size_t t = 0; t < e.size(); ++t) CHECK(e.entries[s][t] == e_st_formula(p.labels[s], p.labels[t], n));
      const Graph j = build_johnson(m + n - 1, n);
      const auto ej = check_equitable(j, johnson_support_partition(j, m));
      CHECK(quotients_equal_by_label(e, ej));
      const Spectrum q = quotient_spectrum(e);
      CHECK(q == common_quotient_spectrum(m, n).normalized());
      CHECK(q.is_submultiset_of(integral_spectrum(g)));
    }
}

TEST_CASE("support quotient spectrum of SR(4,3)") {
  const Graph g = build_sr(4, 3);
  CHECK(quotient_spectrum(check_equitable(g, support_partition(g))).to_string() == "9^1 3^4 (-1)^6 (-3)^3");
}

TEST_CASE("e_ST formula cases") {
  CHECK(e_st_formula({1, 2}, {1, 2}, 3) == 1);
  CHECK(e_st_formula({1, 2}, {1}, 3) == 1);
  CHECK(e_st_formula({1}, {1, 2}, 3) == 2);
  CHECK(e_st_formula({1, 2}, {1, 3}, 3) == 1);
  CHECK(e_st_formula({1, 2}, {3, 4}, 3) == 0);
  CHECK(e_st_formula({1}, {1, 2, 3}, 3) == 0);
}

TEST_CASE("non-equitable partitions produce a witness") {
  const Graph g = build_sr(3, 2);
  VertexPartition p;
  p.blocks = {{0, 1}, {2, 3, 4, 5}};
  p.labels = {{0}, {1}};
  bool thrown = false;
  try {
    check_equitable(g, p);
  } catch (const NotEquitable& e) {
    thrown = true;
    const auto& block = p.blocks[e.block];
    CHECK(std::find(block.begin(), block.end(), e.first) != block.end());
    CHECK(std::find(block.begin(), block.end(), e.other) != block.end());
    int a = 0, b = 0;
    for (int v : p.blocks[e.target]) {
      a += g.adjacent(std::size_t(e.first), std::size_t(v));
      b += g.adjacent(std::size_t(e.other), std::size_t(v));
    }
    CHECK(a != b);
  }
  CHECK(thrown);
  VertexPartition incomplete;
  incomplete.blocks = {{0, 1}};
  incomplete.labels = {{0}};
  CHECK_THROWS_AS(check_equitable(g, incomplete), Error);
}

TEST_CASE("quotient export") {
  const Graph g = build_sr(4, 3);
  const auto e = check_equitable(g, weight_partition(g));
  CHECK(e.to_json()["entries"].size() == 3);
  CHECK(e.to_csv().find("6") != std::string::npos);
}
