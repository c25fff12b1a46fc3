#include "doctest.h"

#include "rooklab/canonical.hpp"
#include "rooklab/invariants.hpp"
#include "rooklab/spectrum.hpp"
#include "rooklab/switching.hpp"

using namespace rooklab;

TEST_CASE("validation of switching sets") {
  CHECK_THROWS_AS(validate_switching_set(complete_graph(4), {0, 1, 1, 2}), Error);
  CHECK_THROWS_AS(validate_switching_set(complete_graph(4), {0, 1, 2, 9}), Error);
  GraphBuilder b(5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      if (!(i == 0 && j == 1)) b.add_edge(i, j);
  const Graph k5e = std::move(b).build();
  CHECK_THROWS_AS(validate_switching_set(k5e, {0, 1, 2, 3}), NotSwitchable);
  const auto s = validate_switching_set(complete_graph(5), {3, 0, 2, 1});
  CHECK(s.members == std::array<int, 4>{0, 1, 2, 3});
  CHECK(s.clique());
}

TEST_CASE("irregular sets are rejected with the violator") {
  const Graph g = build_sr(4, 3);
  std::vector<int> set;
  for (const Composition& x : {Composition{3, 0, 0, 0}, Composition{0, 3, 0, 0}, Composition{0, 0, 3, 0}, Composition{2, 1, 0, 0}})
    set.push_back(static_cast<int>(*g.find(x)));
  bool thrown = false;
  try {
    validate_switching_set(g, set);
  } catch (const NotSwitchable& e) {
    thrown = true;
    CHECK(std::find(set.begin(), set.end(), e.violator) != set.end());
  }
  CHECK(thrown);
}

TEST_CASE("enumeration on tiny graphs") {
  CHECK(enumerate_switching_sets(cycle_graph(5)).empty());
  CHECK(enumerate_switching_sets(complete_graph(4)).size() == 1);
  CHECK_THROWS_AS(enumerate_switching_sets(build_sr(5, 4), 50), SizeLimit);
}

TEST_CASE("switching preserves the spectrum and is an involution") {
  for (int m = 3; m <= 4; ++m)
    for (int n = 2; n <= 4; ++n) {
      const Graph g = build_sr(m, n);
      const Spectrum s = integral_spectrum(g);
      for (const auto& set : enumerate_switching_sets(g)) {
        const Graph h = gm_switch(g, set);
        CHECK(integral_spectrum(h) == s);
        CHECK(gm_switch(h, set) == g);
      }
    }
}

TEST_CASE("named sets give cospectral non-isomorphic mates") {
  const std::vector<std::tuple<int, int, const char*>> cases{{4, 3, "v1"}, {4, 4, "v1"}, {4, 3, "line"}, {5, 3, "line"}};
  for (const auto& [m, n, name] : cases) {
    const Graph g = build_sr(m, n);
    const Graph h = gm_switch(g, validate_switching_set(g, named_switching_set(g, name)));
    CHECK(integral_spectrum(h) == integral_spectrum(g));
    CHECK_FALSE(isomorphic(g, h));
  }
  CHECK_THROWS_AS(named_switching_set(build_sr(5, 3), "v1"), Error);
  CHECK_THROWS_AS(named_switching_set(build_sr(4, 4), "line"), Error);
  CHECK_THROWS_AS(named_switching_set(build_sr(4, 3), "nope"), Error);
}

TEST_CASE("the three sets of SR(4,3) are enumerated") {
  const Graph g = build_sr(4, 3);
  const auto sets = enumerate_switching_sets(g);
  auto contains = [&](std::vector<Composition> xs) {
    std::vector<int> idx;
    for (const auto& x : xs) idx.push_back(static_cast<int>(*g.find(x)));
    const auto s = validate_switching_set(g, idx);
    return std::find(sets.begin(), sets.end(), s) != sets.end();
  };
  CHECK(contains({{3, 0, 0, 0}, {0, 3, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 3}}));
  CHECK(contains({{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}}));
  CHECK(contains({{3, 0, 0, 0}, {2, 1, 0, 0}, {1, 2, 0, 0}, {0, 3, 0, 0}}));
}

TEST_CASE("switching closure") {
  CHECK(switching_closure(complete_graph(4), 10).classes == 1);
  const Graph g = build_sr(3, 3);
  const auto r = switching_closure(g, 50);
  CHECK(r.representatives.size() == r.classes);
  const Spectrum s = integral_spectrum(g);
  for (const auto& h : r.representatives) CHECK(integral_spectrum(h) == s);
  const auto capped = switching_closure(build_sr(4, 3), 5);
  CHECK(capped.capped);
  CHECK(capped.classes == 5);
}

namespace {

bool brute_k114(const Graph& g) {
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) continue;
      std::vector<std::size_t> common;
      for (std::size_t w = 0; w < g.order(); ++w)
        if (w != u && w != v && g.adjacent(u, w) && g.adjacent(v, w)) common.push_back(w);
      const std::size_t c = common.size();
      for (std::size_t a = 0; a < c; ++a)
        for (std::size_t b = a + 1; b < c; ++b)
          for (std::size_t d = b + 1; d < c; ++d)
            for (std::size_t e = d + 1; e < c; ++e) {
              const std::size_t q[4]{common[a], common[b], common[d], common[e]};
              bool independent = true;
              for (int x = 0; x < 4 && independent; ++x)
                for (int y = x + 1; y < 4; ++y)
                  if (g.adjacent(q[x], q[y])) independent = false;
              if (independent) return true;
            }
    }
  return false;
}

Graph switched_at_v1(int m, int n) {
  const Graph g = build_sr(m, n);
  return gm_switch(g, validate_switching_set(g, named_switching_set(g, "v1")));
}

}  // namespace

TEST_CASE("induced K_{1,1,4} in switched mates matches brute force") {
  const Graph h43 = switched_at_v1(4, 3);
  CHECK_FALSE(brute_k114(h43));
  CHECK(has_induced_k114(h43) == brute_k114(h43));
  const Graph h45 = switched_at_v1(4, 5);
  CHECK(brute_k114(h45));
  CHECK(has_induced_k114(h45));
}
