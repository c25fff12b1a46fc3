#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rooklab/graph.hpp"

namespace rooklab {

/// Four vertices such that every outside vertex sees 0, 2 or 4 of them and
/// the induced subgraph is regular.
struct SwitchingSet {
  std::array<int, 4> members{};
  /// Valency of the induced subgraph (3 for a clique).
  int internal_degree = 0;
  bool clique() const { return internal_degree == 3; }

  friend bool operator==(const SwitchingSet&, const SwitchingSet&) = default;
};

class NotSwitchable : public Error {
 public:
  NotSwitchable(const std::string& what, int violator) : Error(what), violator(violator) {}
  /// First offending vertex: an outside vertex with 1 or 3 neighbours in
  /// the set, or a member whose internal valency differs from the first.
  int violator;
};

/// Throws Error for repeated or out-of-range members, NotSwitchable when
/// the set is not a switching set.
SwitchingSet validate_switching_set(const Graph& g, const std::vector<int>& members);

/// Flips adjacency between the set and every outside vertex with exactly two
/// neighbours in it.
Graph gm_switch(const Graph& g, const SwitchingSet& b);

/// All switching sets in lexicographic order of their sorted members.
/// Throws SizeLimit above max_vertices.
std::vector<SwitchingSet> enumerate_switching_sets(const Graph& g, std::size_t max_vertices = 100);

struct ClosureResult {
  /// Isomorphism classes reached (including the start graph).
  std::size_t classes = 0;
  /// True when the search stopped at the limit, so classes is a lower bound.
  bool capped = false;
  /// One representative per class in discovery order.
  std::vector<Graph> representatives;
};

/// Breadth-first search over graphs reachable by repeated switching,
/// deduplicated by canonical form, stopping at `limit` classes.
ClosureResult switching_closure(const Graph& g, std::size_t limit, std::size_t max_vertices = 100);

/// Named sets on SR(m,n), as vertex indices:
///   "v1"   {n e_i : 1 <= i <= m}, requires m = 4
///   "line" {a e_1 + b e_2 : a + b = 3}, requires n = 3
std::vector<int> named_switching_set(const Graph& sr, std::string_view name);

}  // namespace rooklab
