#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "rooklab/graph.hpp"

namespace rooklab {

class Disconnected : public Error {
 public:
  using Error::Error;
};

class NotAClique : public Error {
 public:
  using Error::Error;
};

/// A clique of SR(m,n) that fits none of the three shapes.
class Unclassifiable : public Error {
 public:
  using Error::Error;
};

/// Largest BFS eccentricity. Throws Disconnected (also for the empty graph).
std::size_t diameter(const Graph& g);

/// A maximum clique, sorted; bitset branch and bound with a greedy
/// colouring bound over a degeneracy ordering.
std::vector<int> maximum_clique(const Graph& g);
std::size_t clique_number(const Graph& g);

std::vector<int> maximum_independent_set(const Graph& g);
std::size_t independence_number(const Graph& g);

/// Every maximal clique (Bron-Kerbosch with pivoting), each sorted, in
/// lexicographic order.
std::vector<std::vector<int>> maximal_cliques(const Graph& g);

/// Shape of a clique of SR(m,n); coordinates are 1-based.
///   type 1: all pairs differ exactly in coordinates j, k
///   type 2: { x + a e_i : i in I }
///   type 3: { x - a e_i : i in I }
/// Two-element cliques are reported as type 1.
struct CliqueType {
  int type = 0;
  int j = 0;
  int k = 0;
  int a = 0;
  Composition x;
  std::vector<int> index_set;

  nlohmann::json to_json() const;
};

/// Throws NotAClique when c has fewer than two vertices or a non-edge,
/// Unclassifiable when no shape fits.
CliqueType classify_clique(const Graph& g, const std::vector<int>& c);

/// Induced subgraph on the neighbours of v (in index order).
Graph local_graph(const Graph& g, std::size_t v);

/// True when some edge uv has four pairwise non-adjacent common neighbours.
bool has_induced_k114(const Graph& g);

/// Whether every vertex of the local graph of u lies in at most two
/// maximal cliques of that local graph.
bool local_cliques_at_most_two(const Graph& g, std::size_t u);

/// For SR(m,3): the vertex map exchanging the entries 1 and 2 of vectors
/// that contain a 2, fixing all other vertices.
std::vector<int> digit_swap_permutation(const Graph& g);

}  // namespace rooklab
