#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rooklab/bitrow.hpp"
#include "rooklab/common.hpp"

namespace rooklab {

/// A vertex of SR(m,n): m nonnegative entries summing to n.
using Composition = std::vector<int>;

/// Every composition of n into m nonnegative parts, lexicographically
/// ordered. This order is the canonical vertex indexing of SR(m,n).
std::vector<Composition> enumerate_vertices(int m, int n);

/// Position of x in enumerate_vertices(x.size(), sum(x)). Throws Error on a
/// negative entry.
std::size_t composition_index(const Composition& x);

/// Construction provenance; the spectrum engine uses it to pick candidate
/// ranges and symmetry representatives. Any edit resets it to kGeneric.
enum class Family { kGeneric, kSimplicialRook, kJohnson };

/// Immutable simple undirected graph stored as packed adjacency rows.
///
/// Each vertex carries an integer label vector (a composition for SR(m,n),
/// the sorted member list for Johnson graphs, a concatenation for products).
class Graph {
 public:
  Graph() = default;

  std::size_t order() const { return order_; }
  bool empty() const { return order_ == 0; }

  bool adjacent(std::size_t i, std::size_t j) const { return bits::test(row(i), j); }
  std::span<const bits::Word> row(std::size_t i) const {
    return {rows_.data() + i * words_, words_};
  }
  std::size_t words_per_row() const { return words_; }

  std::size_t degree(std::size_t i) const { return bits::count(row(i)); }
  std::vector<int> neighbors(std::size_t i) const;
  std::size_t edge_count() const;
  std::vector<std::pair<int, int>> edges() const;
  std::size_t max_degree() const;
  /// Common degree, or nullopt when the graph is not regular (K_0 gives 0).
  std::optional<std::size_t> regular_degree() const;

  const std::vector<std::vector<int>>& labels() const { return labels_; }
  const std::vector<int>& label(std::size_t i) const { return labels_[i]; }
  /// Index of the vertex with the given label, or nullopt.
  std::optional<std::size_t> find(const std::vector<int>& label) const;

  /// (m, n) when the graph was produced by build_sr or build_johnson.
  std::optional<std::pair<int, int>> parameters() const { return params_; }
  Family family() const { return family_; }

  /// Adjacency equality; labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.rows_ == b.rows_;
  }

 private:
  friend class GraphBuilder;

  std::size_t order_ = 0;
  std::size_t words_ = 0;
  std::vector<bits::Word> rows_;
  std::vector<std::vector<int>> labels_;
  bool labels_sorted_ = false;
  std::optional<std::pair<int, int>> params_;
  Family family_ = Family::kGeneric;
};

/// Mutable staging area for a Graph. Loops are rejected.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t order);
  explicit GraphBuilder(const Graph& start);

  std::size_t order() const { return graph_.order_; }
  void add_edge(std::size_t i, std::size_t j);
  void remove_edge(std::size_t i, std::size_t j);
  void toggle_edge(std::size_t i, std::size_t j);
  bool adjacent(std::size_t i, std::size_t j) const { return graph_.adjacent(i, j); }

  void set_labels(std::vector<std::vector<int>> labels);
  void set_parameters(Family family, int m, int n) {
    graph_.family_ = family;
    graph_.params_ = std::make_pair(m, n);
  }

  Graph build() &&;

 private:
  std::span<bits::Word> mutable_row(std::size_t i) {
    return {graph_.rows_.data() + i * graph_.words_, graph_.words_};
  }
  void check(std::size_t i, std::size_t j) const;

  Graph graph_;
};

/// SR(m,n): compositions adjacent when they differ in exactly two coordinates.
Graph build_sr(int m, int n);

/// J(v,n): n-subsets of {1..v}, adjacent when they meet in n-1 elements.
Graph build_johnson(int v, int n);

Graph complete_graph(std::size_t order);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph cycle_graph(std::size_t order);
Graph hypercube(int dim);
/// Cayley graph of Sym(m) generated by all transpositions.
Graph transposition_cayley_graph(int m);

/// Subgraph induced on idxs; vertex order follows g. Throws Error on a bad index.
Graph induced_subgraph(const Graph& g, std::span<const int> idxs);

/// Cartesian product; vertex (a, b) has index a * |h| + b.
Graph cartesian_product(const Graph& g, const Graph& h);

Graph complement(const Graph& g);

/// Relabels vertex i as perm[i].
Graph permute(const Graph& g, std::span<const int> perm);

Graph from_edges(std::size_t order, std::span<const std::pair<int, int>> edges);

/// Adjacency is symmetric and loop-free.
bool is_simple(const Graph& g);

/// Two-colouring when bipartite.
std::optional<std::vector<int>> bipartition(const Graph& g);

}  // namespace rooklab
