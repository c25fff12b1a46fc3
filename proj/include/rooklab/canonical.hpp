#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "rooklab/graph.hpp"

namespace rooklab {

/// Canonical labelling of a graph. Two graphs are isomorphic iff their
/// certificates (the adjacency rows after relabelling) are equal.
struct CanonicalForm {
  /// relabeling[v] is the canonical position of vertex v.
  std::vector<int> relabeling;
  std::size_t order = 0;
  std::vector<std::uint64_t> certificate;

  bool same_graph_as(const CanonicalForm& other) const {
    return order == other.order && certificate == other.certificate;
  }
};

struct CanonicalOptions {
  std::size_t max_vertices = 2000;
  /// Search-tree node budget before SizeLimit is thrown.
  std::size_t max_nodes = 20'000'000;
};

/// Colour refinement seeded individualisation-refinement search; the target
/// cell is the first smallest non-singleton cell, children tried in index
/// order, subtrees equivalent under already-found automorphisms are skipped.
CanonicalForm canonical_form(const Graph& g, const CanonicalOptions& options = {});

bool isomorphic(const Graph& a, const Graph& b, const CanonicalOptions& options = {});

/// Exact |Aut(g)| as a product of orbit sizes along the first path of the
/// search tree.
std::uint64_t automorphism_count(const Graph& g, const CanonicalOptions& options = {});

/// True when perm (vertex -> vertex) preserves adjacency.
bool is_automorphism(const Graph& g, const std::vector<int>& perm);

/// Coarsest equitable refinement of the unit partition; cells in the
/// invariant order produced by refinement.
std::vector<std::vector<int>> color_refinement(const Graph& g);

struct CertificateHash {
  std::size_t operator()(const CanonicalForm& f) const;
};
struct CertificateEqual {
  bool operator()(const CanonicalForm& a, const CanonicalForm& b) const { return a.same_graph_as(b); }
};

}  // namespace rooklab
