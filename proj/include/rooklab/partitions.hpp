#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "rooklab/graph.hpp"
#include "rooklab/linalg.hpp"
#include "rooklab/spectrum.hpp"

namespace rooklab {

/// Disjoint cover of a graph's vertices by nonempty blocks. Each block has
/// a canonical key: the support set (1-based coordinates) or {weight}.
struct VertexPartition {
  std::vector<std::vector<int>> blocks;
  std::vector<std::vector<int>> labels;

  std::size_t size() const { return blocks.size(); }
};

/// Block-to-block neighbour counts of an equitable partition.
struct QuotientMatrix {
  std::vector<std::vector<std::int64_t>> entries;
  std::vector<std::vector<int>> labels;

  std::size_t size() const { return entries.size(); }
  IntMatrix to_int_matrix() const;
  nlohmann::json to_json() const;
  std::string to_csv() const;

  friend bool operator==(const QuotientMatrix&, const QuotientMatrix&) = default;
};

/// Witness that a partition is not equitable: vertices `first` and `other`
/// of block `block` see different numbers of neighbours in block `target`.
class NotEquitable : public Error {
 public:
  NotEquitable(std::size_t block, std::size_t target, int first, int other);
  std::size_t block;
  std::size_t target;
  int first;
  int other;
};

/// V_1, ..., V_min(m,n) by number of nonzero coordinates (SR(m,n), n >= 1).
VertexPartition weight_partition(const Graph& g);

/// One block per support set S, ordered by |S| then lexicographically (SR(m,n), n >= 1).
VertexPartition support_partition(const Graph& g);

/// Blocks of J(m+n-1,n) by the intersection of each n-subset with {1..m}.
VertexPartition johnson_support_partition(const Graph& g, int m);

/// Validates that p covers g, then computes the quotient matrix. Throws
/// NotEquitable with the first witness in canonical vertex order.
QuotientMatrix check_equitable(const Graph& g, const VertexPartition& p);

/// Support-partition entry e_ST of SR(m,n) (and of J(m+n-1,n)). Supports are
/// sorted coordinate lists.
std::int64_t e_st_formula(const std::vector<int>& s, const std::vector<int>& t, int n);

/// Eigenvalues of E with multiplicities (geometric, equal to algebraic since
/// quotients of symmetric matrices are diagonalizable).
Spectrum quotient_spectrum(const QuotientMatrix& e);

/// Reorders b's blocks to match a's labels; false when the label sets differ.
bool quotients_equal_by_label(const QuotientMatrix& a, const QuotientMatrix& b);

}  // namespace rooklab
