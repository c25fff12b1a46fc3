#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "rooklab/graph.hpp"

namespace rooklab {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

IntMatrix adjacency_matrix(const Graph& g);

/// Returns mat - c * I (mat must be square).
IntMatrix shift_diagonal(IntMatrix mat, long c);

/// Rank over Q by fraction-free (Bareiss) elimination; the pivot is the first
/// nonzero entry met scanning down the current column.
std::size_t rank(IntMatrix mat);

/// cols - rank.
std::size_t nullity(IntMatrix mat);

/// Rank over GF(p) for a prime p < 2^32. Never exceeds the rational rank.
std::size_t rank_mod_p(const IntMatrix& mat, std::uint32_t p);

/// Nullity over GF(p) of A - c I for the adjacency matrix A of g.
std::size_t shifted_adjacency_nullity_mod_p(const Graph& g, long c, std::uint32_t p);

}  // namespace rooklab
