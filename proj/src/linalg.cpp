#include "rooklab/linalg.hpp"

#include <utility>

namespace rooklab {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix out(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("IntMatrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = rows[r][c];
  }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("IntMatrix: dimension mismatch in product");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const mpz_class& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) mpz_addmul(out(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
    }
  return out;
}

IntMatrix adjacency_matrix(const Graph& g) {
  IntMatrix out(g.order(), g.order());
  for (std::size_t i = 0; i < g.order(); ++i)
    bits::for_each(g.row(i), [&](std::size_t j) { out(i, j) = 1; });
  return out;
}

IntMatrix shift_diagonal(IntMatrix mat, long c) {
  if (mat.rows() != mat.cols()) throw Error("shift_diagonal: matrix is not square");
  for (std::size_t i = 0; i < mat.rows(); ++i) mat(i, i) -= c;
  return mat;
}

std::size_t rank(IntMatrix mat) {
  const std::size_t rows = mat.rows(), cols = mat.cols();
  mpz_class previous = 1;
  mpz_class scratch;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && sgn(mat(pivot, c)) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(mat(pivot, j), mat(r, j));
    const mpz_class& p = mat(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const mpz_class lead = mat(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        // Sylvester identity keeps this division exact.
        mpz_mul(scratch.get_mpz_t(), p.get_mpz_t(), mat(i, j).get_mpz_t());
        mpz_submul(scratch.get_mpz_t(), lead.get_mpz_t(), mat(r, j).get_mpz_t());
        mpz_divexact(mat(i, j).get_mpz_t(), scratch.get_mpz_t(), previous.get_mpz_t());
      }
      mat(i, c) = 0;
    }
    previous = p;
    ++r;
  }
  return r;
}

std::size_t nullity(IntMatrix mat) {
  const std::size_t cols = mat.cols();
  return cols - rank(std::move(mat));
}

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

constexpr std::uint32_t kMersenne31 = 0x7fffffffU;

struct MersenneReduce {
  static std::uint64_t apply(std::uint64_t x, std::uint64_t) {
    x = (x & kMersenne31) + (x >> 31);
    x = (x & kMersenne31) + (x >> 31);
    return x >= kMersenne31 ? x - kMersenne31 : x;
  }
};

struct GenericReduce {
  static std::uint64_t apply(std::uint64_t x, std::uint64_t p) { return x % p; }
};

/// Gaussian elimination in place on a dense rows x cols residue matrix.
template <typename Reduce>
std::size_t eliminate(std::vector<std::uint64_t>& m, std::size_t rows, std::size_t cols, std::uint64_t p) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m[pivot * cols + j], m[r * cols + j]);
    const std::uint64_t inverse = pow_mod(m[r * cols + c], p - 2, p);
    const std::uint64_t* pivot_row = &m[r * cols];
    for (std::size_t i = r + 1; i < rows; ++i) {
      std::uint64_t* row = &m[i * cols];
      if (row[c] == 0) continue;
      const std::uint64_t factor = p - Reduce::apply(row[c] * inverse, p);
      row[c] = 0;
      for (std::size_t j = c + 1; j < cols; ++j) row[j] = Reduce::apply(row[j] + factor * pivot_row[j], p);
    }
    ++r;
  }
  return r;
}

std::size_t eliminate_any(std::vector<std::uint64_t>& m, std::size_t rows, std::size_t cols, std::uint32_t p) {
  if (p >= (1U << 31)) throw Error("modular elimination requires p < 2^31");
  if (p == kMersenne31) return eliminate<MersenneReduce>(m, rows, cols, p);
  return eliminate<GenericReduce>(m, rows, cols, p);
}

}  // namespace

std::size_t rank_mod_p(const IntMatrix& mat, std::uint32_t p) {
  std::vector<std::uint64_t> m(mat.rows() * mat.cols());
  mpz_class residue;
  for (std::size_t i = 0; i < mat.rows(); ++i)
    for (std::size_t j = 0; j < mat.cols(); ++j) {
      mpz_fdiv_r_ui(residue.get_mpz_t(), mat(i, j).get_mpz_t(), p);
      m[i * mat.cols() + j] = residue.get_ui();
    }
  return eliminate_any(m, mat.rows(), mat.cols(), p);
}

std::size_t shifted_adjacency_nullity_mod_p(const Graph& g, long c, std::uint32_t p) {
  const std::size_t n = g.order();
  std::vector<std::uint64_t> m(n * n, 0);
  const long reduced = ((-c) % static_cast<long>(p) + static_cast<long>(p)) % static_cast<long>(p);
  for (std::size_t i = 0; i < n; ++i) {
    bits::for_each(g.row(i), [&](std::size_t j) { m[i * n + j] = 1; });
    m[i * n + i] = static_cast<std::uint64_t>(reduced);
  }
  return n - eliminate_any(m, n, n, p);
}

}  // namespace rooklab
