#pragma once

// Independent reference implementations used only by the tests.

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <gmpxx.h>

#include "rooklab/graph.hpp"
#include "rooklab/linalg.hpp"

namespace oracle {

inline rooklab::Graph random_graph(std::size_t n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  rooklab::GraphBuilder b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) b.add_edge(i, j);
  return std::move(b).build();
}

inline std::vector<int> random_permutation(std::size_t n, std::mt19937& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Gauss-Jordan over Q with mpq_class.
inline std::size_t rational_rank(const rooklab::IntMatrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && a[pivot][c] == 0) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Eigenvalues by a floating-point symmetric solver, rounded to integers;
/// returns an empty map when some eigenvalue is not within 1e-6 of an integer.
inline std::map<long, long> rounded_spectrum(const rooklab::Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      a(i, j) = g.adjacent(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) ? 1.0 : 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  std::map<long, long> out;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double x = solver.eigenvalues()(i);
    const double r = std::round(x);
    if (std::abs(x - r) > 1e-6) return {};
    ++out[static_cast<long>(r)];
  }
  return out;
}

/// Every clique size check by subset enumeration (n <= ~20).
inline std::size_t brute_clique_number(const rooklab::Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= best) continue;
    bool clique = true;
    for (std::size_t i = 0; i < n && clique; ++i)
      for (std::size_t j = i + 1; j < n && clique; ++j)
        if ((mask >> i & 1) && (mask >> j & 1) && !g.adjacent(i, j)) clique = false;
    if (clique) best = size;
  }
  return best;
}

/// |Aut(g)| by trying every permutation (n <= 8).
inline std::uint64_t brute_automorphisms(const rooklab::Graph& g) {
  std::vector<int> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < g.order() && ok; ++i)
      for (std::size_t j = i + 1; j < g.order() && ok; ++j)
        ok = g.adjacent(i, j) == g.adjacent(static_cast<std::size_t>(p[i]), static_cast<std::size_t>(p[j]));
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

/// Isomorphism by trying every bijection (n <= 8).
inline bool brute_isomorphic(const rooklab::Graph& a, const rooklab::Graph& b) {
  if (a.order() != b.order()) return false;
  std::vector<int> p(a.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.order() && ok; ++i)
      for (std::size_t j = i + 1; j < a.order() && ok; ++j)
        ok = a.adjacent(i, j) == b.adjacent(static_cast<std::size_t>(p[i]), static_cast<std::size_t>(p[j]));
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace oracle
