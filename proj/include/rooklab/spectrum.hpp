#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"
#include "rooklab/graph.hpp"
#include "rooklab/linalg.hpp"

namespace rooklab {

/// Multiset of integer eigenvalues: (eigenvalue, multiplicity) pairs with
/// positive multiplicities, strictly descending by eigenvalue.
class Spectrum {
 public:
  using Pair = std::pair<std::int64_t, std::int64_t>;

  Spectrum() = default;

  /// Accepts pairs in any order; equal eigenvalues are merged by adding
  /// multiplicities and zero totals are dropped. A negative total throws.
  static Spectrum from_pairs(std::vector<Pair> pairs);

  /// Parses "9^1 3^4 (-1)^6"; whitespace separated, parentheses optional.
  static Spectrum parse(std::string_view text);

  const std::vector<Pair>& pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }
  std::int64_t total() const;
  std::int64_t multiplicity(std::int64_t eigenvalue) const;
  std::int64_t smallest() const { return pairs_.back().first; }
  std::int64_t largest() const { return pairs_.front().first; }
  /// Sum of eigenvalue^power * multiplicity.
  std::int64_t moment(int power) const;

  /// True when every eigenvalue of *this occurs in other at least as often.
  bool is_submultiset_of(const Spectrum& other) const;

  /// Exponent notation: "9^1 3^4 1^3 (-1)^6 (-3)^6".
  std::string to_string() const;
  nlohmann::json to_json() const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::vector<Pair> pairs_;
};

/// Eigenvalues for which A - cI was found to be non-injective sum to less
/// than the vertex count: the graph has a non-integral eigenvalue.
class IncompleteSpectrum : public Error {
 public:
  IncompleteSpectrum(Spectrum found, std::size_t missing);
  const Spectrum& found() const { return found_; }
  std::size_t missing() const { return missing_; }

 private:
  Spectrum found_;
  std::size_t missing_;
};

/// Sparse integer vector indexed by vertex; no stored zeros.
class SparseVector {
 public:
  SparseVector() = default;

  void add(int index, const mpz_class& value);
  const std::map<int, mpz_class>& coefficients() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }
  std::size_t support_size() const { return coeffs_.size(); }
  mpz_class at(int index) const;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::map<int, mpz_class> coeffs_;
};

/// True iff A vec = lambda vec exactly. Throws Error on an out-of-range index.
bool verify_eigenvector(const Graph& g, const SparseVector& vec, long lambda);

/// Stacks vectors as rows of a dense matrix with dim columns.
IntMatrix stack_rows(const std::vector<SparseVector>& vectors, std::size_t dim);

enum class SpectrumEngine {
  /// Multiplicities mod a large prime (upper bounds on the rational
  /// nullities), certified by checking that the product of (A - cI) over
  /// the found eigenvalues annihilates a generating set of vectors.
  kCertifiedModular,
  /// Fraction-free elimination over the integers for every candidate.
  kBareiss,
};

struct SpectrumOptions {
  SpectrumEngine engine = SpectrumEngine::kCertifiedModular;
  /// Candidate range; defaults come from the graph family.
  std::optional<long> lowest;
  std::optional<long> highest;
};

struct SpectrumResult {
  Spectrum spectrum;
  /// Vertex count minus the summed multiplicities; nonzero means the graph
  /// has eigenvalues outside the integer candidates.
  std::size_t missing = 0;
  /// "modular-certified" or "bareiss".
  std::string method;
};

/// Exact integral part of the spectrum, never throwing on non-integrality.
SpectrumResult integral_spectrum_lenient(const Graph& g, const SpectrumOptions& options = {});

/// Full integral spectrum with moment checks; throws IncompleteSpectrum when
/// the multiplicities fall short of the vertex count.
Spectrum integral_spectrum(const Graph& g, const SpectrumOptions& options = {});

/// Spectrum of an integer matrix known to be diagonalizable with integral
/// eigenvalues in [lowest, highest] (quotient matrices of equitable partitions).
Spectrum matrix_integral_spectrum(const IntMatrix& mat, long lowest, long highest);

/// Builds the bipartite graph between sum-n and sum-below-n vectors
/// (adjacent when differing in one coordinate), and checks A + nI = N N^T.
bool halved_factorization_check(int m, int n);

}  // namespace rooklab
