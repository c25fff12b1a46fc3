#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "rooklab/canonical.hpp"
#include "rooklab/graph.hpp"
#include "rooklab/spectrum.hpp"

namespace rooklab {

/// A bijection of {1..m}, stored as its image list.
class Permutation {
 public:
  Permutation() = default;
  /// Throws Error unless images is a permutation of 1..size.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int m);
  static Permutation reversal(int m);
  /// "231", "2,3,1" or "2 3 1".
  static Permutation parse(std::string_view text);
  /// Inverse of inversion_vector: the permutation whose Lehmer code is a.
  static Permutation from_inversion_vector(const std::vector<int>& a);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }
  int inversions() const;
  /// +1 or -1, from the parity of a transposition decomposition.
  int sign() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// a_i = #{ j > i : pi_i > pi_j }.
std::vector<int> inversion_vector(const Permutation& pi);

/// Every permutation of {1..m} with exactly n inversions, in lexicographic order.
std::vector<Permutation> permutations_with_inversions(int m, int n);

struct AdmissiblePermutation {
  Permutation sigma;
  Composition x;
};

/// All sigma with a_i + i - sigma_i >= 0 for every i, lexicographically,
/// each with x(sigma)_i = a_i + i - sigma_i.
std::vector<AdmissiblePermutation> admissible_set(const Permutation& pi);

/// sum over admissible sigma of sgn(sigma) e_{x(sigma)}, indexed by the
/// vertices of SR(m, inversions(pi)).
SparseVector f_pi(const Permutation& pi);

using Rational = boost::rational<std::int64_t>;

class InvalidOrbit : public Error {
 public:
  using Error::Error;
};

/// sum over sigma in Sym(m) of sgn(sigma) e_{p + sigma(w)} on SR(m,n), where
/// sigma(w)_i = w_{sigma(i)}. Throws InvalidOrbit when an orbit point is not
/// a vertex or two orbit points coincide.
SparseVector f_pw(const std::vector<Rational>& p, const std::vector<Rational>& w, int m, int n);

/// w = (1-m, 3-m, ..., m-1) / 2.
std::vector<Rational> canonical_w(int m);

/// Every p for which f_pw(p, canonical_w(m), m, n) is defined.
std::vector<std::vector<Rational>> canonical_p_values(int m, int n);

/// Induced subgraph of SR(m, inversions(pi)) on {x(sigma)}, labelled by x(sigma).
/// Throws Error if the result is not bipartite by sign or not n-regular.
Graph gamma_graph(const Permutation& pi);

struct GammaClass {
  Graph representative;
  Permutation first_pi;
  /// Number of permutations (over all scanned m) landing in this class.
  std::size_t members = 0;
  std::size_t vertices = 0;
  std::size_t degree = 0;
  bool bipartite = false;
  /// "Q_k", "K_{3,3}", "K_{3,3} x K_2" or "" when unrecognised.
  std::string name;
  SpectrumResult spectrum;
  CanonicalForm form;
};

/// Buckets Gamma(m,n,pi) by isomorphism over every m <= max_m (default 2n)
/// and pi with n inversions; classes in order of first appearance.
std::vector<GammaClass> classify_gamma(int n, std::optional<int> max_m = std::nullopt);

enum class SmallEigenvectorKind { kN3MMinus3, kN4TwoMMinus5, kN4MMinus6 };

SmallEigenvectorKind parse_small_kind(std::string_view name);

/// Eigenvalue m-3, 2m-5 or m-6 of the corresponding vector.
long small_kind_eigenvalue(SmallEigenvectorKind kind, int m);

/// The sparse eigenvectors of SR(m,3) and SR(m,4) anchored at coordinate h
/// (and i > h for the pair kind), 1-based.
SparseVector small_n_eigenvector(SmallEigenvectorKind kind, int m, int h, int i = 0);

}  // namespace rooklab
