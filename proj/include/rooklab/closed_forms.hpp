#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rooklab/spectrum.hpp"

namespace rooklab {

enum class Provenance { kProved, kConjectured };

/// Spectrum produced by a closed form. Raw pairs may repeat eigenvalues or
/// carry zero (or, for exceptions, negative) multiplicities; they are added
/// together when normalised.
struct PredictedSpectrum {
  std::vector<Spectrum::Pair> pairs;
  Provenance provenance = Provenance::kProved;

  /// Merged, zero-free spectrum. Throws Error if a merged multiplicity is negative.
  Spectrum normalized() const { return Spectrum::from_pairs(pairs); }
};

enum class SpectrumFamily { kN0, kN1, kN2, kN3, kN4, kN5, kM3, kM4 };

std::string_view family_name(SpectrumFamily family);
SpectrumFamily parse_family(std::string_view name);

/// Coefficient of t^n in prod_{i=2}^{m} (1 + t + ... + t^{i-1}), the number
/// of permutations of m symbols with n inversions.
std::int64_t mahonian(int m, int n);

/// max(-n, -binom(m,2)).
std::int64_t smallest_eigenvalue_formula(int m, int n);

/// binom(n - binom(m-1,2), m-1), the multiplicity of -binom(m,2).
std::int64_t bottom_multiplicity_formula(int m, int n);

/// Johnson graph J(v,n): (n-i)(v-n-i)-i with multiplicity
/// binom(v,i) - binom(v,i-1) for 0 <= i <= n.
PredictedSpectrum johnson_spectrum(int v, int n);

/// Closed-form (n <= 4, m = 3) or conjectured (n = 5, m = 4) spectrum of SR(m,n).
/// Throws UnsupportedParameters outside the family's range.
PredictedSpectrum predicted_spectrum(SpectrumFamily family, int m, int n);

/// Whether (m, n) is inside the family's supported range.
bool family_supports(SpectrumFamily family, int m, int n);

/// Spectrum of the common quotient of SR(m,n) and J(m+n-1,n).
PredictedSpectrum common_quotient_spectrum(int m, int n);

/// alpha(3,n) = floor((2n+3)/3) and the four residue cases of alpha(m,3).
std::int64_t independence_formula(int m, int n);

/// Edge-counting upper bound m + floor((m floor((m-3)/2) + 1) / 3) on alpha(m,3), m >= 3.
std::int64_t independence_counting_bound(int m);

/// Reference spectra of SR(4,n) for 0 <= n <= 15, in exponent notation.
std::string_view sr4_reference_spectrum(int n);

}  // namespace rooklab
