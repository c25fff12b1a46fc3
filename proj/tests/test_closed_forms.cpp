#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "rooklab/closed_forms.hpp"
#include "rooklab/spectrum.hpp"

using namespace rooklab;

namespace {

std::int64_t count_permutations_with_inversions(int m, int n) {
  std::vector<int> p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 0);
  std::int64_t count = 0;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
    count += inv == n;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

}  // namespace

TEST_CASE("Mahonian numbers count permutations by inversions") {
  for (int m = 1; m <= 7; ++m)
    for (int n = 0; n <= 12; ++n) CHECK(mahonian(m, n) == count_permutations_with_inversions(m, n));
  CHECK(mahonian(4, 3) == 6);
  CHECK(mahonian(3, 4) == 0);
}

TEST_CASE("smallest eigenvalue and bottom multiplicity formulas") {
  CHECK(smallest_eigenvalue_formula(4, 3) == -3);
  CHECK(smallest_eigenvalue_formula(4, 9) == -6);
  CHECK(bottom_multiplicity_formula(3, 4) == 3);
  CHECK(bottom_multiplicity_formula(4, 6) == 1);
  CHECK(bottom_multiplicity_formula(4, 5) == 0);
}

TEST_CASE("proved families equal exact spectra") {
  for (int m = 1; m <= 7; ++m) CHECK(predicted_spectrum(SpectrumFamily::kN1, m, 1).normalized() == integral_spectrum(build_sr(m, 1)));
  for (int m = 2; m <= 7; ++m) CHECK(predicted_spectrum(SpectrumFamily::kN2, m, 2).normalized() == integral_spectrum(build_sr(m, 2)));
  for (int m = 3; m <= 7; ++m) CHECK(predicted_spectrum(SpectrumFamily::kN3, m, 3).normalized() == integral_spectrum(build_sr(m, 3)));
  for (int m = 4; m <= 6; ++m) CHECK(predicted_spectrum(SpectrumFamily::kN4, m, 4).normalized() == integral_spectrum(build_sr(m, 4)));
  for (int n = 1; n <= 10; ++n) CHECK(predicted_spectrum(SpectrumFamily::kM3, 3, n).normalized() == integral_spectrum(build_sr(3, n)));
}

TEST_CASE("conjectured families carry their provenance") {
  CHECK(predicted_spectrum(SpectrumFamily::kN5, 5, 5).provenance == Provenance::kConjectured);
  CHECK(predicted_spectrum(SpectrumFamily::kM4, 4, 8).provenance == Provenance::kConjectured);
  CHECK(predicted_spectrum(SpectrumFamily::kN3, 4, 3).provenance == Provenance::kProved);
  CHECK(predicted_spectrum(SpectrumFamily::kN5, 5, 5).normalized() == integral_spectrum(build_sr(5, 5)));
  for (int n : {6, 8, 9, 10})
    CHECK(predicted_spectrum(SpectrumFamily::kM4, 4, n).normalized() == Spectrum::parse(sr4_reference_spectrum(n)));
}

TEST_CASE("families refuse parameters outside their range") {
  CHECK_THROWS_AS(predicted_spectrum(SpectrumFamily::kN4, 3, 4), UnsupportedParameters);
  CHECK_THROWS_AS(predicted_spectrum(SpectrumFamily::kM4, 4, 7), UnsupportedParameters);
  CHECK_THROWS_AS(predicted_spectrum(SpectrumFamily::kM3, 4, 3), UnsupportedParameters);
  CHECK_FALSE(family_supports(SpectrumFamily::kN5, 4, 5));
  CHECK(parse_family("m4") == SpectrumFamily::kM4);
  CHECK(family_name(SpectrumFamily::kN2) == "n2");
  CHECK_THROWS_AS(parse_family("n9"), Error);
}

TEST_CASE("common quotient spectrum") {
  CHECK(common_quotient_spectrum(4, 3).normalized().to_string() == "9^1 3^4 (-1)^6 (-3)^3");
  CHECK(common_quotient_spectrum(3, 5).normalized().to_string() == "10^1 3^3 (-2)^3");
}

TEST_CASE("independence formulas") {
  CHECK(independence_formula(3, 3) == 3);
  CHECK(independence_formula(7, 3) == 12);
  CHECK(independence_formula(4, 3) == 4);
  CHECK(independence_formula(8, 3) == 13);
  CHECK(independence_formula(9, 3) == 18);
  CHECK(independence_formula(3, 10) == 7);
  for (int m = 3; m <= 30; ++m) CHECK(independence_formula(m, 3) == independence_counting_bound(m));
}

TEST_CASE("reference SR(4,n) strings are available") {
  CHECK(sr4_reference_spectrum(3) == "9^1 3^4 1^3 (-1)^6 (-3)^6");
  CHECK(Spectrum::parse(sr4_reference_spectrum(15)).total() == 816);
  CHECK_THROWS_AS(sr4_reference_spectrum(16), Error);
}
