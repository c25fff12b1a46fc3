#include "rooklab/closed_forms.hpp"

#include <array>

namespace rooklab {

namespace {

constexpr std::array<std::string_view, 16> kSr4Spectra = {
    "0^1",
    "3^1 (-1)^3",
    "6^1 1^4 (-2)^5",
    "9^1 3^4 1^3 (-1)^6 (-3)^6",
    "12^1 5^4 3^4 0^11 (-2)^6 (-3)^4 (-4)^5",
    "15^1 7^4 5^4 3^3 1^12 (-1)^9 (-2)^8 (-3)^4 (-4)^8 (-5)^3",
    "18^1 9^4 7^4 5^4 2^17 0^6 (-1)^16 (-2)^3 (-3)^12 (-4)^8 (-5)^8 (-6)^1",
    "21^1 11^4 9^4 7^4 5^3 3^18 1^9 0^12 (-1)^18 (-3)^21 (-4)^8 (-5)^14 (-6)^4",
    "24^1 13^4 11^4 9^4 7^4 4^23 2^6 1^16 0^18 (-1)^12 (-2)^8 (-3)^24 (-4)^11 (-5)^20 (-6)^10",
    "27^1 15^4 13^4 11^4 9^4 7^3 5^24 3^9 2^12 1^22 0^20 (-1)^7 (-2)^20 (-3)^24 (-4)^16 (-5)^26 (-6)^20",
    "30^1 17^4 15^4 13^4 11^4 9^4 6^29 4^6 3^16 2^18 1^28 0^14 (-1)^12 (-2)^29 (-3)^24 (-4)^22 (-5)^32 (-6)^35",
    "33^1 19^4 17^4 15^4 13^4 11^4 9^3 7^30 5^9 4^12 3^22 2^24 1^30 0^8 (-1)^24 (-2)^32 (-3)^27 (-4)^28 (-5)^38 (-6)^56",
    "36^1 21^4 19^4 17^4 15^4 13^4 11^4 8^35 6^6 5^16 4^18 3^28 2^30 1^24 0^11 (-1)^36 (-2)^32 (-3)^32 (-4)^34 (-5)^44 (-6)^84",
    "39^1 23^4 21^4 19^4 17^4 15^4 13^4 11^3 9^36 7^9 6^12 5^22 4^24 3^34 2^32 1^18 0^20 (-1)^45 (-2)^32 (-3)^38 (-4)^40 (-5)^50 (-6)^120",
    "42^1 25^4 23^4 21^4 19^4 17^4 15^4 13^4 10^41 8^6 7^16 6^18 5^28 4^30 3^40 2^26 1^20 0^32 (-1)^48 (-2)^35 (-3)^44 (-4)^46 (-5)^56 (-6)^165",
    "45^1 27^4 25^4 23^4 21^4 19^4 17^4 15^4 13^3 11^42 9^9 8^12 7^22 6^24 5^34 4^36 3^42 2^20 1^27 0^44 (-1)^48 (-2)^40 (-3)^50 (-4)^52 (-5)^62 (-6)^220",
};

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

/// Appends a^first down to b: eigenvalues a, a-1, ..., b; each following
/// multiplicity grows by 2 for an even eigenvalue and by 10 for an odd one.
void append_descending(std::vector<Spectrum::Pair>& out, std::int64_t a, std::int64_t first, std::int64_t b) {
  std::int64_t mult = first;
  for (std::int64_t c = a; c >= b; --c) {
    if (c != a) mult += (c % 2 == 0) ? 2 : 10;
    out.emplace_back(c, mult);
  }
}

void append_rest(PredictedSpectrum& p, std::int64_t eigenvalue, int m, int n) {
  std::int64_t listed = 0;
  for (auto [value, mult] : p.pairs) listed += mult;
  const std::int64_t rest = binom(n + m - 1, n) - listed;
  if (rest < 0) throw Error("closed form lists more eigenvalues than vertices");
  p.pairs.emplace_back(eigenvalue, rest);
}

PredictedSpectrum small_n(int n, int m) {
  PredictedSpectrum p;
  const std::int64_t M = m;
  const std::int64_t c2 = binom(m, 2), c3 = binom(m, 3), c4 = binom(m, 4);
  switch (n) {
    case 0:
      p.pairs = {{0, 1}};
      break;
    case 1:
      p.pairs = {{M - 1, 1}, {-1, M - 1}};
      break;
    case 2:
      p.pairs = {{2 * M - 2, 1}, {M - 3, M}};
      append_rest(p, -2, m, n);
      break;
    case 3:
      p.pairs = {{3 * M - 3, 1}, {2 * M - 5, M}, {M - 3, M - 1}, {M - 5, c2}};
      append_rest(p, -3, m, n);
      break;
    case 4:
      p.pairs = {{4 * M - 4, 1}, {3 * M - 7, M},  {2 * M - 5, M},  {2 * M - 8, c2},
                 {M - 4, c2 - 1}, {M - 6, c2}, {M - 7, c3}};
      append_rest(p, -4, m, n);
      break;
    case 5:
      p.provenance = Provenance::kConjectured;
      p.pairs = {{5 * M - 5, 1},  {4 * M - 9, M},  {3 * M - 7, M},      {3 * M - 11, c2},
                 {2 * M - 5, M - 1}, {2 * M - 7, c2}, {2 * M - 9, c2},  {2 * M - 11, c3},
                 {M - 5, c3 - 1}, {M - 6, M * (M - 2)}, {M - 8, 2 * c3}, {M - 9, c4}};
      append_rest(p, -5, m, n);
      break;
    default:
      throw UnsupportedParameters("no closed form for n = " + std::to_string(n));
  }
  return p;
}

PredictedSpectrum three_columns(int n) {
  PredictedSpectrum p;
  p.pairs.emplace_back(2 * n, 1);
  for (std::int64_t b = -2; b <= n - 2; ++b) p.pairs.emplace_back(b, 3);
  p.pairs.emplace_back(-3, binom(n - 1, 2));
  // exceptions are removed by subtracting multiplicities
  if (n % 2 == 1) {
    const std::int64_t a = (n - 3) / 2;
    p.pairs.emplace_back(a - 1, -3);
    p.pairs.emplace_back(a, -1);
  } else {
    const std::int64_t a = (n - 4) / 2;
    p.pairs.emplace_back(a, -3);
    p.pairs.emplace_back(a - 1, -1);
  }
  return p;
}

PredictedSpectrum four_columns(int n) {
  PredictedSpectrum p;
  p.provenance = Provenance::kConjectured;
  auto& out = p.pairs;
  const std::int64_t N = n;
  out.emplace_back(3 * N, 1);
  for (std::int64_t b = 2 * N - 3; b >= N - 1; --b)
    if (b % 2 != 0) out.emplace_back(b, 4);

  if (n % 2 == 0) {
    out.emplace_back(N - 4, 3 * N - 1);
    out.emplace_back(N - 6, 6);
    append_descending(out, N - 7, 16, (N - 8) / 2);
  } else {
    out.emplace_back(N - 2, 3);
    out.emplace_back(N - 4, 3 * N - 3);
    out.emplace_back(N - 6, 9);
    append_descending(out, N - 7, 12, (N - 7) / 2);
  }

  const std::int64_t q = ceil_div(N - 12, 3);
  const std::int64_t s = N / 4;
  switch (n % 4) {
    case 0:
      out.emplace_back(2 * s - 5, 3 * N - 12);
      append_descending(out, 2 * s - 6, 3 * N - 26, q);
      break;
    case 1:
      out.emplace_back(2 * s - 4, 3 * N - 7);
      out.emplace_back(2 * s - 5, 3 * N - 21);
      append_descending(out, 2 * s - 6, 3 * N - 23, q);
      break;
    case 2:
      out.emplace_back(2 * s - 4, 3 * N - 16);
      append_descending(out, 2 * s - 5, 3 * N - 22, q);
      break;
    default:
      out.emplace_back(2 * s - 3, 3 * N - 3);
      out.emplace_back(2 * s - 4, 3 * N - 25);
      append_descending(out, 2 * s - 5, 3 * N - 19, q);
      break;
  }

  if (n % 3 == 0) out.emplace_back(N / 3 - 4, 1);

  const std::int64_t t = N / 6;
  switch (n % 6) {
    case 0:
      out.emplace_back(2 * t - 5, 4 * N - 12);
      out.emplace_back(2 * t - 6, 4 * N - 16);
      append_descending(out, 2 * t - 7, 4 * N - 16, -5);
      break;
    case 1:
      out.emplace_back(2 * t - 4, 4 * N - 32);
      out.emplace_back(2 * t - 5, 4 * N - 7);
      out.emplace_back(2 * t - 6, 4 * N - 20);
      append_descending(out, 2 * t - 7, 4 * N - 14, -5);
      break;
    case 2:
      out.emplace_back(2 * t - 4, 4 * N - 24);
      out.emplace_back(2 * t - 5, 4 * N - 8);
      out.emplace_back(2 * t - 6, 4 * N - 21);
      append_descending(out, 2 * t - 7, 4 * N - 12, -5);
      break;
    case 3:
      out.emplace_back(2 * t - 4, 4 * N - 16);
      out.emplace_back(2 * t - 5, 4 * N - 12);
      append_descending(out, 2 * t - 6, 4 * N - 20, -5);
      break;
    case 4:
      out.emplace_back(2 * t - 3, 4 * N - 28);
      out.emplace_back(2 * t - 4, 4 * N - 11);
      out.emplace_back(2 * t - 5, 4 * N - 16);
      append_descending(out, 2 * t - 6, 4 * N - 18, -5);
      break;
    default:
      out.emplace_back(2 * t - 3, 4 * N - 20);
      out.emplace_back(2 * t - 4, 4 * N - 12);
      out.emplace_back(2 * t - 5, 4 * N - 17);
      append_descending(out, 2 * t - 6, 4 * N - 16, -5);
      break;
  }

  out.emplace_back(-6, binom(N - 3, 3));
  return p;
}

}  // namespace

std::string_view family_name(SpectrumFamily family) {
  switch (family) {
    case SpectrumFamily::kN0: return "n0";
    case SpectrumFamily::kN1: return "n1";
    case SpectrumFamily::kN2: return "n2";
    case SpectrumFamily::kN3: return "n3";
    case SpectrumFamily::kN4: return "n4";
    case SpectrumFamily::kN5: return "n5";
    case SpectrumFamily::kM3: return "m3";
    case SpectrumFamily::kM4: return "m4";
  }
  return "?";
}

SpectrumFamily parse_family(std::string_view name) {
  for (auto f : {SpectrumFamily::kN0, SpectrumFamily::kN1, SpectrumFamily::kN2, SpectrumFamily::kN3,
                 SpectrumFamily::kN4, SpectrumFamily::kN5, SpectrumFamily::kM3, SpectrumFamily::kM4})
    if (family_name(f) == name) return f;
  throw UnsupportedParameters("unknown spectrum family: " + std::string(name));
}

std::int64_t mahonian(int m, int n) {
  if (m < 1 || n < 0) return 0;
  std::vector<std::int64_t> poly{1};
  for (int i = 2; i <= m; ++i) {
    std::vector<std::int64_t> next(poly.size() + static_cast<std::size_t>(i) - 1, 0);
    for (std::size_t d = 0; d < poly.size(); ++d)
      for (int e = 0; e < i; ++e) next[d + static_cast<std::size_t>(e)] += poly[d];
    poly = std::move(next);
  }
  return static_cast<std::size_t>(n) < poly.size() ? poly[static_cast<std::size_t>(n)] : 0;
}

std::int64_t smallest_eigenvalue_formula(int m, int n) { return std::max<std::int64_t>(-n, -binom(m, 2)); }

std::int64_t bottom_multiplicity_formula(int m, int n) { return binom(n - binom(m - 1, 2), m - 1); }

PredictedSpectrum johnson_spectrum(int v, int n) {
  if (n < 0 || n > v) throw UnsupportedParameters("johnson_spectrum requires 0 <= n <= v");
  PredictedSpectrum p;
  for (std::int64_t i = 0; i <= n; ++i)
    p.pairs.emplace_back((n - i) * (v - n - i) - i, binom(v, i) - binom(v, i - 1));
  return p;
}

bool family_supports(SpectrumFamily family, int m, int n) {
  switch (family) {
    case SpectrumFamily::kN0: return n == 0 && m >= 1;
    case SpectrumFamily::kN1: return n == 1 && m >= 1;
    case SpectrumFamily::kN2: return n == 2 && m >= 2;
    case SpectrumFamily::kN3: return n == 3 && m >= 3;
    case SpectrumFamily::kN4: return n == 4 && m >= 4;
    case SpectrumFamily::kN5: return n == 5 && m >= 5;
    case SpectrumFamily::kM3: return m == 3 && n >= 1;
    case SpectrumFamily::kM4: return m == 4 && n >= 6 && n != 7;
  }
  return false;
}

PredictedSpectrum predicted_spectrum(SpectrumFamily family, int m, int n) {
  if (!family_supports(family, m, n))
    throw UnsupportedParameters("family " + std::string(family_name(family)) + " does not cover (m,n) = (" +
                                std::to_string(m) + "," + std::to_string(n) + ")");
  switch (family) {
    case SpectrumFamily::kM3: return three_columns(n);
    case SpectrumFamily::kM4: return four_columns(n);
    default: return small_n(n, m);
  }
}

PredictedSpectrum common_quotient_spectrum(int m, int n) {
  if (m < 1 || n < 1) throw UnsupportedParameters("common_quotient_spectrum requires m, n >= 1");
  PredictedSpectrum p;
  for (std::int64_t i = 0; i <= std::min(m, n) - 1; ++i) p.pairs.emplace_back((n - i) * (m - i) - n, binom(m, i));
  if (n < m) p.pairs.emplace_back(-n, binom(m, n) - 1);
  return p;
}

std::int64_t independence_formula(int m, int n) {
  if (m == 3 && n >= 0) return (2 * n + 3) / 3;
  if (n == 3 && m >= 1) {
    const std::int64_t M = m;
    switch (m % 6) {
      case 1:
      case 5: return (M + 1) * (M + 2) / 6;
      case 3: return M * (M + 3) / 6;
      case 0:
      case 4: return M * (M + 2) / 6;
      default: return (M * M + 2 * M - 2) / 6;
    }
  }
  throw UnsupportedParameters("no independence-number formula for (m,n) = (" + std::to_string(m) + "," +
                              std::to_string(n) + ")");
}

std::int64_t independence_counting_bound(int m) {
  if (m < 3) throw UnsupportedParameters("counting bound needs m >= 3");
  return m + (static_cast<std::int64_t>(m) * ((m - 3) / 2) + 1) / 3;
}

std::string_view sr4_reference_spectrum(int n) {
  if (n < 0 || n >= static_cast<int>(kSr4Spectra.size())) throw UnsupportedParameters("no reference row for n");
  return kSr4Spectra[static_cast<std::size_t>(n)];
}

}  // namespace rooklab
