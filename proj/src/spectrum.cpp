#include "rooklab/spectrum.hpp"

#include <algorithm>
#include <cctype>
#include <future>
#include <sstream>

namespace rooklab {

Spectrum Spectrum::from_pairs(std::vector<Pair> pairs) {
  std::map<std::int64_t, std::int64_t, std::greater<>> merged;
  for (auto [value, mult] : pairs) merged[value] += mult;
  Spectrum out;
  for (auto [value, mult] : merged) {
    if (mult < 0) throw Error("spectrum has a negative multiplicity for eigenvalue " + std::to_string(value));
    if (mult > 0) out.pairs_.emplace_back(value, mult);
  }
  return out;
}

Spectrum Spectrum::parse(std::string_view text) {
  std::vector<Pair> pairs;
  std::string token;
  std::istringstream in{std::string(text)};
  while (in >> token) {
    std::string cleaned;
    for (char ch : token)
      if (ch != '(' && ch != ')' && ch != '$' && ch != '{' && ch != '}') cleaned.push_back(ch);
    const auto caret = cleaned.find('^');
    if (caret == std::string::npos) throw Error("spectrum token without exponent: " + token);
    try {
      pairs.emplace_back(std::stoll(cleaned.substr(0, caret)), std::stoll(cleaned.substr(caret + 1)));
    } catch (const std::exception&) {
      throw Error("malformed spectrum token: " + token);
    }
  }
  return from_pairs(std::move(pairs));
}

std::int64_t Spectrum::total() const {
  std::int64_t t = 0;
  for (auto [value, mult] : pairs_) t += mult;
  return t;
}

std::int64_t Spectrum::multiplicity(std::int64_t eigenvalue) const {
  for (auto [value, mult] : pairs_)
    if (value == eigenvalue) return mult;
  return 0;
}

std::int64_t Spectrum::moment(int power) const {
  std::int64_t sum = 0;
  for (auto [value, mult] : pairs_) {
    std::int64_t term = mult;
    for (int i = 0; i < power; ++i) term *= value;
    sum += term;
  }
  return sum;
}

bool Spectrum::is_submultiset_of(const Spectrum& other) const {
  for (auto [value, mult] : pairs_)
    if (other.multiplicity(value) < mult) return false;
  return true;
}

std::string Spectrum::to_string() const {
  std::string out;
  for (auto [value, mult] : pairs_) {
    if (!out.empty()) out.push_back(' ');
    if (value < 0)
      out += "(" + std::to_string(value) + ")";
    else
      out += std::to_string(value);
    out += "^" + std::to_string(mult);
  }
  return out;
}

nlohmann::json Spectrum::to_json() const {
  nlohmann::json pairs = nlohmann::json::array();
  for (auto [value, mult] : pairs_) pairs.push_back({value, mult});
  return {{"pairs", pairs}};
}

IncompleteSpectrum::IncompleteSpectrum(Spectrum found, std::size_t missing)
    : Error("integral eigenvalues account for all but " + std::to_string(missing) + " dimensions"),
      found_(std::move(found)),
      missing_(missing) {}

void SparseVector::add(int index, const mpz_class& value) {
  if (sgn(value) == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(index, value);
  if (!inserted) {
    it->second += value;
    if (sgn(it->second) == 0) coeffs_.erase(it);
  }
}

mpz_class SparseVector::at(int index) const {
  auto it = coeffs_.find(index);
  return it == coeffs_.end() ? mpz_class(0) : it->second;
}

bool verify_eigenvector(const Graph& g, const SparseVector& vec, long lambda) {
  std::map<int, mpz_class> image;
  for (const auto& [index, value] : vec.coefficients()) {
    if (index < 0 || static_cast<std::size_t>(index) >= g.order())
      throw Error("verify_eigenvector: index out of range");
    bits::for_each(g.row(static_cast<std::size_t>(index)), [&](std::size_t j) { image[static_cast<int>(j)] += value; });
    image[index] -= lambda * value;
  }
  for (const auto& [index, value] : image)
    if (sgn(value) != 0) return false;
  return true;
}

IntMatrix stack_rows(const std::vector<SparseVector>& vectors, std::size_t dim) {
  IntMatrix out(vectors.size(), dim);
  for (std::size_t r = 0; r < vectors.size(); ++r)
    for (const auto& [index, value] : vectors[r].coefficients()) out(r, static_cast<std::size_t>(index)) = value;
  return out;
}

namespace {

constexpr std::uint32_t kPrimes[] = {2147483647U, 2147483629U, 2147483587U};

struct CandidateRange {
  long lowest;
  long highest;
};

CandidateRange default_range(const Graph& g) {
  if (g.family() == Family::kSimplicialRook) {
    const auto [m, n] = *g.parameters();
    const long k = static_cast<long>(n) * (m - 1);
    return {-std::min<long>(n, binom(m, 2)), k};
  }
  const long d = static_cast<long>(g.max_degree());
  return {-d, d};
}

/// Vectors whose images under the automorphisms known from the construction
/// span the whole space.
std::vector<std::size_t> generating_vertices(const Graph& g) {
  std::vector<std::size_t> out;
  if (g.family() == Family::kSimplicialRook) {
    // coordinate permutations act on SR(m,n); each orbit has one non-increasing vertex
    for (std::size_t i = 0; i < g.order(); ++i)
      if (std::is_sorted(g.label(i).begin(), g.label(i).end(), std::greater<>())) out.push_back(i);
  } else if (g.family() == Family::kJohnson && g.order() > 0) {
    out.push_back(0);
  } else {
    for (std::size_t i = 0; i < g.order(); ++i) out.push_back(i);
  }
  return out;
}

/// Checks prod_c (A - cI) e_x == 0 for every generating vertex x.
bool annihilates(const Graph& g, const std::vector<long>& eigenvalues) {
  const std::size_t n = g.order();
  std::vector<std::vector<int>> adjacency(n);
  for (std::size_t i = 0; i < n; ++i) adjacency[i] = g.neighbors(i);
  std::vector<mpz_class> current(n), next(n);
  for (std::size_t start : generating_vertices(g)) {
    std::fill(current.begin(), current.end(), 0);
    current[start] = 1;
    for (long c : eigenvalues) {
      for (std::size_t i = 0; i < n; ++i) {
        next[i] = current[i];
        next[i] *= -c;
        for (int j : adjacency[i]) next[i] += current[static_cast<std::size_t>(j)];
      }
      std::swap(current, next);
    }
    for (const mpz_class& value : current)
      if (sgn(value) != 0) return false;
  }
  return true;
}

template <typename F>
std::vector<std::size_t> per_candidate(const CandidateRange& range, F&& nullity_of) {
  const std::size_t count = static_cast<std::size_t>(range.highest - range.lowest + 1);
  std::vector<std::size_t> out(count, 0);
  const unsigned workers = std::min<unsigned>(thread_count(), static_cast<unsigned>(count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = nullity_of(range.lowest + static_cast<long>(i));
    return out;
  }
  std::vector<std::future<void>> tasks;
  for (unsigned w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < count; i += workers) out[i] = nullity_of(range.lowest + static_cast<long>(i));
    }));
  }
  for (auto& t : tasks) t.get();
  return out;
}

SpectrumResult assemble(const CandidateRange& range, const std::vector<std::size_t>& mults, std::size_t order,
                        std::string method) {
  std::vector<Spectrum::Pair> pairs;
  std::size_t total = 0;
  for (std::size_t i = 0; i < mults.size(); ++i) {
    if (mults[i] == 0) continue;
    pairs.emplace_back(range.lowest + static_cast<long>(i), static_cast<std::int64_t>(mults[i]));
    total += mults[i];
  }
  SpectrumResult result;
  result.spectrum = Spectrum::from_pairs(std::move(pairs));
  result.missing = order - total;
  result.method = std::move(method);
  return result;
}

}  // namespace

SpectrumResult integral_spectrum_lenient(const Graph& g, const SpectrumOptions& options) {
  CandidateRange range = default_range(g);
  if (options.lowest) range.lowest = *options.lowest;
  if (options.highest) range.highest = *options.highest;
  const std::size_t order = g.order();
  if (order == 0) return {};

  const IntMatrix adjacency = adjacency_matrix(g);
  auto exact_nullity = [&](long c) { return nullity(shift_diagonal(adjacency, c)); };

  if (options.engine == SpectrumEngine::kBareiss) {
    return assemble(range, per_candidate(range, exact_nullity), order, "bareiss");
  }

  std::vector<std::size_t> screened;
  for (std::uint32_t prime : kPrimes) {
    std::vector<std::size_t> mults =
        per_candidate(range, [&](long c) { return shifted_adjacency_nullity_mod_p(g, c, prime); });
    std::size_t total = 0;
    std::vector<long> found;
    for (std::size_t i = 0; i < mults.size(); ++i) {
      total += mults[i];
      if (mults[i] > 0) found.push_back(range.lowest + static_cast<long>(i));
    }
    screened = mults;
    if (total > order) continue;  // prime divides some minor; try the next one
    if (total < order) break;     // genuinely missing dimensions
    // Diagonalizable with eigenvalues in `found` and each rational nullity
    // bounded by the modular one: the bounds are attained.
    if (annihilates(g, found)) return assemble(range, mults, order, "modular-certified");
  }

  // Rational nullity never exceeds the modular one, so only the candidates
  // that survived screening need exact elimination.
  std::vector<std::size_t> exact(screened.size(), 0);
  for (std::size_t i = 0; i < screened.size(); ++i)
    if (screened[i] > 0) exact[i] = exact_nullity(range.lowest + static_cast<long>(i));
  return assemble(range, exact, order, "bareiss");
}

Spectrum integral_spectrum(const Graph& g, const SpectrumOptions& options) {
  SpectrumResult result = integral_spectrum_lenient(g, options);
  if (result.missing != 0) throw IncompleteSpectrum(result.spectrum, result.missing);
  const auto& s = result.spectrum;
  if (s.moment(1) != 0) throw Error("spectrum moment check failed: eigenvalue sum is not the trace");
  if (s.moment(2) != static_cast<std::int64_t>(2 * g.edge_count()))
    throw Error("spectrum moment check failed: squared sum is not trace(A^2)");
  return s;
}

Spectrum matrix_integral_spectrum(const IntMatrix& mat, long lowest, long highest) {
  std::vector<Spectrum::Pair> pairs;
  std::size_t total = 0;
  for (long c = lowest; c <= highest; ++c) {
    const std::size_t mult = nullity(shift_diagonal(mat, c));
    if (mult == 0) continue;
    pairs.emplace_back(c, static_cast<std::int64_t>(mult));
    total += mult;
  }
  Spectrum s = Spectrum::from_pairs(std::move(pairs));
  if (total != mat.rows()) throw IncompleteSpectrum(s, mat.rows() - total);
  return s;
}

bool halved_factorization_check(int m, int n) {
  if (m < 1) throw Error("halved_factorization_check requires m >= 1");
  const Graph sr = build_sr(m, n);
  std::vector<Composition> lower;
  for (int s = 0; s < n; ++s) {
    auto layer = enumerate_vertices(m, s);
    lower.insert(lower.end(), layer.begin(), layer.end());
  }
  const std::size_t v = sr.order();
  IntMatrix incidence(v, lower.size());
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t b = 0; b < lower.size(); ++b) {
      int differing = 0;
      for (int i = 0; i < m; ++i) differing += sr.label(a)[i] != lower[b][i];
      if (differing == 1) incidence(a, b) = 1;
    }
  const IntMatrix gram = incidence * incidence.transpose();
  const IntMatrix target = shift_diagonal(adjacency_matrix(sr), -n);
  return gram == target;
}

}  // namespace rooklab
