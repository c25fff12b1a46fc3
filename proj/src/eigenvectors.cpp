#include "rooklab/eigenvectors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <unordered_map>

namespace rooklab {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 1 || static_cast<std::size_t>(x) > images_.size() || seen[static_cast<std::size_t>(x - 1)])
      throw Error("not a permutation of 1.." + std::to_string(images_.size()));
    seen[static_cast<std::size_t>(x - 1)] = true;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> images(static_cast<std::size_t>(std::max(m, 0)));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::reversal(int m) {
  auto images = identity(m).images_;
  std::reverse(images.begin(), images.end());
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> images;
  const bool separated = text.find_first_of(", ") != std::string_view::npos;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) images.push_back(std::stoi(current));
    current.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      if (separated) {
        current += c;
      } else {
        images.push_back(c - '0');
      }
    } else if (c == ',' || c == ' ' || c == '(' || c == ')') {
      flush();
    } else {
      throw Error("bad permutation text: " + std::string(text));
    }
  }
  flush();
  return Permutation(std::move(images));
}

Permutation Permutation::from_inversion_vector(const std::vector<int>& a) {
  const int m = static_cast<int>(a.size());
  std::vector<int> unused(static_cast<std::size_t>(m));
  std::iota(unused.begin(), unused.end(), 1);
  std::vector<int> images;
  for (int i = 0; i < m; ++i) {
    const int ai = a[static_cast<std::size_t>(i)];
    if (ai < 0 || ai >= static_cast<int>(unused.size())) throw Error("invalid inversion vector");
    images.push_back(unused[static_cast<std::size_t>(ai)]);
    unused.erase(unused.begin() + ai);
  }
  return Permutation(std::move(images));
}

int Permutation::inversions() const {
  const auto a = inversion_vector(*this);
  return std::accumulate(a.begin(), a.end(), 0);
}

int Permutation::sign() const {
  std::vector<bool> visited(images_.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (visited[start]) continue;
    std::size_t length = 0;
    for (std::size_t x = start; !visited[x]; x = static_cast<std::size_t>(images_[x] - 1)) {
      visited[x] = true;
      ++length;
    }
    transpositions += length - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

std::string Permutation::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i > 0 && images_.size() > 9) s += ',';
    s += std::to_string(images_[i]);
  }
  return s;
}

std::vector<int> inversion_vector(const Permutation& pi) {
  const auto& p = pi.images();
  std::vector<int> a(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++a[i];
  return a;
}

namespace {

void codes_with_sum(int m, int position, int remaining, std::vector<int>& code, std::vector<std::vector<int>>& out) {
  if (position == m) {
    if (remaining == 0) out.push_back(code);
    return;
  }
  const int cap = std::min(m - 1 - position, remaining);
  // the tail can absorb at most sum_{k > position} (m - 1 - k)
  const int tail = (m - 1 - position) * (m - 2 - position) / 2;
  for (int a = std::max(0, remaining - tail); a <= cap; ++a) {
    code[static_cast<std::size_t>(position)] = a;
    codes_with_sum(m, position + 1, remaining - a, code, out);
  }
}

void admissible_from(const std::vector<int>& a, std::size_t position, std::vector<int>& sigma, std::vector<bool>& used,
                     std::vector<AdmissiblePermutation>& out) {
  const std::size_t m = a.size();
  if (position == m) {
    AdmissiblePermutation entry{Permutation(sigma), Composition(m)};
    for (std::size_t i = 0; i < m; ++i)
      entry.x[i] = a[i] + static_cast<int>(i + 1) - sigma[i];
    out.push_back(std::move(entry));
    return;
  }
  const int bound = a[position] + static_cast<int>(position + 1);
  for (int s = 1; s <= std::min(bound, static_cast<int>(m)); ++s) {
    if (used[static_cast<std::size_t>(s - 1)]) continue;
    used[static_cast<std::size_t>(s - 1)] = true;
    sigma[position] = s;
    admissible_from(a, position + 1, sigma, used, out);
    used[static_cast<std::size_t>(s - 1)] = false;
  }
}

}  // namespace

std::vector<Permutation> permutations_with_inversions(int m, int n) {
  std::vector<std::vector<int>> codes;
  if (m < 0 || n < 0) return {};
  std::vector<int> code(static_cast<std::size_t>(m), 0);
  codes_with_sum(m, 0, n, code, codes);
  std::vector<Permutation> out;
  for (const auto& c : codes) out.push_back(Permutation::from_inversion_vector(c));
  // Lehmer codes in lexicographic order give permutations in lexicographic order.
  return out;
}

std::vector<AdmissiblePermutation> admissible_set(const Permutation& pi) {
  const auto a = inversion_vector(pi);
  std::vector<AdmissiblePermutation> out;
  std::vector<int> sigma(a.size(), 0);
  std::vector<bool> used(a.size(), false);
  admissible_from(a, 0, sigma, used, out);
  return out;
}

SparseVector f_pi(const Permutation& pi) {
  SparseVector out;
  for (const auto& entry : admissible_set(pi))
    out.add(static_cast<int>(composition_index(entry.x)), entry.sigma.sign());
  return out;
}

SparseVector f_pw(const std::vector<Rational>& p, const std::vector<Rational>& w, int m, int n) {
  if (m < 1 || p.size() != static_cast<std::size_t>(m) || w.size() != static_cast<std::size_t>(m))
    throw InvalidOrbit("p and w must have length m");
  SparseVector out;
  std::set<Composition> seen;
  auto sigma = Permutation::identity(m).images();
  do {
    Composition point(static_cast<std::size_t>(m));
    std::int64_t total = 0;
    for (std::size_t i = 0; i < point.size(); ++i) {
      const Rational value = p[i] + w[static_cast<std::size_t>(sigma[i] - 1)];
      if (value.denominator() != 1 || value.numerator() < 0)
        throw InvalidOrbit("orbit point is not a nonnegative integer vector");
      point[i] = static_cast<int>(value.numerator());
      total += point[i];
    }
    if (total != n) throw InvalidOrbit("orbit point does not sum to n");
    if (!seen.insert(point).second) throw InvalidOrbit("orbit points coincide");
    out.add(static_cast<int>(composition_index(point)), Permutation(sigma).sign());
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

std::vector<Rational> canonical_w(int m) {
  std::vector<Rational> w;
  for (int i = 0; i < m; ++i) w.emplace_back(1 - m + 2 * i, 2);
  return w;
}

std::vector<std::vector<Rational>> canonical_p_values(int m, int n) {
  std::vector<std::vector<Rational>> out;
  const std::int64_t spare = n - binom(m, 2);
  if (m < 1 || spare < 0) return out;
  for (const auto& q : enumerate_vertices(m, static_cast<int>(spare))) {
    std::vector<Rational> p;
    for (int e : q) p.push_back(Rational(m - 1, 2) + e);
    out.push_back(std::move(p));
  }
  return out;
}

Graph gamma_graph(const Permutation& pi) {
  const auto admissible = admissible_set(pi);
  const int n = pi.inversions();
  GraphBuilder builder(admissible.size());
  std::vector<std::vector<int>> labels;
  for (const auto& entry : admissible) labels.push_back(entry.x);
  for (std::size_t u = 0; u < admissible.size(); ++u) {
    for (std::size_t v = u + 1; v < admissible.size(); ++v) {
      int differing = 0;
      for (std::size_t i = 0; i < labels[u].size(); ++i) differing += labels[u][i] != labels[v][i];
      if (differing != 2) continue;
      if (admissible[u].sigma.sign() == admissible[v].sigma.sign())
        throw Error("gamma graph has an edge inside a sign class");
      builder.add_edge(u, v);
    }
  }
  builder.set_labels(labels);
  Graph g = std::move(builder).build();
  const auto degree = g.regular_degree();
  if (!degree || static_cast<int>(*degree) != n) throw Error("gamma graph is not n-regular");
  return g;
}

namespace {

std::vector<std::pair<std::string, Graph>> named_gamma_shapes(std::size_t order, std::size_t degree) {
  std::vector<std::pair<std::string, Graph>> out;
  if (degree >= 1 && degree < 20 && order == (std::size_t{1} << degree))
    out.emplace_back("Q_" + std::to_string(degree), hypercube(static_cast<int>(degree)));
  if (order == 6 && degree == 3) out.emplace_back("K_{3,3}", complete_bipartite(3, 3));
  if (order == 12 && degree == 4)
    out.emplace_back("K_{3,3} x K_2", cartesian_product(complete_bipartite(3, 3), complete_graph(2)));
  return out;
}

}  // namespace

std::vector<GammaClass> classify_gamma(int n, std::optional<int> max_m) {
  std::vector<GammaClass> classes;
  if (n < 0) return classes;
  const int top = max_m.value_or(2 * n);
  std::unordered_map<CanonicalForm, std::size_t, CertificateHash, CertificateEqual> index;
  for (int m = 1; m <= top; ++m) {
    for (const auto& pi : permutations_with_inversions(m, n)) {
      Graph g = gamma_graph(pi);
      CanonicalForm form = canonical_form(g);
      auto it = index.find(form);
      if (it != index.end()) {
        ++classes[it->second].members;
        continue;
      }
      GammaClass entry;
      entry.first_pi = pi;
      entry.members = 1;
      entry.vertices = g.order();
      entry.degree = static_cast<std::size_t>(n);
      entry.bipartite = bipartition(g).has_value();
      for (const auto& [name, shape] : named_gamma_shapes(g.order(), entry.degree))
        if (canonical_form(shape).same_graph_as(form)) entry.name = name;
      entry.spectrum = integral_spectrum_lenient(g);
      entry.form = form;
      entry.representative = std::move(g);
      index.emplace(std::move(form), classes.size());
      classes.push_back(std::move(entry));
    }
  }
  return classes;
}

SmallEigenvectorKind parse_small_kind(std::string_view name) {
  if (name == "n3_m-3") return SmallEigenvectorKind::kN3MMinus3;
  if (name == "n4_2m-5") return SmallEigenvectorKind::kN4TwoMMinus5;
  if (name == "n4_m-6") return SmallEigenvectorKind::kN4MMinus6;
  throw Error("unknown eigenvector kind: " + std::string(name));
}

long small_kind_eigenvalue(SmallEigenvectorKind kind, int m) {
  switch (kind) {
    case SmallEigenvectorKind::kN3MMinus3: return m - 3;
    case SmallEigenvectorKind::kN4TwoMMinus5: return 2L * m - 5;
    case SmallEigenvectorKind::kN4MMinus6: return m - 6;
  }
  return 0;
}

SparseVector small_n_eigenvector(SmallEigenvectorKind kind, int m, int h, int i) {
  const bool pair_kind = kind == SmallEigenvectorKind::kN4MMinus6;
  const int min_m = kind == SmallEigenvectorKind::kN3MMinus3 ? 3 : 4;
  if (m < min_m) throw UnsupportedParameters("m too small for this eigenvector kind");
  if (h < 1 || h > m || (pair_kind && (i <= h || i > m)))
    throw Error("eigenvector anchor out of range");

  SparseVector out;
  auto put = [&](std::initializer_list<std::pair<int, int>> entries, int coefficient) {
    Composition x(static_cast<std::size_t>(m), 0);
    for (auto [coordinate, value] : entries) x[static_cast<std::size_t>(coordinate - 1)] += value;
    out.add(static_cast<int>(composition_index(x)), coefficient);
  };

  switch (kind) {
    case SmallEigenvectorKind::kN3MMinus3:
      for (int j = 1; j <= m; ++j) {
        if (j == h) continue;
        put({{h, 2}, {j, 1}}, 1);
        put({{h, 1}, {j, 2}}, -1);
      }
      break;
    case SmallEigenvectorKind::kN4TwoMMinus5:
      for (int j = 1; j <= m; ++j) {
        if (j == h) continue;
        put({{h, 2}, {j, 2}}, -1);
        put({{h, 3}, {j, 1}}, -1);
        put({{h, 1}, {j, 3}}, 2);
        for (int k = 1; k <= m; ++k) {
          if (k == h || k == j) continue;
          if (j < k) put({{h, 2}, {j, 1}, {k, 1}}, -2);
          put({{h, 1}, {j, 2}, {k, 1}}, 1);
        }
      }
      break;
    case SmallEigenvectorKind::kN4MMinus6:
      for (int j = 1; j <= m; ++j) {
        if (j == h || j == i) continue;
        put({{h, 1}, {j, 3}}, 1);
        put({{i, 2}, {j, 2}}, 1);
        put({{h, 2}, {i, 1}, {j, 1}}, 1);
        put({{i, 1}, {j, 3}}, -1);
        put({{h, 2}, {j, 2}}, -1);
        put({{h, 1}, {i, 2}, {j, 1}}, -1);
      }
      break;
  }
  return out;
}

}  // namespace rooklab
