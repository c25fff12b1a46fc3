#include "rooklab/invariants.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

namespace rooklab {

namespace {

using bits::Word;

std::vector<Word> empty_row(std::size_t words) { return std::vector<Word>(words, 0); }

bool row_empty(const std::vector<Word>& row) {
  return std::all_of(row.begin(), row.end(), [](Word w) { return w == 0; });
}

/// Removal order of repeatedly deleting a minimum-degree vertex (ties by index).
std::vector<int> degeneracy_order(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::vector<bool> removed(n, false);
  std::vector<int> order;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!removed[v] && (best == n || degree[v] < degree[best])) best = v;
    removed[best] = true;
    order.push_back(static_cast<int>(best));
    bits::for_each(g.row(best), [&](std::size_t u) {
      if (!removed[u]) --degree[u];
    });
  }
  return order;
}

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : n_(g.order()), words_(bits::words_for(g.order())) {
    auto removal = degeneracy_order(g);
    order_.assign(removal.rbegin(), removal.rend());
    std::vector<std::size_t> position(n_);
    for (std::size_t i = 0; i < n_; ++i) position[static_cast<std::size_t>(order_[i])] = i;
    rows_.assign(n_ * words_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      std::span<Word> row{rows_.data() + i * words_, words_};
      bits::for_each(g.row(static_cast<std::size_t>(order_[i])), [&](std::size_t u) { bits::set(row, position[u]); });
    }
  }

  std::vector<int> run() {
    auto all = empty_row(words_);
    for (std::size_t i = 0; i < n_; ++i) bits::set(std::span<Word>(all), i);
    if (n_ > 0) expand(all);
    std::vector<int> out;
    for (auto i : best_) out.push_back(order_[i]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::span<const Word> row(std::size_t i) const { return {rows_.data() + i * words_, words_}; }

  void expand(std::vector<Word> candidates) {
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> colours;
    colour_sort(candidates, vertices, colours);
    for (std::size_t idx = vertices.size(); idx-- > 0;) {
      if (current_.size() + colours[idx] <= best_.size()) return;
      const std::size_t v = vertices[idx];
      current_.push_back(v);
      std::vector<Word> next(words_);
      auto r = row(v);
      for (std::size_t w = 0; w < words_; ++w) next[w] = candidates[w] & r[w];
      if (row_empty(next)) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      bits::reset(std::span<Word>(candidates), v);
    }
  }

  void colour_sort(const std::vector<Word>& candidates, std::vector<std::size_t>& vertices,
                   std::vector<std::size_t>& colours) const {
    std::vector<Word> uncoloured = candidates;
    std::vector<Word> available(words_);
    std::size_t colour = 0;
    while (!row_empty(uncoloured)) {
      ++colour;
      available = uncoloured;
      for (std::size_t w = 0; w < words_; ++w) {
        while (available[w] != 0) {
          const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(available[w]));
          vertices.push_back(v);
          colours.push_back(colour);
          bits::reset(std::span<Word>(uncoloured), v);
          auto r = row(v);
          for (std::size_t x = w; x < words_; ++x) available[x] &= ~r[x];
          available[w] &= ~(Word{1} << (v % 64));
        }
      }
    }
  }

  std::size_t n_;
  std::size_t words_;
  std::vector<int> order_;
  std::vector<Word> rows_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

void bron_kerbosch(const Graph& g, std::vector<int>& r, std::vector<Word> p, std::vector<Word> x,
                   std::vector<std::vector<int>>& out) {
  const std::size_t words = g.words_per_row();
  if (row_empty(p)) {
    if (row_empty(x)) out.push_back(r);
    return;
  }
  std::size_t pivot = 0;
  std::size_t pivot_score = 0;
  bool have_pivot = false;
  auto consider = [&](std::size_t u) {
    const std::size_t score = bits::count_and(g.row(u), p);
    if (!have_pivot || score > pivot_score) {
      pivot = u;
      pivot_score = score;
      have_pivot = true;
    }
  };
  bits::for_each(p, consider);
  bits::for_each(x, consider);
  std::vector<Word> branch(words);
  auto pivot_row = g.row(pivot);
  for (std::size_t w = 0; w < words; ++w) branch[w] = p[w] & ~pivot_row[w];
  for (std::size_t v : bits::members(branch)) {
    auto rv = g.row(v);
    std::vector<Word> p2(words), x2(words);
    for (std::size_t w = 0; w < words; ++w) {
      p2[w] = p[w] & rv[w];
      x2[w] = x[w] & rv[w];
    }
    r.push_back(static_cast<int>(v));
    bron_kerbosch(g, r, std::move(p2), std::move(x2), out);
    r.pop_back();
    bits::reset(std::span<Word>(p), v);
    bits::set(std::span<Word>(x), v);
  }
}

std::pair<int, int> differing_pair(const Composition& a, const Composition& b) {
  std::vector<int> diff;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) diff.push_back(static_cast<int>(i) + 1);
  if (diff.size() != 2) return {0, 0};
  return {diff[0], diff[1]};
}

/// Tries members = { base + sign * a e_i : i in I } with base the coordinate
/// minimum (sign +1) or maximum (sign -1).
bool fits_shifted(const std::vector<Composition>& members, int sign, CliqueType& out) {
  const std::size_t m = members.front().size();
  Composition base = members.front();
  for (const auto& u : members)
    for (std::size_t i = 0; i < m; ++i)
      base[i] = sign > 0 ? std::min(base[i], u[i]) : std::max(base[i], u[i]);
  int a = 0;
  std::vector<int> index_set;
  for (const auto& u : members) {
    int where = -1;
    for (std::size_t i = 0; i < m; ++i) {
      const int delta = sign * (u[i] - base[i]);
      if (delta == 0) continue;
      if (where >= 0 || delta < 0) return false;
      where = static_cast<int>(i);
      if (a == 0) a = delta;
      if (delta != a) return false;
    }
    if (where < 0) return false;
    index_set.push_back(where + 1);
  }
  std::sort(index_set.begin(), index_set.end());
  if (std::adjacent_find(index_set.begin(), index_set.end()) != index_set.end()) return false;
  out.type = sign > 0 ? 2 : 3;
  out.a = a;
  out.x = base;
  out.index_set = index_set;
  return true;
}

}  // namespace

std::size_t diameter(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) throw Disconnected("the empty graph has no diameter");
  const std::size_t words = g.words_per_row();
  std::size_t result = 0;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<Word> visited(words, 0), frontier(words, 0);
    bits::set(std::span<Word>(visited), s);
    bits::set(std::span<Word>(frontier), s);
    std::size_t reached = 1;
    std::size_t depth = 0;
    while (true) {
      std::vector<Word> next(words, 0);
      bits::for_each(frontier, [&](std::size_t v) {
        auto r = g.row(v);
        for (std::size_t w = 0; w < words; ++w) next[w] |= r[w];
      });
      for (std::size_t w = 0; w < words; ++w) {
        next[w] &= ~visited[w];
        visited[w] |= next[w];
      }
      const std::size_t added = bits::count(next);
      if (added == 0) break;
      reached += added;
      ++depth;
      frontier = std::move(next);
    }
    if (reached != n) throw Disconnected("graph is disconnected");
    result = std::max(result, depth);
  }
  return result;
}

std::vector<int> maximum_clique(const Graph& g) { return CliqueSearch(g).run(); }

std::size_t clique_number(const Graph& g) { return maximum_clique(g).size(); }

std::vector<int> maximum_independent_set(const Graph& g) { return maximum_clique(complement(g)); }

std::size_t independence_number(const Graph& g) { return maximum_independent_set(g).size(); }

std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
  std::vector<std::vector<int>> out;
  if (g.order() == 0) return out;
  const std::size_t words = g.words_per_row();
  std::vector<Word> p(words, 0);
  for (std::size_t v = 0; v < g.order(); ++v) bits::set(std::span<Word>(p), v);
  std::vector<int> r;
  bron_kerbosch(g, r, std::move(p), std::vector<Word>(words, 0), out);
  for (auto& c : out) std::sort(c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

nlohmann::json CliqueType::to_json() const {
  nlohmann::json j_out{{"type", type}};
  if (type == 1) {
    j_out["pair"] = {j, k};
  } else {
    j_out["a"] = a;
    j_out["x"] = x;
    j_out["indices"] = index_set;
  }
  return j_out;
}

CliqueType classify_clique(const Graph& g, const std::vector<int>& c) {
  if (g.family() != Family::kSimplicialRook) throw Error("classify_clique needs an SR(m,n) graph");
  if (c.size() < 2) throw NotAClique("a clique to classify needs at least two vertices");
  for (int v : c)
    if (v < 0 || static_cast<std::size_t>(v) >= g.order()) throw NotAClique("vertex out of range");
  for (std::size_t s = 0; s < c.size(); ++s)
    for (std::size_t t = s + 1; t < c.size(); ++t)
      if (!g.adjacent(static_cast<std::size_t>(c[s]), static_cast<std::size_t>(c[t])))
        throw NotAClique("vertices " + std::to_string(c[s]) + " and " + std::to_string(c[t]) + " are not adjacent");

  std::vector<Composition> members;
  for (int v : c) members.push_back(g.label(static_cast<std::size_t>(v)));
  CliqueType out;
  const auto first_pair = differing_pair(members[0], members[1]);
  bool single_pair = true;
  for (std::size_t s = 0; s < members.size() && single_pair; ++s)
    for (std::size_t t = s + 1; t < members.size() && single_pair; ++t)
      single_pair = differing_pair(members[s], members[t]) == first_pair;
  if (single_pair) {
    out.type = 1;
    out.j = first_pair.first;
    out.k = first_pair.second;
    return out;
  }
  if (fits_shifted(members, 1, out) || fits_shifted(members, -1, out)) return out;
  throw Unclassifiable("clique fits none of the three shapes");
}

Graph local_graph(const Graph& g, std::size_t v) {
  if (v >= g.order()) throw Error("vertex out of range");
  const auto nbrs = g.neighbors(v);
  return induced_subgraph(g, nbrs);
}

bool has_induced_k114(const Graph& g) {
  const std::size_t words = g.words_per_row();
  std::vector<Word> common(words);
  for (auto [u, v] : g.edges()) {
    auto ru = g.row(static_cast<std::size_t>(u));
    auto rv = g.row(static_cast<std::size_t>(v));
    for (std::size_t w = 0; w < words; ++w) common[w] = ru[w] & rv[w];
    const auto w_set = bits::members(common);
    if (w_set.size() < 4) continue;
    std::function<bool(std::size_t, std::size_t, std::vector<std::size_t>&)> grow =
        [&](std::size_t start, std::size_t need, std::vector<std::size_t>& chosen) {
          if (need == 0) return true;
          for (std::size_t idx = start; idx + need <= w_set.size(); ++idx) {
            const std::size_t cand = w_set[idx];
            if (std::any_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return g.adjacent(c, cand); }))
              continue;
            chosen.push_back(cand);
            if (grow(idx + 1, need - 1, chosen)) return true;
            chosen.pop_back();
          }
          return false;
        };
    std::vector<std::size_t> chosen;
    if (grow(0, 4, chosen)) return true;
  }
  return false;
}

bool local_cliques_at_most_two(const Graph& g, std::size_t u) {
  const Graph local = local_graph(g, u);
  std::vector<int> count(local.order(), 0);
  for (const auto& c : maximal_cliques(local))
    for (int v : c) ++count[static_cast<std::size_t>(v)];
  return std::all_of(count.begin(), count.end(), [](int k) { return k <= 2; });
}

std::vector<int> digit_swap_permutation(const Graph& g) {
  if (g.family() != Family::kSimplicialRook || g.parameters()->second != 3)
    throw Error("digit swap is defined on SR(m,3)");
  std::vector<int> perm(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) {
    Composition x = g.label(v);
    if (std::find(x.begin(), x.end(), 2) != x.end())
      for (int& e : x) e = e == 1 ? 2 : e == 2 ? 1 : e;
    perm[v] = static_cast<int>(*g.find(x));
  }
  return perm;
}

}  // namespace rooklab
