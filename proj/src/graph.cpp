#include "rooklab/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace rooklab {

namespace {

void compositions_into(int parts, int total, Composition& prefix, std::vector<Composition>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(prefix);
    return;
  }
  if (parts == 1) {
    prefix.push_back(total);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = 0; first <= total; ++first) {
    prefix.push_back(first);
    compositions_into(parts - 1, total - first, prefix, out);
    prefix.pop_back();
  }
}

void subsets_into(int v, int n, int next, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == n) {
    out.push_back(prefix);
    return;
  }
  const int needed = n - static_cast<int>(prefix.size());
  for (int x = next; x + needed - 1 <= v; ++x) {
    prefix.push_back(x);
    subsets_into(v, n, x + 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Composition> enumerate_vertices(int m, int n) {
  std::vector<Composition> out;
  if (m < 0 || n < 0) return out;
  Composition prefix;
  prefix.reserve(static_cast<std::size_t>(m));
  compositions_into(m, n, prefix, out);
  return out;
}

std::size_t composition_index(const Composition& x) {
  std::int64_t remaining = 0;
  for (int e : x) {
    if (e < 0) throw Error("composition entries must be nonnegative");
    remaining += e;
  }
  const auto m = static_cast<std::int64_t>(x.size());
  std::int64_t index = 0;
  for (std::int64_t i = 0; i + 1 < m; ++i) {
    const std::int64_t slots = m - i - 2;
    for (int c = 0; c < x[static_cast<std::size_t>(i)]; ++c) index += binom(remaining - c + slots, slots);
    remaining -= x[static_cast<std::size_t>(i)];
  }
  return static_cast<std::size_t>(index);
}

std::vector<int> Graph::neighbors(std::size_t i) const {
  std::vector<int> out;
  bits::for_each(row(i), [&](std::size_t j) { out.push_back(static_cast<int>(j)); });
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (std::size_t i = 0; i < order_; ++i) total += degree(i);
  return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < order_; ++i) {
    bits::for_each(row(i), [&](std::size_t j) {
      if (j > i) out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    });
  }
  return out;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t i = 0; i < order_; ++i) best = std::max(best, degree(i));
  return best;
}

std::optional<std::size_t> Graph::regular_degree() const {
  if (order_ == 0) return 0;
  const std::size_t d = degree(0);
  for (std::size_t i = 1; i < order_; ++i)
    if (degree(i) != d) return std::nullopt;
  return d;
}

std::optional<std::size_t> Graph::find(const std::vector<int>& label) const {
  if (labels_sorted_) {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it != labels_.end() && *it == label) return static_cast<std::size_t>(it - labels_.begin());
    return std::nullopt;
  }
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

GraphBuilder::GraphBuilder(std::size_t order) {
  graph_.order_ = order;
  graph_.words_ = bits::words_for(order);
  graph_.rows_.assign(order * graph_.words_, 0);
  graph_.labels_.resize(order);
  for (std::size_t i = 0; i < order; ++i) graph_.labels_[i] = {static_cast<int>(i)};
  graph_.labels_sorted_ = true;
}

GraphBuilder::GraphBuilder(const Graph& start) : graph_(start) {
  graph_.family_ = Family::kGeneric;
  graph_.params_.reset();
}

void GraphBuilder::check(std::size_t i, std::size_t j) const {
  if (i >= graph_.order_ || j >= graph_.order_) throw Error("vertex index out of range");
  if (i == j) throw Error("loops are not allowed");
}

void GraphBuilder::add_edge(std::size_t i, std::size_t j) {
  check(i, j);
  bits::set(mutable_row(i), j);
  bits::set(mutable_row(j), i);
}

void GraphBuilder::remove_edge(std::size_t i, std::size_t j) {
  check(i, j);
  bits::reset(mutable_row(i), j);
  bits::reset(mutable_row(j), i);
}

void GraphBuilder::toggle_edge(std::size_t i, std::size_t j) {
  check(i, j);
  bits::flip(mutable_row(i), j);
  bits::flip(mutable_row(j), i);
}

void GraphBuilder::set_labels(std::vector<std::vector<int>> labels) {
  if (labels.size() != graph_.order_) throw Error("label count does not match vertex count");
  graph_.labels_sorted_ = std::is_sorted(labels.begin(), labels.end()) &&
                          std::adjacent_find(labels.begin(), labels.end()) == labels.end();
  graph_.labels_ = std::move(labels);
}

Graph GraphBuilder::build() && { return std::move(graph_); }

Graph build_sr(int m, int n) {
  std::vector<Composition> vertices = enumerate_vertices(m, n);
  GraphBuilder builder(vertices.size());
  builder.set_labels(vertices);
  builder.set_parameters(Family::kSimplicialRook, m, n);
  auto index_of = [&](const Composition& c) {
    return static_cast<std::size_t>(std::lower_bound(vertices.begin(), vertices.end(), c) - vertices.begin());
  };
  Composition moved;
  for (std::size_t u = 0; u < vertices.size(); ++u) {
    const Composition& x = vertices[u];
    for (int j = 0; j < m; ++j) {
      for (int k = j + 1; k < m; ++k) {
        const int pair_sum = x[j] + x[k];
        moved = x;
        for (int a = 0; a <= pair_sum; ++a) {
          if (a == x[j]) continue;
          moved[j] = a;
          moved[k] = pair_sum - a;
          const std::size_t w = index_of(moved);
          if (w > u) builder.add_edge(u, w);
        }
      }
    }
  }
  return std::move(builder).build();
}

Graph build_johnson(int v, int n) {
  if (n < 0 || n > v) throw Error("build_johnson requires 0 <= n <= v");
  std::vector<std::vector<int>> subsets;
  std::vector<int> prefix;
  subsets_into(v, n, 1, prefix, subsets);
  GraphBuilder builder(subsets.size());
  for (std::size_t a = 0; a < subsets.size(); ++a) {
    for (std::size_t b = a + 1; b < subsets.size(); ++b) {
      std::vector<int> common;
      std::set_intersection(subsets[a].begin(), subsets[a].end(), subsets[b].begin(), subsets[b].end(),
                            std::back_inserter(common));
      if (static_cast<int>(common.size()) == n - 1) builder.add_edge(a, b);
    }
  }
  builder.set_labels(std::move(subsets));
  builder.set_parameters(Family::kJohnson, v, n);
  return std::move(builder).build();
}

Graph complete_graph(std::size_t order) {
  GraphBuilder builder(order);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = i + 1; j < order; ++j) builder.add_edge(i, j);
  return std::move(builder).build();
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  GraphBuilder builder(a + b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) builder.add_edge(i, a + j);
  return std::move(builder).build();
}

Graph cycle_graph(std::size_t order) {
  GraphBuilder builder(order);
  if (order >= 3)
    for (std::size_t i = 0; i < order; ++i) builder.add_edge(i, (i + 1) % order);
  return std::move(builder).build();
}

Graph hypercube(int dim) {
  const std::size_t order = std::size_t{1} << dim;
  GraphBuilder builder(order);
  for (std::size_t x = 0; x < order; ++x)
    for (int b = 0; b < dim; ++b) {
      const std::size_t y = x ^ (std::size_t{1} << b);
      if (y > x) builder.add_edge(x, y);
    }
  return std::move(builder).build();
}

Graph transposition_cayley_graph(int m) {
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<int>> elements;
  do {
    elements.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  GraphBuilder builder(elements.size());
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = a + 1; b < elements.size(); ++b) {
      int diff = 0;
      for (int i = 0; i < m; ++i) diff += elements[a][i] != elements[b][i];
      if (diff == 2) builder.add_edge(a, b);
    }
  builder.set_labels(std::move(elements));
  return std::move(builder).build();
}

Graph induced_subgraph(const Graph& g, std::span<const int> idxs) {
  for (int i : idxs)
    if (i < 0 || static_cast<std::size_t>(i) >= g.order()) throw Error("induced_subgraph: vertex index out of range");
  std::vector<int> sorted(idxs.begin(), idxs.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  GraphBuilder builder(sorted.size());
  std::vector<std::vector<int>> labels;
  labels.reserve(sorted.size());
  for (std::size_t a = 0; a < sorted.size(); ++a) {
    labels.push_back(g.label(static_cast<std::size_t>(sorted[a])));
    for (std::size_t b = a + 1; b < sorted.size(); ++b)
      if (g.adjacent(static_cast<std::size_t>(sorted[a]), static_cast<std::size_t>(sorted[b])))
        builder.add_edge(a, b);
  }
  builder.set_labels(std::move(labels));
  return std::move(builder).build();
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const std::size_t ng = g.order(), nh = h.order();
  GraphBuilder builder(ng * nh);
  std::vector<std::vector<int>> labels;
  labels.reserve(ng * nh);
  for (std::size_t a = 0; a < ng; ++a) {
    for (std::size_t b = 0; b < nh; ++b) {
      std::vector<int> label = g.label(a);
      label.insert(label.end(), h.label(b).begin(), h.label(b).end());
      labels.push_back(std::move(label));
      const std::size_t self = a * nh + b;
      for (int c : h.neighbors(b))
        if (static_cast<std::size_t>(c) > b) builder.add_edge(self, a * nh + static_cast<std::size_t>(c));
      for (int c : g.neighbors(a))
        if (static_cast<std::size_t>(c) > a) builder.add_edge(self, static_cast<std::size_t>(c) * nh + b);
    }
  }
  builder.set_labels(std::move(labels));
  return std::move(builder).build();
}

Graph complement(const Graph& g) {
  GraphBuilder builder(g.order());
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i + 1; j < g.order(); ++j)
      if (!g.adjacent(i, j)) builder.add_edge(i, j);
  builder.set_labels(g.labels());
  return std::move(builder).build();
}

Graph permute(const Graph& g, std::span<const int> perm) {
  if (perm.size() != g.order()) throw Error("permute: permutation size mismatch");
  GraphBuilder builder(g.order());
  std::vector<std::vector<int>> labels(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) {
    labels[static_cast<std::size_t>(perm[i])] = g.label(i);
    bits::for_each(g.row(i), [&](std::size_t j) {
      if (j > i) builder.add_edge(static_cast<std::size_t>(perm[i]), static_cast<std::size_t>(perm[j]));
    });
  }
  builder.set_labels(std::move(labels));
  return std::move(builder).build();
}

Graph from_edges(std::size_t order, std::span<const std::pair<int, int>> edges) {
  GraphBuilder builder(order);
  for (auto [a, b] : edges) builder.add_edge(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  return std::move(builder).build();
}

bool is_simple(const Graph& g) {
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (g.adjacent(i, i)) return false;
    bool symmetric = true;
    bits::for_each(g.row(i), [&](std::size_t j) { symmetric = symmetric && g.adjacent(j, i); });
    if (!symmetric) return false;
  }
  return true;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (std::size_t start = 0; start < g.order(); ++start) {
    if (side[start] >= 0) continue;
    side[start] = 0;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (int y : g.neighbors(x)) {
        if (side[static_cast<std::size_t>(y)] < 0) {
          side[static_cast<std::size_t>(y)] = 1 - side[x];
          queue.push_back(static_cast<std::size_t>(y));
        } else if (side[static_cast<std::size_t>(y)] == side[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

}  // namespace rooklab
