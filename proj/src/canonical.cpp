#include "rooklab/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

namespace rooklab {

namespace {

using Cells = std::vector<std::vector<int>>;

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

class Searcher {
 public:
  Searcher(const Graph& g, const CanonicalOptions& options)
      : g_(g), n_(g.order()), words_(bits::words_for(g.order())), options_(options) {
    if (n_ > options.max_vertices)
      throw SizeLimit("canonical labelling limited to " + std::to_string(options.max_vertices) + " vertices");
  }

  void refine(Cells& cells) const {
    bits::BitSet splitter(n_);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < cells.size(); ++s) {
        splitter = bits::BitSet(n_);
        for (int v : cells[s]) splitter.set(static_cast<std::size_t>(v));
        for (std::size_t x = 0; x < cells.size(); ++x) {
          if (cells[x].size() == 1) continue;
          std::map<std::size_t, std::vector<int>> groups;
          for (int v : cells[x])
            groups[bits::count_and(g_.row(static_cast<std::size_t>(v)), splitter.words())].push_back(v);
          if (groups.size() == 1) continue;
          std::vector<std::vector<int>> pieces;
          for (auto& [count, members] : groups) pieces.push_back(std::move(members));
          cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(x));
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x), pieces.begin(), pieces.end());
          x += pieces.size() - 1;
          changed = true;
        }
      }
    }
  }

  static std::size_t target_cell(const Cells& cells) {
    std::size_t best = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1 && (best == cells.size() || cells[i].size() < cells[best].size())) best = i;
    return best;
  }

  static Cells individualize(const Cells& cells, std::size_t t, int v) {
    Cells out;
    out.reserve(cells.size() + 1);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i != t) {
        out.push_back(cells[i]);
        continue;
      }
      out.push_back({v});
      std::vector<int> rest;
      for (int x : cells[i])
        if (x != v) rest.push_back(x);
      out.push_back(std::move(rest));
    }
    return out;
  }

  struct Leaf {
    std::vector<int> labeling;
    std::vector<bits::Word> certificate;
  };

  Leaf leaf(const Cells& cells) const {
    Leaf out;
    out.labeling.assign(n_, 0);
    for (std::size_t pos = 0; pos < cells.size(); ++pos)
      out.labeling[static_cast<std::size_t>(cells[pos][0])] = static_cast<int>(pos);
    out.certificate.assign(n_ * words_, 0);
    for (std::size_t v = 0; v < n_; ++v) {
      const auto pos = static_cast<std::size_t>(out.labeling[v]);
      std::span<bits::Word> row{out.certificate.data() + pos * words_, words_};
      bits::for_each(g_.row(v), [&](std::size_t u) { bits::set(row, static_cast<std::size_t>(out.labeling[u])); });
    }
    return out;
  }

  void count_node() {
    if (++nodes_ > options_.max_nodes) throw SizeLimit("canonical search exceeded its node budget");
  }

  Cells unit_partition() const {
    Cells cells(1);
    for (std::size_t v = 0; v < n_; ++v) cells[0].push_back(static_cast<int>(v));
    if (n_ == 0) cells.clear();
    return cells;
  }

  /// gamma = second^{-1} o first maps the first leaf's vertices onto the second's.
  static std::vector<int> automorphism_between(const std::vector<int>& first, const std::vector<int>& second) {
    std::vector<int> inverse(second.size());
    for (std::size_t v = 0; v < second.size(); ++v) inverse[static_cast<std::size_t>(second[v])] = static_cast<int>(v);
    std::vector<int> gamma(first.size());
    for (std::size_t v = 0; v < first.size(); ++v) gamma[v] = inverse[static_cast<std::size_t>(first[v])];
    return gamma;
  }

  UnionFind orbits_fixing(const std::vector<int>& prefix) const {
    UnionFind uf(n_);
    for (const auto& gamma : generators_) {
      bool fixes = true;
      for (int p : prefix) fixes = fixes && gamma[static_cast<std::size_t>(p)] == p;
      if (!fixes) continue;
      for (std::size_t v = 0; v < n_; ++v) uf.unite(static_cast<int>(v), gamma[v]);
    }
    return uf;
  }

  // ---- canonical form ----

  CanonicalForm canonical() {
    Cells cells = unit_partition();
    std::vector<int> prefix;
    if (n_ > 0) canonical_dfs(std::move(cells), prefix);
    CanonicalForm out;
    out.order = n_;
    out.relabeling = best_ ? best_->labeling : std::vector<int>{};
    out.certificate = best_ ? best_->certificate : std::vector<bits::Word>{};
    return out;
  }

  void canonical_dfs(Cells cells, std::vector<int>& prefix) {
    count_node();
    refine(cells);
    const std::size_t t = target_cell(cells);
    if (t == cells.size()) {
      consider_leaf(leaf(cells));
      return;
    }
    std::vector<int> candidates = cells[t];
    std::sort(candidates.begin(), candidates.end());
    std::vector<int> explored;
    std::size_t generators_seen = static_cast<std::size_t>(-1);
    std::optional<UnionFind> uf;
    for (int w : candidates) {
      if (!explored.empty()) {
        if (generators_seen != generators_.size()) {
          uf.emplace(orbits_fixing(prefix));
          generators_seen = generators_.size();
        }
        const int root = uf->find(w);
        if (std::any_of(explored.begin(), explored.end(), [&](int u) { return uf->find(u) == root; })) continue;
      }
      prefix.push_back(w);
      canonical_dfs(individualize(cells, t, w), prefix);
      prefix.pop_back();
      explored.push_back(w);
    }
  }

  void consider_leaf(Leaf candidate) {
    if (!first_) {
      first_ = candidate;
      best_ = std::move(candidate);
      return;
    }
    if (candidate.certificate == first_->certificate) {
      generators_.push_back(automorphism_between(first_->labeling, candidate.labeling));
    } else if (candidate.certificate == best_->certificate) {
      generators_.push_back(automorphism_between(best_->labeling, candidate.labeling));
    }
    if (candidate.certificate > best_->certificate) best_ = std::move(candidate);
  }

  // ---- automorphism group order ----

  std::uint64_t group_order() {
    if (n_ <= 1) return 1;
    struct PathNode {
      Cells cells;
      std::size_t target;
      int chosen;
      std::vector<std::size_t> shape;
    };
    std::vector<PathNode> path;
    Cells cells = unit_partition();
    for (;;) {
      count_node();
      refine(cells);
      const std::size_t t = target_cell(cells);
      std::vector<std::size_t> shape;
      for (const auto& c : cells) shape.push_back(c.size());
      if (t == cells.size()) {
        first_ = leaf(cells);
        path_shapes_.push_back(shape);
        break;
      }
      const int chosen = *std::min_element(cells[t].begin(), cells[t].end());
      path.push_back({cells, t, chosen, shape});
      path_shapes_.push_back(std::move(shape));
      cells = individualize(cells, t, chosen);
    }

    std::uint64_t order = 1;
    for (std::size_t k = path.size(); k-- > 0;) {
      const PathNode& node = path[k];
      std::vector<int> prefix;
      for (std::size_t j = 0; j < k; ++j) prefix.push_back(path[j].chosen);
      std::vector<int> members = node.cells[node.target];
      std::sort(members.begin(), members.end());
      for (int w : members) {
        if (w == node.chosen) continue;
        UnionFind uf = orbits_fixing(prefix);
        if (uf.find(w) == uf.find(node.chosen)) continue;
        if (auto found = equivalent_leaf(individualize(node.cells, node.target, w), k + 1))
          generators_.push_back(automorphism_between(first_->labeling, found->labeling));
      }
      UnionFind uf = orbits_fixing(prefix);
      const int root = uf.find(node.chosen);
      const auto orbit = static_cast<std::uint64_t>(
          std::count_if(members.begin(), members.end(), [&](int w) { return uf.find(w) == root; }));
      order *= orbit;
    }
    return order;
  }

  std::optional<Leaf> equivalent_leaf(Cells cells, std::size_t depth) {
    count_node();
    refine(cells);
    if (depth >= path_shapes_.size() || cells.size() != path_shapes_[depth].size()) return std::nullopt;
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() != path_shapes_[depth][i]) return std::nullopt;
    const std::size_t t = target_cell(cells);
    if (t == cells.size()) {
      Leaf candidate = leaf(cells);
      if (candidate.certificate == first_->certificate) return candidate;
      return std::nullopt;
    }
    std::vector<int> candidates = cells[t];
    std::sort(candidates.begin(), candidates.end());
    for (int w : candidates)
      if (auto found = equivalent_leaf(individualize(cells, t, w), depth + 1)) return found;
    return std::nullopt;
  }

 private:
  const Graph& g_;
  std::size_t n_;
  std::size_t words_;
  CanonicalOptions options_;
  std::size_t nodes_ = 0;
  std::optional<Leaf> first_;
  std::optional<Leaf> best_;
  std::vector<std::vector<int>> generators_;
  std::vector<std::vector<std::size_t>> path_shapes_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, const CanonicalOptions& options) {
  return Searcher(g, options).canonical();
}

bool isomorphic(const Graph& a, const Graph& b, const CanonicalOptions& options) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a, options).same_graph_as(canonical_form(b, options));
}

std::uint64_t automorphism_count(const Graph& g, const CanonicalOptions& options) {
  return Searcher(g, options).group_order();
}

bool is_automorphism(const Graph& g, const std::vector<int>& perm) {
  if (perm.size() != g.order()) return false;
  std::vector<bool> seen(perm.size(), false);
  for (int p : perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= perm.size() || seen[static_cast<std::size_t>(p)]) return false;
    seen[static_cast<std::size_t>(p)] = true;
  }
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i + 1; j < g.order(); ++j)
      if (g.adjacent(i, j) != g.adjacent(static_cast<std::size_t>(perm[i]), static_cast<std::size_t>(perm[j])))
        return false;
  return true;
}

std::vector<std::vector<int>> color_refinement(const Graph& g) {
  Searcher searcher(g, CanonicalOptions{g.order(), 1});
  Cells cells = searcher.unit_partition();
  searcher.refine(cells);
  return cells;
}

std::size_t CertificateHash::operator()(const CanonicalForm& f) const {
  std::size_t h = std::hash<std::size_t>{}(f.order);
  for (auto w : f.certificate) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace rooklab
