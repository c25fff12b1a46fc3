#include "rooklab/partitions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace rooklab {

namespace {

std::pair<int, int> require_sr(const Graph& g, const char* what) {
  if (g.family() != Family::kSimplicialRook) throw Error(std::string(what) + " needs an SR(m,n) graph");
  const auto params = *g.parameters();
  if (params.second < 1) throw Error(std::string(what) + " needs n >= 1");
  return params;
}

std::vector<int> support_of(const std::vector<int>& x) {
  std::vector<int> s;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) s.push_back(static_cast<int>(i) + 1);
  return s;
}

struct SizeThenLex {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

VertexPartition from_keys(const Graph& g, const std::vector<std::vector<int>>& keys) {
  std::map<std::vector<int>, std::vector<int>, SizeThenLex> grouped;
  for (std::size_t i = 0; i < g.order(); ++i) grouped[keys[i]].push_back(static_cast<int>(i));
  VertexPartition p;
  for (auto& [key, block] : grouped) {
    p.labels.push_back(key);
    p.blocks.push_back(std::move(block));
  }
  return p;
}

}  // namespace

NotEquitable::NotEquitable(std::size_t block_, std::size_t target_, int first_, int other_)
    : Error("partition is not equitable: vertices " + std::to_string(first_) + " and " + std::to_string(other_) +
            " of block " + std::to_string(block_) + " differ on block " + std::to_string(target_)),
      block(block_),
      target(target_),
      first(first_),
      other(other_) {}

IntMatrix QuotientMatrix::to_int_matrix() const {
  IntMatrix out(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = 0; j < entries.size(); ++j) out(i, j) = static_cast<long>(entries[i][j]);
  return out;
}

nlohmann::json QuotientMatrix::to_json() const { return {{"labels", labels}, {"entries", entries}}; }

std::string QuotientMatrix::to_csv() const {
  auto label_text = [](const std::vector<int>& label) {
    std::string s;
    for (int x : label) s += std::to_string(x);
    return s;
  };
  std::ostringstream out;
  out << "block";
  for (const auto& l : labels) out << "," << label_text(l);
  out << "\n";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    out << label_text(labels[i]);
    for (auto e : entries[i]) out << "," << e;
    out << "\n";
  }
  return out.str();
}

VertexPartition weight_partition(const Graph& g) {
  require_sr(g, "weight_partition");
  std::vector<std::vector<int>> keys;
  for (const auto& x : g.labels())
    keys.push_back({static_cast<int>(std::count_if(x.begin(), x.end(), [](int e) { return e != 0; }))});
  return from_keys(g, keys);
}

VertexPartition support_partition(const Graph& g) {
  require_sr(g, "support_partition");
  std::vector<std::vector<int>> keys;
  for (const auto& x : g.labels()) keys.push_back(support_of(x));
  return from_keys(g, keys);
}

VertexPartition johnson_support_partition(const Graph& g, int m) {
  if (g.family() != Family::kJohnson) throw Error("johnson_support_partition needs a Johnson graph");
  const auto [v, n] = *g.parameters();
  if (m < 1 || v != m + n - 1) throw Error("johnson_support_partition needs J(m+n-1,n)");
  std::vector<std::vector<int>> keys;
  for (const auto& subset : g.labels()) {
    std::vector<int> key;
    for (int x : subset)
      if (x <= m) key.push_back(x);
    keys.push_back(std::move(key));
  }
  return from_keys(g, keys);
}

QuotientMatrix check_equitable(const Graph& g, const VertexPartition& p) {
  const std::size_t blocks = p.blocks.size();
  std::vector<int> block_of(g.order(), -1);
  for (std::size_t b = 0; b < blocks; ++b) {
    if (p.blocks[b].empty()) throw Error("partition has an empty block");
    for (int x : p.blocks[b]) {
      if (x < 0 || static_cast<std::size_t>(x) >= g.order()) throw Error("partition vertex out of range");
      if (block_of[static_cast<std::size_t>(x)] >= 0) throw Error("partition blocks overlap");
      block_of[static_cast<std::size_t>(x)] = static_cast<int>(b);
    }
  }
  if (std::count(block_of.begin(), block_of.end(), -1) != 0) throw Error("partition does not cover the graph");

  QuotientMatrix e;
  e.labels = p.labels;
  if (e.labels.size() != blocks) {
    e.labels.clear();
    for (std::size_t b = 0; b < blocks; ++b) e.labels.push_back({static_cast<int>(b)});
  }
  e.entries.assign(blocks, std::vector<std::int64_t>(blocks, -1));
  std::vector<int> representative(blocks, -1);
  std::vector<std::int64_t> counts(blocks);
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::fill(counts.begin(), counts.end(), 0);
    bits::for_each(g.row(x), [&](std::size_t y) { ++counts[static_cast<std::size_t>(block_of[y])]; });
    const auto b = static_cast<std::size_t>(block_of[x]);
    if (representative[b] < 0) {
      representative[b] = static_cast<int>(x);
      e.entries[b] = counts;
      continue;
    }
    for (std::size_t t = 0; t < blocks; ++t)
      if (counts[t] != e.entries[b][t]) throw NotEquitable(b, t, representative[b], static_cast<int>(x));
  }
  return e;
}

std::int64_t e_st_formula(const std::vector<int>& s, const std::vector<int>& t, int n) {
  const auto i = static_cast<std::int64_t>(s.size());
  const auto j = static_cast<std::int64_t>(t.size());
  if (s == t) return (i - 1) * (n - i);
  const bool s_contains_t = std::includes(s.begin(), s.end(), t.begin(), t.end());
  const bool t_contains_s = std::includes(t.begin(), t.end(), s.begin(), s.end());
  if (j == i - 1 && s_contains_t) return i - 1;
  if (j == i + 1 && t_contains_s) return n - i;
  if (i == j) {
    std::vector<int> common;
    std::set_intersection(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(common));
    // same size, differing in two places: one element swapped
    if (static_cast<std::int64_t>(common.size()) == i - 1) return 1;
  }
  return 0;
}

Spectrum quotient_spectrum(const QuotientMatrix& e) {
  std::int64_t valency = 0;
  for (const auto& row : e.entries) {
    std::int64_t sum = 0;
    for (auto x : row) sum += x;
    valency = std::max(valency, sum);
  }
  return matrix_integral_spectrum(e.to_int_matrix(), -valency, valency);
}

bool quotients_equal_by_label(const QuotientMatrix& a, const QuotientMatrix& b) {
  if (a.size() != b.size()) return false;
  std::map<std::vector<int>, std::size_t> index_in_b;
  for (std::size_t i = 0; i < b.labels.size(); ++i) index_in_b[b.labels[i]] = i;
  std::vector<std::size_t> map(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto it = index_in_b.find(a.labels[i]);
    if (it == index_in_b.end()) return false;
    map[i] = it->second;
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a.entries[i][j] != b.entries[map[i]][map[j]]) return false;
  return true;
}

}  // namespace rooklab
