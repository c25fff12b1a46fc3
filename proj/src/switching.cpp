#include "rooklab/switching.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "rooklab/canonical.hpp"

namespace rooklab {

namespace {

using bits::Word;

std::size_t count_in(const Graph& g, std::size_t c, const std::array<int, 4>& b) {
  std::size_t k = 0;
  for (int x : b) k += g.adjacent(c, static_cast<std::size_t>(x));
  return k;
}

bool is_member(const std::array<int, 4>& b, std::size_t v) {
  return std::find(b.begin(), b.end(), static_cast<int>(v)) != b.end();
}

}  // namespace

SwitchingSet validate_switching_set(const Graph& g, const std::vector<int>& members) {
  if (members.size() != 4) throw Error("a switching set has exactly four vertices");
  SwitchingSet out;
  std::copy(members.begin(), members.end(), out.members.begin());
  std::sort(out.members.begin(), out.members.end());
  for (int v : out.members)
    if (v < 0 || static_cast<std::size_t>(v) >= g.order()) throw Error("switching set vertex out of range");
  if (std::adjacent_find(out.members.begin(), out.members.end()) != out.members.end())
    throw Error("switching set members must be distinct");

  std::array<int, 4> degrees{};
  for (std::size_t i = 0; i < 4; ++i)
    degrees[i] = static_cast<int>(count_in(g, static_cast<std::size_t>(out.members[i]), out.members));
  for (std::size_t i = 1; i < 4; ++i)
    if (degrees[i] != degrees[0])
      throw NotSwitchable("switching set does not induce a regular subgraph", out.members[i]);
  out.internal_degree = degrees[0];

  for (std::size_t c = 0; c < g.order(); ++c) {
    if (is_member(out.members, c)) continue;
    const std::size_t k = count_in(g, c, out.members);
    if (k % 2 != 0)
      throw NotSwitchable("vertex " + std::to_string(c) + " has " + std::to_string(k) + " neighbours in the set",
                          static_cast<int>(c));
  }
  return out;
}

Graph gm_switch(const Graph& g, const SwitchingSet& b) {
  GraphBuilder builder(g);
  for (std::size_t c = 0; c < g.order(); ++c) {
    if (is_member(b.members, c) || count_in(g, c, b.members) != 2) continue;
    for (int x : b.members) builder.toggle_edge(c, static_cast<std::size_t>(x));
  }
  return std::move(builder).build();
}

std::vector<SwitchingSet> enumerate_switching_sets(const Graph& g, std::size_t max_vertices) {
  const std::size_t n = g.order();
  if (n > max_vertices)
    throw SizeLimit("switching set enumeration limited to " + std::to_string(max_vertices) + " vertices");
  const std::size_t words = g.words_per_row();
  std::vector<SwitchingSet> out;
  std::vector<Word> ab(words), abc(words), odd(words);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t w = 0; w < words; ++w) ab[w] = g.row(a)[w] ^ g.row(b)[w];
      for (std::size_t c = b + 1; c < n; ++c) {
        for (std::size_t w = 0; w < words; ++w) abc[w] = ab[w] ^ g.row(c)[w];
        for (std::size_t d = c + 1; d < n; ++d) {
          // vertices seeing an odd number of members
          for (std::size_t w = 0; w < words; ++w) odd[w] = abc[w] ^ g.row(d)[w];
          for (std::size_t v : {a, b, c, d}) bits::reset(std::span<Word>(odd), v);
          if (bits::any(odd)) continue;
          const std::array<int, 4> members{static_cast<int>(a), static_cast<int>(b), static_cast<int>(c),
                                           static_cast<int>(d)};
          const auto degree = count_in(g, a, members);
          if (count_in(g, b, members) != degree || count_in(g, c, members) != degree ||
              count_in(g, d, members) != degree)
            continue;
          out.push_back({members, static_cast<int>(degree)});
        }
      }
    }
  }
  return out;
}

ClosureResult switching_closure(const Graph& g, std::size_t limit, std::size_t max_vertices) {
  ClosureResult result;
  if (limit == 0) {
    result.capped = true;
    return result;
  }
  std::unordered_set<CanonicalForm, CertificateHash, CertificateEqual> seen;
  std::deque<std::size_t> queue;
  seen.insert(canonical_form(g));
  result.representatives.push_back(g);
  queue.push_back(0);
  while (!queue.empty()) {
    const Graph current = result.representatives[queue.front()];
    queue.pop_front();
    for (const auto& b : enumerate_switching_sets(current, max_vertices)) {
      Graph next = gm_switch(current, b);
      if (!seen.insert(canonical_form(next)).second) continue;
      if (result.representatives.size() == limit) {
        result.capped = true;
        result.classes = result.representatives.size();
        return result;
      }
      queue.push_back(result.representatives.size());
      result.representatives.push_back(std::move(next));
    }
  }
  result.classes = result.representatives.size();
  return result;
}

std::vector<int> named_switching_set(const Graph& sr, std::string_view name) {
  if (sr.family() != Family::kSimplicialRook) throw Error("named switching sets live on SR(m,n)");
  const auto [m, n] = *sr.parameters();
  std::vector<Composition> labels;
  if (name == "v1") {
    if (m != 4) throw UnsupportedParameters("the set v1 is defined for m = 4");
    for (int i = 0; i < m; ++i) {
      Composition x(static_cast<std::size_t>(m), 0);
      x[static_cast<std::size_t>(i)] = n;
      labels.push_back(x);
    }
  } else if (name == "line") {
    if (n != 3 || m < 2) throw UnsupportedParameters("the set line is defined for n = 3, m >= 2");
    for (int a = 3; a >= 0; --a) {
      Composition x(static_cast<std::size_t>(m), 0);
      x[0] = a;
      x[1] = 3 - a;
      labels.push_back(x);
    }
  } else {
    throw Error("unknown switching set: " + std::string(name));
  }
  std::vector<int> out;
  for (const auto& x : labels) out.push_back(static_cast<int>(*sr.find(x)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rooklab
