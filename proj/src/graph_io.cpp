#include "rooklab/graph_io.hpp"

#include <cctype>

namespace rooklab {

namespace {

void append_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

int sextet(char c) {
  const int v = static_cast<unsigned char>(c) - 63;
  if (v < 0 || v > 63) throw Error("graph6: byte out of range");
  return v;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  std::string out;
  const std::size_t n = g.order();
  append_size(out, n);
  int acc = 0, filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error("graph6: empty input");

  std::size_t pos = 0;
  std::size_t n = 0;
  if (text[0] != 126) {
    n = static_cast<std::size_t>(sextet(text[0]));
    pos = 1;
  } else if (text.size() >= 2 && text[1] != 126) {
    if (text.size() < 4) throw Error("graph6: truncated size");
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | static_cast<std::size_t>(sextet(text[k]));
    pos = 4;
  } else {
    if (text.size() < 8) throw Error("graph6: truncated size");
    for (std::size_t k = 2; k <= 7; ++k) n = (n << 6) | static_cast<std::size_t>(sextet(text[k]));
    pos = 8;
  }

  const std::size_t bit_count = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t byte_count = (bit_count + 5) / 6;
  if (text.size() - pos != byte_count) throw Error("graph6: body length does not match vertex count");

  GraphBuilder builder(n);
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      const int value = sextet(text[pos + bit / 6]);
      if ((value >> (5 - bit % 6)) & 1) builder.add_edge(i, j);
    }
  }
  return std::move(builder).build();
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json out;
  if (auto params = g.parameters()) {
    out["m"] = params->first;
    out["n"] = params->second;
  } else {
    out["m"] = nullptr;
    out["n"] = nullptr;
  }
  out["vertices"] = g.labels();
  nlohmann::json edges = nlohmann::json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a, b});
  out["edges"] = std::move(edges);
  return out;
}

}  // namespace rooklab
