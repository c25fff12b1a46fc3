#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "rooklab/graph.hpp"

namespace rooklab {

/// graph6 encoding (header byte n+63 for n <= 62, 126 + 3 bytes up to
/// 258047, 126 126 + 6 bytes beyond). No trailing newline.
std::string to_graph6(const Graph& g);

/// Parses a graph6 string; an optional ">>graph6<<" prefix and trailing
/// whitespace are accepted. Throws Error on malformed input.
Graph from_graph6(std::string_view text);

/// {"m":..,"n":..,"vertices":[[..]],"edges":[[i,j],..]}; m and n are null
/// for graphs that are not SR or Johnson graphs.
nlohmann::json to_json(const Graph& g);

}  // namespace rooklab
