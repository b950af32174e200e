#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "gnls/graph.hpp"

namespace gnls {

/// A graph read from a file, with the potential when every vertex carries "h".
struct LoadedGraph {
  WeightedGraph graph;
  std::optional<VertexFunction> h;
};

/// Parses the JSON graph format
///   {"vertices": [{"id": "a", "mu": 1, "h": 2}, ...],
///    "edges":    [{"u": "a", "v": "b", "w": 1}, ...]}
/// "h" is optional but must be given for all vertices or none. Structural
/// problems throw ConfigParse naming the offending field; invalid values
/// throw the corresponding build error (NonPositiveMeasure, SelfLoop, ...)
/// with the entry index prepended.
LoadedGraph parse_graph(std::string_view text);

/// Throws FileIO when the file cannot be read, otherwise as `parse_graph`.
LoadedGraph load_graph_file(const std::filesystem::path& path);

/// Inverse of `parse_graph`; doubles are written in shortest round-trip form
/// so reloading reproduces the graph bit for bit.
std::string serialize_graph(const WeightedGraph& g, const VertexFunction* h = nullptr);

/// Throws FileIO.
void save_graph_file(const std::filesystem::path& path, const WeightedGraph& g, const VertexFunction* h = nullptr);

}  // namespace gnls
