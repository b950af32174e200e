#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gnls/graph.hpp"

namespace gnls {

struct Fixture {
  std::string name;
  WeightedGraph graph;
  /// Lattice fixtures carry h = 1 + ρ and their origin.
  std::optional<VertexFunction> h;
  std::optional<std::string> origin;
  std::string notes;
};

/// Built-in graphs:
///   g6-table1      six vertices x1..x6, μ = (3,2,10,1,40,1), unit weights
///   g6-uniform     same edges, μ ≡ 1
///   path2, path3   unit paths a–b(–c), μ ≡ 1
///   lattice1d(r)   B_r(0) in Z, h = 1 + ρ
///   lattice2d(r)   B_r(0,0) in Z², h = 1 + ρ
/// The six-vertex edge set is a stand-in (a triangular prism); see `notes`.
/// Throws UnknownFixture.
Fixture load_fixture(std::string_view name);

std::vector<std::string> fixture_names();

}  // namespace gnls
