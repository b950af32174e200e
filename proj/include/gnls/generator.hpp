#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gnls/graph.hpp"

namespace gnls {

/// Local data for one vertex of a (possibly infinite) locally finite graph.
struct GeneratedVertex {
  double mu = 1.0;
  double h = 1.0;
  std::vector<std::pair<std::string, double>> neighbors;  // (id, weight)
};

/// Yields the local data of a vertex by id. Must be deterministic and
/// symmetric (y is a neighbour of x with weight w iff x is one of y with w).
using VertexGenerator = std::function<GeneratedVertex(const std::string&)>;

/// h(x) = a + b·ρ(x)^γ.
struct PowerPotential {
  double a = 1.0;
  double b = 1.0;
  double gamma = 1.0;

  double operator()(int rho) const;
  /// Throws InvalidArgument unless a > 0, b >= 0, γ >= 1.
  void validate() const;
};

/// Integer lattice Z with μ ≡ 1, w ≡ 1; vertex ids are "x", the origin is "0".
VertexGenerator lattice_1d(PowerPotential h = {});
/// Integer lattice Z² with μ ≡ 1, w ≡ 1; vertex ids are "x,y", the origin is "0,0".
VertexGenerator lattice_2d(PowerPotential h = {});

/// A finite ball B_r(O) cut out of a generated graph.
struct Truncation {
  WeightedGraph graph;
  VertexFunction h;
  std::vector<int> rho;  // hop distance to the origin, per vertex
  std::string origin;
  int radius = 0;
};

/// Breadth-first truncation; vertex order is discovery order, so the origin
/// is vertex 0 and every ball is a prefix-compatible extension of smaller ones.
Truncation ball_from_generator(const VertexGenerator& gen, const std::string& origin, int radius);

}  // namespace gnls
