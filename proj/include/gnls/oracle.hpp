#pragma once

#include "gnls/energy.hpp"
#include "gnls/graph.hpp"
#include "gnls/solver.hpp"

namespace gnls {

struct GridSpec {
  /// Points per angular dimension; at least 1000 for two-vertex searches.
  int resolution = 2000;
  /// Local refinement passes around the best grid cell.
  int refine = 60;
};

enum class Sense { Min, Max };

/// Exhaustive search over the nonnegative part of {∫h u² dμ = m} on a graph
/// with two or three vertices. Min minimises J, Max maximises 𝒥 (uses
/// spec.h when present). The returned Solution carries the multiplier from
/// `lagrange_multiplier` and the EL residual of the best point.
///
/// Throws TooManyVertices, InvalidArgument (resolution too small).
Solution brute_force_extremum(const WeightedGraph& g, const ProblemSpec& spec, Sense sense, const GridSpec& grid = {});

/// max over the coordinate directions e_x of
///   |dJ(u)[e_x] − (J(u + t e_x) − J(u − t e_x))/(2t)| / max(1, |dJ(u)[e_x]|)
/// with dJ(u)[φ] = ∫Γ(u,φ) dμ − ∫|u|^{p−2}u φ dμ.
///
/// Throws InvalidExponent, InvalidArgument (step <= 0).
double fd_gradient_check(const WeightedGraph& g, const VertexFunction& u, double p, double step = 1e-6);

}  // namespace gnls
