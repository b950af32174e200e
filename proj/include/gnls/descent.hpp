#pragma once

#include <vector>

#include "gnls/graph.hpp"

namespace gnls::detail {

/// E(v) = α·½∫|∇v|² dμ − β·(1/p)∫|v|^p dμ restricted to the sphere ∫h v² dμ = M.
///
/// Both the finite-graph minimisation (h ≡ 1) and the potential-problem
/// maximisation of 𝒥 = −E reduce to minimising this functional. The
/// critical points satisfy −αΔv + λ̂ h v = β|v|^{p−2}v with
/// λ̂ = (β∫|v|^p − α∫|∇v|²)/M.
struct ScaledProblem {
  const WeightedGraph* graph = nullptr;
  const VertexFunction* h = nullptr;  // nullptr: h ≡ 1
  double p = 3.0;
  double alpha = 1.0;
  double beta = 1.0;
  double mass = 1.0;
  /// Converts the sup-norm of the core residual into the reported residual.
  double residual_scale = 1.0;
};

struct DescentSettings {
  double tolerance = 1e-10;
  long max_iterations = 1'000'000;
  double armijo = 1e-4;
  double backtrack = 0.5;
  int max_backtracks = 80;
  double initial_step = 1.0;
  bool keep_trace = false;
};

struct DescentResult {
  VertexFunction v;
  double lambda_hat = 0.0;
  double energy = 0.0;
  double residual = 0.0;
  long iterations = 0;
  bool converged = false;
  bool stalled = false;
  /// E after every accepted step (index 0 is the retracted start).
  std::vector<double> energy_trace;
  /// Accurately evaluated change of the Lagrangian at every accepted step.
  std::vector<double> decrease_trace;
};

/// |a|^p − |b|^p without cancellation when a ≈ b.
double power_difference(double a, double b, double p);

/// E(v2) − E(v1), accurate to rounding of the difference rather than of E.
double energy_difference(const ScaledProblem& prob, const VertexFunction& v1, const VertexFunction& v2);

double scaled_energy(const ScaledProblem& prob, const VertexFunction& v);

/// Rescales |v| onto the sphere ∫h v² dμ = M.
VertexFunction retract(const ScaledProblem& prob, VertexFunction v);

/// Projected gradient descent with Barzilai–Borwein trial steps and Armijo
/// backtracking. Each trial point is |v − t d| retracted onto the sphere,
/// where d = (−αΔv + λ̂hv − β|v|^{p−2}v)/h is the gradient of E in the
/// h-weighted metric projected onto the tangent space at v. Stops when the
/// reported residual is <= tolerance and every value is strictly positive.
DescentResult descend(const ScaledProblem& prob, VertexFunction start, const DescentSettings& settings);

}  // namespace gnls::detail
