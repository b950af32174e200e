#pragma once

#include <span>
#include <string>
#include <vector>

#include "gnls/generator.hpp"
#include "gnls/solver.hpp"

namespace gnls {

/// −Δu + λ h u = u^{p−1}, u > 0, ∫h u² dμ = m on a finite graph (usually a ball truncation).
struct PotentialProblem {
  VertexFunction h;
  std::string origin;
  double p = 3.0;
  double m = 1.0;
};

/// The same problem posed on a locally finite graph given by a generator.
struct GeneratorProblem {
  VertexGenerator generator;
  std::string origin;
  double p = 3.0;
  double m = 1.0;
};

/// Origin condition h(O) < m{(2/p) μ(O)^{2−p/2} / deg(O)}^{2/(p−2)}.
/// It is sufficient for 𝒥 > 0 somewhere on the constraint set, not necessary.
struct C3Report {
  bool holds = false;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string note;
};

/// Throws IsolatedOrigin, InvalidExponent, NonPositiveMass, UnknownVertex.
C3Report check_c3(const WeightedGraph& g, const VertexFunction& h, std::string_view origin, double p, double m);

/// φ(O) = 1/√(h(O)μ(O)), 0 elsewhere; ∫h φ² dμ = 1.
VertexFunction phi_test(const WeightedGraph& g, const VertexFunction& h, std::string_view origin);

/// Closed form of 𝒥(√m·φ):
///   (m^{p/2}/p)·μ(O)/(h(O)μ(O))^{p/2} − (m/2)·deg(O)/(h(O)μ(O)).
/// m = 1 gives 𝒥(φ). Throws IsolatedOrigin, InvalidExponent.
double jphi(const WeightedGraph& g, const VertexFunction& h, std::string_view origin, double p, double m = 1.0);

/// Maximiser of 𝒥 over ∫h u² dμ = m (the supremum over ∫h u² <= m saturates
/// the constraint). Throws DisconnectedGraph, InvalidExponent, NonPositiveMass,
/// NonPositivePotential, UnknownVertex, NotConverged.
Solution maximize_constrained(const WeightedGraph& g, const PotentialProblem& prob, const SolverOptions& opts = {});

/// Sampled growth of h on a truncation: minimum of h on each distance shell.
struct C2Report {
  double h0 = 0.0;
  std::vector<double> shell_min;
  bool nondecreasing = false;
  bool growing = false;  // last shell minimum exceeds the first

  bool holds() const noexcept { return h0 > 0.0 && nondecreasing && growing; }
};

C2Report check_c2_sampled(const Truncation& t);

struct TruncationReport {
  std::vector<int> radii;
  std::vector<Truncation> truncations;
  std::vector<Solution> solutions;
  /// sup over B_{r_i/2}(O) of |u_{r_i} − u_{r_{i+1}}|, one per consecutive pair.
  std::vector<double> center_deltas;
  C2Report c2;
  C3Report c3;
};

/// Solves `maximize_constrained` on every B_r(O) and compares consecutive
/// solutions on the smaller half-ball. Throws InvalidArgument when radii are
/// not strictly increasing or h fails the sampled growth check; solver errors
/// propagate.
TruncationReport truncation_study(const GeneratorProblem& prob, std::span<const int> radii, const SolverOptions& opts = {});

}  // namespace gnls
