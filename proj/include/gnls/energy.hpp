#pragma once

#include <optional>
#include <string>

#include "gnls/graph.hpp"

namespace gnls {

/// One constrained problem: exponent p > 2, mass m > 0, optional potential h
/// (min h > 0) and optional origin vertex for potential problems.
struct ProblemSpec {
  double p = 3.0;
  double m = 1.0;
  std::optional<VertexFunction> h;
  std::optional<std::string> origin;

  /// Throws InvalidExponent, NonPositiveMass, NonPositivePotential, DomainMismatch, UnknownVertex.
  void validate(const WeightedGraph& g) const;
};

/// kinetic = ½∫|∇u|² dμ, nonlinear = (1/p)∫|u|^p dμ.
struct EnergyBreakdown {
  double kinetic = 0.0;
  double nonlinear = 0.0;

  /// J(u) = ½∫|∇u|² − (1/p)∫|u|^p, minimised on finite graphs.
  double finite() const noexcept { return kinetic - nonlinear; }
  /// 𝒥(u) = (1/p)∫|u|^p − ½∫|∇u|², maximised in the potential problem.
  double potential() const noexcept { return nonlinear - kinetic; }
};

/// Throws InvalidExponent unless p > 2 and finite.
void require_exponent(double p);

EnergyBreakdown energy_components(const WeightedGraph& g, const VertexFunction& u, double p);

/// How `lagrange_multiplier` reacts when ∫h u² dμ differs from m by more than
/// `kMassWarnTolerance` (relative).
enum class MassCheck { Warn, Strict, Ignore };

inline constexpr double kMassWarnTolerance = 1e-8;

/// λ = (1/m)(∫|u|^p dμ − ∫|∇u|² dμ). `h` only enters the mass check; pass
/// nullptr for h ≡ 1. Warn writes one line to std::clog; Strict throws MassMismatch.
double lagrange_multiplier(const WeightedGraph& g, const VertexFunction& u, const VertexFunction* h, double p,
                           double m, MassCheck check = MassCheck::Warn);

/// |u|^{p−2} u, the odd extension of the power nonlinearity.
double signed_power(double u, double p);

/// sup_x |−Δu + λ h u − |u|^{p−2}u|; h = nullptr means h ≡ 1.
double el_residual(const WeightedGraph& g, const VertexFunction& u, double lambda, const VertexFunction* h, double p);

/// Upper bound 1/(p h₀ (μ_min h₀)^{(p−2)/2}) on sup 𝒥 over ∫h u² dμ <= 1.
double lambda1_upper_bound(const WeightedGraph& g, const VertexFunction& h, double p);

/// L²(μ)-gradient of J: −Δu − |u|^{p−2}u.
VertexFunction energy_gradient(const WeightedGraph& g, const VertexFunction& u, double p);

/// ∫ h u² dμ (h = nullptr for h ≡ 1).
double weighted_mass(const WeightedGraph& g, const VertexFunction& u, const VertexFunction* h);

}  // namespace gnls
