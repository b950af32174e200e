#pragma once

#include <span>
#include <string>
#include <vector>

#include "gnls/energy.hpp"
#include "gnls/graph.hpp"
#include "gnls/solver.hpp"

namespace gnls {

struct SweepRecord {
  double m = 0.0;
  Solution solution;
  /// v_m = u_m/√m, ∫h v_m² dμ = 1.
  VertexFunction rescaled;
  double lambda_m = 0.0;
  /// λ_m / m^{p/2−1}.
  double rescaled_multiplier = 0.0;
  bool failed = false;
  std::string error;
};

/// n log-spaced masses from `from` to `to` inclusive (either direction).
std::vector<double> log_spaced(double from, double to, int n);

/// Solves at every mass in order, warm-starting each solve from the previous
/// rescaled solution (restart 0) alongside the usual perturbed restarts. With
/// `spec.h` set the potential problem is solved (maximisation of 𝒥), otherwise
/// the finite-graph problem. `spec.m` is ignored. A solve that does not
/// converge marks its record failed and the sweep continues.
///
/// Throws InvalidArgument when masses are not strictly monotone or not positive.
std::vector<SweepRecord> mass_sweep(const WeightedGraph& g, const ProblemSpec& spec, std::span<const double> masses,
                                    const SolverOptions& opts = {});

enum class LimitKind { Constant, Eigenfunction, Zero, SupportIndicator };

std::string_view to_string(LimitKind kind) noexcept;

struct ClassifyOptions {
  /// Last two rescaled functions and multipliers must differ by less than this.
  double settle_tolerance = 1e-8;
  /// Distance to the constant that counts as the constant (or zero) branch.
  double constant_tolerance = 1e-6;
  /// Bound on the residual of the eigenvalue limit equation.
  double eigen_tolerance = 1e-8;
  /// Bound on |λ₀ + lim λ_m|.
  double multiplier_tolerance = 1e-6;
  /// Numerical support: |w(x)| > threshold·‖w‖_∞.
  double support_threshold = 1e-6;
};

struct LimitClassification {
  LimitKind kind = LimitKind::Constant;
  VertexFunction limit_fn;
  /// λ₀ for small-mass limits, λ∞ for large-mass limits.
  double limit_multiplier = 0.0;
  /// Sup-norm residual of the limit equation evaluated on the tail.
  double residual = 0.0;
  /// Last rescaled function of the sweep.
  VertexFunction tail;
  /// lim λ_m (small mass) or lim λ_m/m^{p/2−1} (large mass), linearly
  /// extrapolated in the forcing coefficient from the last two records.
  double extrapolated_multiplier = 0.0;
  /// |λ₀ + lim λ_m| or |λ∞ − lim λ_m/m^{p/2−1}|.
  double multiplier_gap = 0.0;
  /// Support-indicator: max deviation from the indicator value on the support.
  /// Zero (potential case): max deviation of the tail from (∫h dμ)^{−1/2}.
  double structure_error = 0.0;
  std::vector<std::size_t> support;
  /// Eigenfunction branch: distance from λ₀ to the nearest generalized eigenvalue.
  double eigen_match = 0.0;
};

/// Limit of v_m as m → 0⁺ (records ordered by decreasing mass).
///
/// Without h: `Constant` when the tail is |V|^{−1/2}, else `Eigenfunction`
/// with λ₀ = ∫|∇v|² dμ. With h: `Zero` when the tail is the harmonic
/// constant (∫h dμ)^{−1/2}, which is how v ≡ 0 appears on a finite ball
/// (it vanishes as the ball grows because h → ∞), else `Eigenfunction` for
/// −Δv = λ₀ h v with λ₀ = ∫|∇v|²/∫h v².
///
/// Throws SweepNotSettled, InconsistentMultiplier.
LimitClassification classify_small_mass_limit(const WeightedGraph& g, std::span<const SweepRecord> sweep, double p,
                                              const VertexFunction* h = nullptr, const ClassifyOptions& opts = {});

/// Limit of w_m as m → ∞ (records ordered by increasing mass).
///
/// Without h: `SupportIndicator`, residual ‖w^{p−1} − ‖w‖_p^p w‖_∞ and the
/// deviation of w from μ(S)^{−1/2} on its numerical support S. With h:
/// λ∞ = ∫|w|^p / ∫h w², residual ‖|w|^{p−2}w − λ∞ h w‖_∞ and the deviation
/// from (λ∞ h)^{1/(p−2)} on S; `Zero` if w vanishes.
///
/// Throws SweepNotSettled.
LimitClassification classify_large_mass_limit(const WeightedGraph& g, std::span<const SweepRecord> sweep, double p,
                                              const VertexFunction* h = nullptr, const ClassifyOptions& opts = {});

struct EigenPair {
  double lambda = 0.0;
  VertexFunction v;
};

/// All pairs of −Δv = λ h v (h = nullptr: h ≡ 1), eigenvalues ascending,
/// ∫h v² dμ = 1, sign fixed so the largest-magnitude entry is positive.
/// Dense symmetric solve; intended for up to a few thousand vertices.
/// Throws DisconnectedGraph.
std::vector<EigenPair> generalized_eigenpair(const WeightedGraph& g, const VertexFunction* h = nullptr);

}  // namespace gnls
