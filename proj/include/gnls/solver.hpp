#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gnls/energy.hpp"
#include "gnls/graph.hpp"

namespace gnls {

enum class InitialGuess {
  Constant,           ///< one run from the constant on the constraint sphere
  PerturbedConstant,  ///< `restarts` runs; run k perturbs the constant by relative size 0.1·k
  UserSupplied,       ///< run 0 from `user_initial`, runs 1.. as PerturbedConstant
};

/// Which variables the descent operates on.
enum class Formulation {
  /// v = u/√m on the unit sphere, with the energy divided by the larger of
  /// its two coefficients (1 and m^{p/2−1}). Safe for masses up to ~1e300.
  Rescaled,
  /// u itself on the sphere of mass m. Used to cross-check the rescaled path.
  Direct,
};

struct SolverOptions {
  /// Bound on the sup-norm of the normalised Euler–Lagrange residual (see `Solution::residual`).
  double tolerance = 1e-10;
  long max_iterations = 1'000'000;
  InitialGuess initial = InitialGuess::PerturbedConstant;
  std::optional<VertexFunction> user_initial;
  double armijo = 1e-4;
  double backtrack = 0.5;
  int max_backtracks = 80;
  double initial_step = 1.0;
  std::uint64_t seed = 0;
  int restarts = 8;
  Formulation formulation = Formulation::Rescaled;
  bool keep_trace = false;

  /// Throws InvalidArgument.
  void validate() const;
};

struct Solution {
  VertexFunction u;
  /// v = u/√m, so ∫h v² dμ = 1.
  VertexFunction rescaled;
  /// λ_m in −Δu + λ_m h u = u^{p−1}.
  double lambda = 0.0;
  /// λ_m / m^{p/2−1}.
  double rescaled_multiplier = 0.0;
  /// J(u) for the finite-graph problem, 𝒥(u) for the potential problem.
  double energy = 0.0;
  /// Sup-norm residual of −αΔv + αλ_m h v − β v^{p−1} with v = u/√m,
  /// (α, β) = (1, m^{p/2−1}) for m <= 1 and (m^{1−p/2}, 1) for m > 1. For
  /// m <= 1 this is the residual of the rescaled equation itself and bounds
  /// the residual of the u-equation from above.
  double residual = 0.0;
  /// ∫h u² dμ achieved.
  double mass = 0.0;
  long iterations = 0;
  bool converged = false;
  int restart = 0;
  std::vector<double> energy_trace;
  std::vector<double> decrease_trace;
};

/// Raised when no restart converged; carries the run with the smallest residual.
class NotConverged : public Error {
 public:
  NotConverged(const std::string& what, Solution best)
      : Error(ErrorCode::NotConverged, what), best_(std::move(best)) {}
  const Solution& best() const noexcept { return best_; }

 private:
  Solution best_;
};

/// Global minimiser of J(u) = ½∫|∇u|² − (1/p)∫|u|^p over ∫u² dμ = m on a
/// connected finite graph. Among converged restarts the lowest J wins; ties
/// (relative ΔJ < 1e−12) go to the lowest restart index.
///
/// Throws DisconnectedGraph, InvalidExponent, NonPositiveMass, InvalidArgument
/// (spec carries a potential), NotConverged.
Solution minimize_normalized(const WeightedGraph& g, const ProblemSpec& spec, const SolverOptions& opts = {});

/// u ≡ √(m/|V|), λ = (m/|V|)^{(p−2)/2}: always a critical point of J on the sphere.
Solution constant_candidate(const WeightedGraph& g, double p, double m);

namespace detail {

enum class Objective { MinimizeJ, MaximizeCalJ };

/// Shared driver for both solvers. `h` may be nullptr (h ≡ 1).
Solution solve_on_sphere(const WeightedGraph& g, const VertexFunction* h, double p, double m, const SolverOptions& opts,
                         Objective objective);

}  // namespace detail

}  // namespace gnls
