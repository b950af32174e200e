#include "gnls/solver.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "gnls/calculus.hpp"
#include "gnls/descent.hpp"

namespace gnls {

void SolverOptions::validate() const {
  if (!(tolerance > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be > 0");
  if (max_iterations < 1) throw Error(ErrorCode::InvalidArgument, "max_iterations must be >= 1");
  if (restarts < 1) throw Error(ErrorCode::InvalidArgument, "restarts must be >= 1");
  if (!(armijo > 0.0 && armijo < 1.0)) throw Error(ErrorCode::InvalidArgument, "armijo must be in (0,1)");
  if (!(backtrack > 0.0 && backtrack < 1.0)) throw Error(ErrorCode::InvalidArgument, "backtrack must be in (0,1)");
  if (!(initial_step > 0.0)) throw Error(ErrorCode::InvalidArgument, "initial_step must be > 0");
  if (initial == InitialGuess::UserSupplied && !user_initial)
    throw Error(ErrorCode::InvalidArgument, "user-supplied initial guess missing");
}

namespace {

struct Coefficients {
  double alpha;
  double beta;
  double core_mass;
  double residual_scale;
};

// Normalised coefficients of the rescaled energy: the larger one is 1.
std::pair<double, double> normalised(double p, double m) {
  const double forcing = std::pow(m, p / 2.0 - 1.0);
  if (forcing <= 1.0) return {1.0, forcing};
  return {1.0 / forcing, 1.0};
}

Coefficients coefficients(double p, double m, Formulation f) {
  const auto [alpha, beta] = normalised(p, m);
  if (f == Formulation::Rescaled) return {alpha, beta, 1.0, 1.0};
  return {1.0, 1.0, m, alpha / std::sqrt(m)};
}

// Deterministic uniform variate in [-1, 1] from the raw engine output, so the
// perturbations do not depend on the standard library's distributions.
double symmetric_unit(std::mt19937_64& rng) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return 2.0 * u - 1.0;
}

VertexFunction start_for(const WeightedGraph& g, const SolverOptions& opts, int run) {
  if (opts.initial == InitialGuess::UserSupplied && run == 0) return *opts.user_initial;
  VertexFunction v(g.size(), 1.0);
  if (opts.initial == InitialGuess::Constant || run == 0) return v;
  std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                    static_cast<std::uint32_t>(run)};
  std::mt19937_64 rng(seq);
  const double size = 0.1 * run;
  for (auto& x : v) x *= 1.0 + size * symmetric_unit(rng);
  return v;
}

}  // namespace

namespace detail {

Solution solve_on_sphere(const WeightedGraph& g, const VertexFunction* h, double p, double m, const SolverOptions& opts,
                         Objective objective) {
  require_exponent(p);
  if (!(m > 0.0) || !std::isfinite(m)) throw Error(ErrorCode::NonPositiveMass, "m must be > 0");
  if (!g.connected()) throw Error(ErrorCode::DisconnectedGraph, "solvers need a connected graph");
  opts.validate();
  if (opts.user_initial) require_domain(g, *opts.user_initial, "initial guess");

  const auto c = coefficients(p, m, opts.formulation);
  ScaledProblem prob{&g, h, p, c.alpha, c.beta, c.core_mass, c.residual_scale};
  DescentSettings settings{opts.tolerance, opts.max_iterations, opts.armijo, opts.backtrack,
                           opts.max_backtracks, opts.initial_step, opts.keep_trace};

  const int runs = opts.initial == InitialGuess::Constant ? 1 : opts.restarts;
  int best = -1;
  int best_unconverged = -1;
  std::vector<DescentResult> results;
  results.reserve(static_cast<std::size_t>(runs));
  for (int run = 0; run < runs; ++run) {
    results.push_back(descend(prob, start_for(g, opts, run), settings));
    const auto& r = results.back();
    if (r.converged) {
      if (best < 0) {
        best = run;
      } else {
        const double e0 = results[static_cast<std::size_t>(best)].energy;
        const double tie = 1e-12 * std::max(1.0, std::abs(e0));
        if (r.energy < e0 - tie) best = run;
      }
    } else if (best_unconverged < 0 || r.residual < results[static_cast<std::size_t>(best_unconverged)].residual) {
      best_unconverged = run;
    }
  }

  const int chosen = best >= 0 ? best : best_unconverged;
  const auto& r = results[static_cast<std::size_t>(chosen)];

  Solution s;
  const double to_u = std::sqrt(m / c.core_mass);
  const double to_v = 1.0 / std::sqrt(c.core_mass);
  s.u = r.v;
  s.rescaled = r.v;
  for (auto& x : s.u) x *= to_u;
  for (auto& x : s.rescaled) x *= to_v;
  s.lambda = r.lambda_hat / c.alpha;
  s.rescaled_multiplier = s.lambda / std::pow(m, p / 2.0 - 1.0);
  const double j = m / (c.alpha * c.core_mass) * r.energy;
  s.energy = objective == Objective::MinimizeJ ? j : -j;
  s.residual = r.residual;
  s.mass = m * weighted_mass(g, s.rescaled, h);
  s.iterations = r.iterations;
  s.converged = r.converged;
  s.restart = chosen;
  s.energy_trace = r.energy_trace;
  s.decrease_trace = r.decrease_trace;
  if (objective == Objective::MaximizeCalJ)
    for (auto& e : s.energy_trace) e = -e;

  if (best < 0)
    throw NotConverged("no restart reached tolerance " + std::to_string(opts.tolerance) + "; best residual " +
                           std::to_string(r.residual) + (r.stalled ? " (line search stalled)" : ""),
                       std::move(s));
  return s;
}

}  // namespace detail

Solution minimize_normalized(const WeightedGraph& g, const ProblemSpec& spec, const SolverOptions& opts) {
  spec.validate(g);
  if (spec.h) throw Error(ErrorCode::InvalidArgument, "finite-graph problem takes no potential; use maximize_constrained");
  return detail::solve_on_sphere(g, nullptr, spec.p, spec.m, opts, detail::Objective::MinimizeJ);
}

Solution constant_candidate(const WeightedGraph& g, double p, double m) {
  require_exponent(p);
  if (!(m > 0.0) || !std::isfinite(m)) throw Error(ErrorCode::NonPositiveMass, "m must be > 0");
  const double c = std::sqrt(m / g.volume());
  Solution s;
  s.u = VertexFunction::constant(g, c);
  s.rescaled = VertexFunction::constant(g, 1.0 / std::sqrt(g.volume()));
  s.lambda = std::pow(c, p - 2.0);
  s.rescaled_multiplier = s.lambda / std::pow(m, p / 2.0 - 1.0);
  s.energy = energy_components(g, s.u, p).finite();
  s.residual = 0.0;
  s.mass = m;
  s.converged = true;
  return s;
}

}  // namespace gnls
