#include "gnls/potential.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gnls/energy.hpp"

namespace gnls {

namespace {

std::size_t require_origin(const WeightedGraph& g, const VertexFunction& h, std::string_view origin) {
  require_domain(g, h, "potential h");
  const std::size_t o = g.index_of(origin);
  if (!(h[o] > 0.0)) throw Error(ErrorCode::NonPositivePotential, "h(O) must be > 0");
  return o;
}

}  // namespace

C3Report check_c3(const WeightedGraph& g, const VertexFunction& h, std::string_view origin, double p, double m) {
  require_exponent(p);
  if (!(m > 0.0)) throw Error(ErrorCode::NonPositiveMass, "m must be > 0");
  const std::size_t o = require_origin(g, h, origin);
  const double deg = g.degree(o);
  if (!(deg > 0.0)) throw Error(ErrorCode::IsolatedOrigin, "deg(O) = 0");
  const double mu = g.measure(o);

  C3Report r;
  r.lhs = h[o];
  r.rhs = m * std::pow((2.0 / p) * std::pow(mu, 2.0 - p / 2.0) / deg, 2.0 / (p - 2.0));
  r.holds = r.lhs < r.rhs;
  r.note = "(c3) is sufficient for a positive maximiser, not necessary";
  return r;
}

VertexFunction phi_test(const WeightedGraph& g, const VertexFunction& h, std::string_view origin) {
  const std::size_t o = require_origin(g, h, origin);
  VertexFunction phi = VertexFunction::zeros(g);
  phi[o] = 1.0 / std::sqrt(h[o] * g.measure(o));
  return phi;
}

double jphi(const WeightedGraph& g, const VertexFunction& h, std::string_view origin, double p, double m) {
  require_exponent(p);
  if (!(m > 0.0)) throw Error(ErrorCode::NonPositiveMass, "m must be > 0");
  const std::size_t o = require_origin(g, h, origin);
  const double deg = g.degree(o);
  if (!(deg > 0.0)) throw Error(ErrorCode::IsolatedOrigin, "deg(O) = 0");
  const double mu = g.measure(o);
  const double hm = h[o] * mu;

  const double nonlinear = std::pow(m, p / 2.0) / p * mu / std::pow(hm, p / 2.0);
  const double kinetic = m / 2.0 * deg / hm;

  // The kinetic part of the closed form is ½deg(O)φ²(O) scaled by m; check it
  // against the edge-wise evaluation.
  auto phi = phi_test(g, h, origin);
  for (auto& x : phi) x *= std::sqrt(m);
  const auto direct = energy_components(g, phi, p);
  if (std::abs(direct.kinetic - kinetic) > 1e-12 * std::max(1.0, kinetic) ||
      std::abs(direct.nonlinear - nonlinear) > 1e-12 * std::max(1.0, nonlinear))
    throw std::logic_error("jphi: closed form disagrees with direct evaluation");
  return nonlinear - kinetic;
}

Solution maximize_constrained(const WeightedGraph& g, const PotentialProblem& prob, const SolverOptions& opts) {
  ProblemSpec spec{prob.p, prob.m, prob.h, prob.origin};
  spec.validate(g);
  return detail::solve_on_sphere(g, &prob.h, prob.p, prob.m, opts, detail::Objective::MaximizeCalJ);
}

C2Report check_c2_sampled(const Truncation& t) {
  C2Report r;
  r.h0 = *std::min_element(t.h.begin(), t.h.end());
  const int rmax = *std::max_element(t.rho.begin(), t.rho.end());
  r.shell_min.assign(static_cast<std::size_t>(rmax) + 1, std::numeric_limits<double>::infinity());
  for (std::size_t x = 0; x < t.h.size(); ++x) {
    auto& s = r.shell_min[static_cast<std::size_t>(t.rho[x])];
    s = std::min(s, t.h[x]);
  }
  r.nondecreasing = std::is_sorted(r.shell_min.begin(), r.shell_min.end());
  r.growing = r.shell_min.back() > r.shell_min.front();
  return r;
}

TruncationReport truncation_study(const GeneratorProblem& prob, std::span<const int> radii, const SolverOptions& opts) {
  if (radii.empty()) throw Error(ErrorCode::InvalidArgument, "no radii");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (radii[i] < 0) throw Error(ErrorCode::InvalidArgument, "negative radius");
    if (i > 0 && radii[i] <= radii[i - 1]) throw Error(ErrorCode::InvalidArgument, "radii not increasing");
  }

  TruncationReport report;
  report.radii.assign(radii.begin(), radii.end());
  for (int r : radii) report.truncations.push_back(ball_from_generator(prob.generator, prob.origin, r));

  const auto& largest = report.truncations.back();
  report.c2 = check_c2_sampled(largest);
  if (!report.c2.holds())
    throw Error(ErrorCode::InvalidArgument, "potential does not grow with the distance to the origin on the sampled range");
  report.c3 = check_c3(largest.graph, largest.h, prob.origin, prob.p, prob.m);

  for (const auto& t : report.truncations)
    report.solutions.push_back(maximize_constrained(t.graph, {t.h, prob.origin, prob.p, prob.m}, opts));

  for (std::size_t i = 0; i + 1 < report.truncations.size(); ++i) {
    const auto& small = report.truncations[i];
    const auto& big = report.truncations[i + 1];
    const int half = small.radius / 2;
    double delta = 0.0;
    for (std::size_t x = 0; x < small.graph.size(); ++x) {
      if (small.rho[x] > half) continue;
      const std::size_t y = big.graph.index_of(small.graph.id(x));
      delta = std::max(delta, std::abs(report.solutions[i].u[x] - report.solutions[i + 1].u[y]));
    }
    report.center_deltas.push_back(delta);
  }
  return report;
}

}  // namespace gnls
