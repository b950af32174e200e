#include "gnls/energy.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

#include "gnls/calculus.hpp"

namespace gnls {

void require_exponent(double p) {
  if (!(p > 2.0) || !std::isfinite(p)) throw Error(ErrorCode::InvalidExponent, "p must be > 2, got " + std::to_string(p));
}

void ProblemSpec::validate(const WeightedGraph& g) const {
  require_exponent(p);
  if (!(m > 0.0) || !std::isfinite(m)) throw Error(ErrorCode::NonPositiveMass, "m must be > 0, got " + std::to_string(m));
  if (h) {
    require_domain(g, *h, "potential h");
    for (std::size_t x = 0; x < g.size(); ++x)
      if (!((*h)[x] > 0.0) || !std::isfinite((*h)[x]))
        throw Error(ErrorCode::NonPositivePotential, "h('" + g.id(x) + "') = " + std::to_string((*h)[x]));
  }
  if (origin) (void)g.index_of(*origin);
}

double signed_power(double u, double p) {
  if (u == 0.0) return 0.0;
  const double a = std::abs(u);
  return std::copysign(std::pow(a, p - 1.0), u);
}

EnergyBreakdown energy_components(const WeightedGraph& g, const VertexFunction& u, double p) {
  require_exponent(p);
  require_domain(g, u);
  EnergyBreakdown e;
  e.kinetic = 0.5 * dirichlet(g, u);
  double acc = 0.0;
  for (std::size_t x = 0; x < g.size(); ++x) acc += g.measure(x) * std::pow(std::abs(u[x]), p);
  e.nonlinear = acc / p;
  return e;
}

double weighted_mass(const WeightedGraph& g, const VertexFunction& u, const VertexFunction* h) {
  require_domain(g, u);
  if (h) require_domain(g, *h, "potential h");
  double acc = 0.0;
  for (std::size_t x = 0; x < g.size(); ++x) acc += g.measure(x) * (h ? (*h)[x] : 1.0) * u[x] * u[x];
  return acc;
}

double lagrange_multiplier(const WeightedGraph& g, const VertexFunction& u, const VertexFunction* h, double p,
                           double m, MassCheck check) {
  require_exponent(p);
  if (!(m > 0.0)) throw Error(ErrorCode::NonPositiveMass, "m must be > 0");
  const double mass = weighted_mass(g, u, h);
  const double mismatch = std::abs(mass - m) / m;
  if (mismatch > kMassWarnTolerance) {
    if (check == MassCheck::Strict)
      throw Error(ErrorCode::MassMismatch, "∫hu² = " + std::to_string(mass) + " but m = " + std::to_string(m));
    if (check == MassCheck::Warn)
      std::clog << "warning: lagrange_multiplier: relative mass mismatch " << mismatch << '\n';
  }
  const auto e = energy_components(g, u, p);
  return (p * e.nonlinear - 2.0 * e.kinetic) / m;
}

double el_residual(const WeightedGraph& g, const VertexFunction& u, double lambda, const VertexFunction* h, double p) {
  require_exponent(p);
  if (h) require_domain(g, *h, "potential h");
  const auto lap = laplacian(g, u);
  double r = 0.0;
  for (std::size_t x = 0; x < g.size(); ++x) {
    const double hx = h ? (*h)[x] : 1.0;
    r = std::max(r, std::abs(-lap[x] + lambda * hx * u[x] - signed_power(u[x], p)));
  }
  return r;
}

double lambda1_upper_bound(const WeightedGraph& g, const VertexFunction& h, double p) {
  require_exponent(p);
  require_domain(g, h, "potential h");
  const double h0 = *std::min_element(h.begin(), h.end());
  if (!(h0 > 0.0)) throw Error(ErrorCode::NonPositivePotential, "min h must be > 0");
  const double mu_min = g.min_measure();
  return 1.0 / (p * h0 * std::pow(mu_min * h0, (p - 2.0) / 2.0));
}

VertexFunction energy_gradient(const WeightedGraph& g, const VertexFunction& u, double p) {
  require_exponent(p);
  auto grad = laplacian(g, u);
  for (std::size_t x = 0; x < g.size(); ++x) grad[x] = -grad[x] - signed_power(u[x], p);
  return grad;
}

}  // namespace gnls
