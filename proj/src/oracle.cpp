#include "gnls/oracle.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "gnls/calculus.hpp"

namespace gnls {

namespace {

constexpr double kQuarter = std::numbers::pi / 2.0;

// J on a tiny graph without allocation; the grid evaluates it millions of times.
struct TinyEnergy {
  const WeightedGraph* g;
  double p;
  std::array<double, 3> scale{};  // √(m/(μh)) per vertex

  double operator()(const std::array<double, 3>& u) const {
    double kinetic = 0.0;
    for (const auto& e : g->edges()) {
      const double d = u[e.a] - u[e.b];
      kinetic += e.w * d * d;
    }
    double nonlinear = 0.0;
    for (std::size_t x = 0; x < g->size(); ++x) nonlinear += g->measure(x) * std::pow(std::abs(u[x]), p);
    return 0.5 * kinetic - nonlinear / p;
  }

  std::array<double, 3> point(double theta, double phi) const {
    if (g->size() == 2) return {scale[0] * std::cos(theta), scale[1] * std::sin(theta), 0.0};
    return {scale[0] * std::cos(theta), scale[1] * std::sin(theta) * std::cos(phi),
            scale[2] * std::sin(theta) * std::sin(phi)};
  }

  double at(double theta, double phi) const { return (*this)(point(theta, phi)); }
};

double clamp_angle(double a) { return std::min(std::max(a, 0.0), kQuarter); }

double golden_section(const TinyEnergy& f, double lo, double hi) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - r * (b - a), d = a + r * (b - a);
  double fc = f.at(c, 0.0), fd = f.at(d, 0.0);
  for (int i = 0; i < 200 && b - a > 1e-15; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = f.at(c, 0.0);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = f.at(d, 0.0);
    }
  }
  return fc < fd ? c : d;
}

}  // namespace

Solution brute_force_extremum(const WeightedGraph& g, const ProblemSpec& spec, Sense sense, const GridSpec& grid) {
  if (g.size() < 2 || g.size() > 3) throw Error(ErrorCode::TooManyVertices, "brute force needs 2 or 3 vertices");
  spec.validate(g);
  if (grid.resolution < (g.size() == 2 ? 1000 : 10))
    throw Error(ErrorCode::InvalidArgument, "grid resolution too small");
  const VertexFunction* h = spec.h ? &*spec.h : nullptr;

  TinyEnergy f{&g, spec.p, {}};
  for (std::size_t x = 0; x < g.size(); ++x) f.scale[x] = std::sqrt(spec.m / (g.measure(x) * (h ? (*h)[x] : 1.0)));

  const int n = grid.resolution;
  const double cell = kQuarter / n;
  double best_t = 0.0, best_f = f.at(0.0, 0.0), best_p = 0.0;
  if (g.size() == 2) {
    for (int i = 0; i <= n; ++i) {
      const double t = i * cell;
      const double v = f.at(t, 0.0);
      if (v < best_f) best_f = v, best_t = t;
    }
    best_t = golden_section(f, clamp_angle(best_t - cell), clamp_angle(best_t + cell));
  } else {
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        const double v = f.at(i * cell, j * cell);
        if (v < best_f) best_f = v, best_t = i * cell, best_p = j * cell;
      }
    // Zoom: a 21×21 grid on a window that shrinks by 4 each pass.
    double half = cell;
    for (int pass = 0; pass < grid.refine; ++pass) {
      const double t0 = best_t, p0 = best_p;
      for (int i = -10; i <= 10; ++i)
        for (int j = -10; j <= 10; ++j) {
          const double t = clamp_angle(t0 + half * i / 10.0);
          const double q = clamp_angle(p0 + half * j / 10.0);
          const double v = f.at(t, q);
          if (v < best_f) best_f = v, best_t = t, best_p = q;
        }
      half /= 4.0;
      if (half < 1e-15) break;
    }
  }

  const auto pt = f.point(best_t, best_p);
  Solution s;
  s.u = VertexFunction(std::vector<double>(pt.begin(), pt.begin() + static_cast<std::ptrdiff_t>(g.size())));
  s.rescaled = s.u;
  for (auto& x : s.rescaled) x /= std::sqrt(spec.m);
  const auto e = energy_components(g, s.u, spec.p);
  s.energy = sense == Sense::Min ? e.finite() : e.potential();
  s.mass = weighted_mass(g, s.u, h);
  s.lambda = lagrange_multiplier(g, s.u, h, spec.p, spec.m, MassCheck::Ignore);
  s.rescaled_multiplier = s.lambda / std::pow(spec.m, spec.p / 2.0 - 1.0);
  s.residual = el_residual(g, s.u, s.lambda, h, spec.p);
  s.converged = true;
  return s;
}

double fd_gradient_check(const WeightedGraph& g, const VertexFunction& u, double p, double step) {
  require_exponent(p);
  require_domain(g, u, "u");
  if (!(step > 0.0)) throw Error(ErrorCode::InvalidArgument, "step must be > 0");

  const auto J = [&](const VertexFunction& v) { return energy_components(g, v, p).finite(); };
  double worst = 0.0;
  VertexFunction e = VertexFunction::zeros(g);
  VertexFunction plus = u, minus = u;
  for (std::size_t x = 0; x < g.size(); ++x) {
    e[x] = 1.0;
    const double analytic = integrate(g, gamma(g, u, e)) - g.measure(x) * signed_power(u[x], p);
    e[x] = 0.0;
    plus[x] = u[x] + step;
    minus[x] = u[x] - step;
    const double numeric = (J(plus) - J(minus)) / (2.0 * step);
    plus[x] = minus[x] = u[x];
    worst = std::max(worst, std::abs(analytic - numeric) / std::max(1.0, std::abs(analytic)));
  }
  return worst;
}

}  // namespace gnls
