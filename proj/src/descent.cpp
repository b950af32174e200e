#include "gnls/descent.hpp"

#include <algorithm>
#include <cmath>

#include "gnls/energy.hpp"

namespace gnls::detail {

namespace {

double weight_at(const ScaledProblem& prob, std::size_t x) { return prob.h ? (*prob.h)[x] : 1.0; }

struct State {
  double energy = 0.0;
  double lambda_hat = 0.0;
  double residual = 0.0;
  double dnorm2 = 0.0;
  VertexFunction d;
};

State evaluate(const ScaledProblem& prob, const VertexFunction& v) {
  const auto& g = *prob.graph;
  const std::size_t n = g.size();
  double kin = 0.0;
  for (const auto& e : g.edges()) {
    const double diff = v[e.b] - v[e.a];
    kin += e.w * diff * diff;
  }
  double pint = 0.0;
  for (std::size_t x = 0; x < n; ++x) pint += g.measure(x) * std::pow(std::abs(v[x]), prob.p);

  State s;
  s.energy = prob.alpha * 0.5 * kin - prob.beta * pint / prob.p;
  s.lambda_hat = (prob.beta * pint - prob.alpha * kin) / prob.mass;
  s.d = VertexFunction(n, 0.0);
  double rmax = 0.0;
  for (std::size_t x = 0; x < n; ++x) {
    double lap = 0.0;
    for (const auto& nb : g.neighbors(x)) lap += nb.weight * (v[nb.index] - v[x]);
    lap /= g.measure(x);
    const double hx = weight_at(prob, x);
    const double r = -prob.alpha * lap + s.lambda_hat * hx * v[x] - prob.beta * signed_power(v[x], prob.p);
    rmax = std::max(rmax, std::abs(r));
    s.d[x] = r / hx;
    s.dnorm2 += g.measure(x) * hx * s.d[x] * s.d[x];
  }
  s.residual = rmax * prob.residual_scale;
  return s;
}

bool strictly_positive(const VertexFunction& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return x > 0.0; });
}

double h_inner(const ScaledProblem& prob, const VertexFunction& a, const VertexFunction& b) {
  double acc = 0.0;
  for (std::size_t x = 0; x < a.size(); ++x) acc += prob.graph->measure(x) * weight_at(prob, x) * a[x] * b[x];
  return acc;
}

}  // namespace

double power_difference(double a, double b, double p) {
  a = std::abs(a);
  b = std::abs(b);
  if (a == b) return 0.0;
  if (b == 0.0) return std::pow(a, p);
  if (a == 0.0) return -std::pow(b, p);
  return std::pow(b, p) * std::expm1(p * std::log1p((a - b) / b));
}

double energy_difference(const ScaledProblem& prob, const VertexFunction& v1, const VertexFunction& v2) {
  const auto& g = *prob.graph;
  double kin = 0.0;
  for (const auto& e : g.edges()) {
    const double da = v2[e.a] - v1[e.a];
    const double db = v2[e.b] - v1[e.b];
    kin += e.w * (db - da) * ((v2[e.b] - v2[e.a]) + (v1[e.b] - v1[e.a]));
  }
  double nl = 0.0;
  for (std::size_t x = 0; x < g.size(); ++x) nl += g.measure(x) * power_difference(v2[x], v1[x], prob.p);
  return prob.alpha * 0.5 * kin - prob.beta * nl / prob.p;
}

double scaled_energy(const ScaledProblem& prob, const VertexFunction& v) { return evaluate(prob, v).energy; }

VertexFunction retract(const ScaledProblem& prob, VertexFunction v) {
  for (auto& x : v) x = std::abs(x);
  const double mass = h_inner(prob, v, v);
  if (!(mass > 0.0)) return v;
  const double scale = std::sqrt(prob.mass / mass);
  for (auto& x : v) x *= scale;
  return v;
}

DescentResult descend(const ScaledProblem& prob, VertexFunction start, const DescentSettings& settings) {
  const auto& g = *prob.graph;
  const std::size_t n = g.size();

  DescentResult out;
  VertexFunction v = retract(prob, std::move(start));
  if (!(h_inner(prob, v, v) > 0.0)) {
    // Zero start: fall back to the constant on the sphere.
    v = retract(prob, VertexFunction(n, 1.0));
  }
  State s = evaluate(prob, v);
  if (settings.keep_trace) out.energy_trace.push_back(s.energy);

  double step = settings.initial_step;
  long it = 0;
  for (; it < settings.max_iterations; ++it) {
    if (s.residual <= settings.tolerance && strictly_positive(v)) {
      out.converged = true;
      break;
    }

    VertexFunction trial(n, 0.0);
    double change = 0.0;
    bool accepted = false;
    for (int bt = 0; bt <= settings.max_backtracks; ++bt) {
      for (std::size_t x = 0; x < n; ++x) trial[x] = v[x] - step * s.d[x];
      trial = retract(prob, std::move(trial));
      // Lagrangian change: the multiplier term cancels the first-order effect
      // of rounding in the retraction, which would otherwise swamp tiny steps.
      double mass_change = 0.0;
      for (std::size_t x = 0; x < n; ++x)
        mass_change += g.measure(x) * weight_at(prob, x) * (trial[x] - v[x]) * (trial[x] + v[x]);
      change = energy_difference(prob, v, trial) + 0.5 * s.lambda_hat * mass_change;
      if (change <= -settings.armijo * step * s.dnorm2) {
        accepted = true;
        break;
      }
      step *= settings.backtrack;
    }
    if (!accepted) {
      out.stalled = true;
      break;
    }

    State next = evaluate(prob, trial);
    // Barzilai–Borwein step for the next trial, in the h-weighted metric.
    double ss = 0.0;
    double sy = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      const double w = g.measure(x) * weight_at(prob, x);
      const double sx = trial[x] - v[x];
      ss += w * sx * sx;
      sy += w * sx * (next.d[x] - s.d[x]);
    }
    step = sy > 0.0 ? ss / sy : std::min(step * 4.0, 1e12);
    step = std::clamp(step, 1e-12, 1e12);

    v = std::move(trial);
    s = std::move(next);
    if (settings.keep_trace) {
      out.energy_trace.push_back(s.energy);
      out.decrease_trace.push_back(change);
    }
  }
  if (!out.converged && it >= settings.max_iterations && s.residual <= settings.tolerance && strictly_positive(v))
    out.converged = true;

  out.v = std::move(v);
  out.lambda_hat = s.lambda_hat;
  out.energy = s.energy;
  out.residual = s.residual;
  out.iterations = it;
  return out;
}

}  // namespace gnls::detail
