#include "gnls/calculus.hpp"

#include <algorithm>
#include <cmath>

namespace gnls {

VertexFunction laplacian(const WeightedGraph& g, const VertexFunction& u) {
  require_domain(g, u);
  VertexFunction out(g.size(), 0.0);
  for (std::size_t x = 0; x < g.size(); ++x) {
    double acc = 0.0;
    for (const auto& nb : g.neighbors(x)) acc += nb.weight * (u[nb.index] - u[x]);
    out[x] = acc / g.measure(x);
  }
  return out;
}

VertexFunction gamma(const WeightedGraph& g, const VertexFunction& u, const VertexFunction& v) {
  require_domain(g, u, "u");
  require_domain(g, v, "v");
  VertexFunction out(g.size(), 0.0);
  for (std::size_t x = 0; x < g.size(); ++x) {
    double acc = 0.0;
    for (const auto& nb : g.neighbors(x)) acc += nb.weight * (u[nb.index] - u[x]) * (v[nb.index] - v[x]);
    out[x] = acc / (2.0 * g.measure(x));
  }
  return out;
}

VertexFunction grad_sq(const WeightedGraph& g, const VertexFunction& u) { return gamma(g, u, u); }

double integrate(const WeightedGraph& g, const VertexFunction& f) {
  require_domain(g, f);
  double acc = 0.0;
  for (std::size_t x = 0; x < g.size(); ++x) acc += g.measure(x) * f[x];
  return acc;
}

double inner(const WeightedGraph& g, const VertexFunction& f, const VertexFunction& h) {
  require_domain(g, f);
  require_domain(g, h);
  double acc = 0.0;
  for (std::size_t x = 0; x < g.size(); ++x) acc += g.measure(x) * f[x] * h[x];
  return acc;
}

double dirichlet(const WeightedGraph& g, const VertexFunction& u) {
  require_domain(g, u);
  double acc = 0.0;
  for (const auto& e : g.edges()) {
    const double d = u[e.b] - u[e.a];
    acc += e.w * d * d;
  }
  return acc;
}

double sup_norm(const VertexFunction& u) {
  double s = 0.0;
  for (double x : u) s = std::max(s, std::abs(x));
  return s;
}

double lq_norm(const WeightedGraph& g, const VertexFunction& u, double q) {
  require_domain(g, u);
  if (q == kInfinity) return sup_norm(u);
  if (!(q >= 1.0) || !std::isfinite(q)) throw Error(ErrorCode::InvalidExponent, "q must be >= 1 or infinity");
  double acc = 0.0;
  for (std::size_t x = 0; x < g.size(); ++x) acc += g.measure(x) * std::pow(std::abs(u[x]), q);
  return std::pow(acc, 1.0 / q);
}

double h_norm(const WeightedGraph& g, const VertexFunction& u) {
  require_domain(g, u);
  double acc = dirichlet(g, u);
  for (std::size_t x = 0; x < g.size(); ++x) acc += g.measure(x) * u[x] * u[x];
  return std::sqrt(acc);
}

}  // namespace gnls
