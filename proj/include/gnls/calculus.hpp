#pragma once

#include <limits>

#include "gnls/graph.hpp"

namespace gnls {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// (Δu)(x) = (1/μ(x)) Σ_{y~x} w_xy (u(y) − u(x)).
VertexFunction laplacian(const WeightedGraph& g, const VertexFunction& u);

/// Γ(u,v)(x) = (1/(2μ(x))) Σ_{y~x} w_xy (u(y) − u(x))(v(y) − v(x)).
VertexFunction gamma(const WeightedGraph& g, const VertexFunction& u, const VertexFunction& v);

/// |∇u|²(x) = Γ(u,u)(x).
VertexFunction grad_sq(const WeightedGraph& g, const VertexFunction& u);

/// Σ_x μ(x) f(x).
double integrate(const WeightedGraph& g, const VertexFunction& f);

/// ∫ f·g dμ.
double inner(const WeightedGraph& g, const VertexFunction& f, const VertexFunction& h);

/// ∫|∇u|² dμ, evaluated edge-wise as Σ_{xy∈E} w_xy (u(y) − u(x))².
double dirichlet(const WeightedGraph& g, const VertexFunction& u);

/// (∫|u|^q dμ)^{1/q} for q >= 1, sup|u| for q = kInfinity. Throws InvalidExponent.
double lq_norm(const WeightedGraph& g, const VertexFunction& u, double q);

double sup_norm(const VertexFunction& u);

/// (∫ (|∇u|² + u²) dμ)^{1/2}.
double h_norm(const WeightedGraph& g, const VertexFunction& u);

}  // namespace gnls
