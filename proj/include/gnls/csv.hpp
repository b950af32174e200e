#pragma once

#include <ostream>
#include <span>
#include <string>

#include "gnls/asymptotics.hpp"
#include "gnls/graph.hpp"
#include "gnls/solver.hpp"

namespace gnls {

/// Shortest decimal string that parses back to exactly `x`.
std::string format_number(double x);

/// Columns vertex_id,mu,h,u,v_rescaled (h = 1 when `h` is null).
void write_solution_csv(std::ostream& out, const WeightedGraph& g, const VertexFunction* h, const Solution& s);

/// Columns m,lambda_m,lambda_rescaled,J,residual,converged,v_<id>... ; J is
/// the solver's objective value (J or 𝒥).
void write_sweep_csv(std::ostream& out, const WeightedGraph& g, std::span<const SweepRecord> sweep);

}  // namespace gnls
