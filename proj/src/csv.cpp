#include "gnls/csv.hpp"

#include <array>
#include <charconv>

namespace gnls {

std::string format_number(double x) {
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ec == std::errc{} ? end : buf.data());
}

namespace {

// Vertex ids may contain commas (2-D lattice); quote them.
std::string field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_solution_csv(std::ostream& out, const WeightedGraph& g, const VertexFunction* h, const Solution& s) {
  require_domain(g, s.u, "solution");
  out << "vertex_id,mu,h,u,v_rescaled\n";
  for (std::size_t x = 0; x < g.size(); ++x) {
    out << field(g.id(x)) << ',' << format_number(g.measure(x)) << ',' << format_number(h ? (*h)[x] : 1.0) << ','
        << format_number(s.u[x]) << ',' << format_number(s.rescaled[x]) << '\n';
  }
}

void write_sweep_csv(std::ostream& out, const WeightedGraph& g, std::span<const SweepRecord> sweep) {
  out << "m,lambda_m,lambda_rescaled,J,residual,converged";
  for (std::size_t x = 0; x < g.size(); ++x) out << ',' << field("v_" + g.id(x));
  out << '\n';
  for (const auto& r : sweep) {
    out << format_number(r.m) << ',' << format_number(r.lambda_m) << ',' << format_number(r.rescaled_multiplier) << ','
        << format_number(r.solution.energy) << ',' << format_number(r.solution.residual) << ','
        << (r.failed ? 0 : 1);
    for (std::size_t x = 0; x < g.size(); ++x) out << ',' << format_number(x < r.rescaled.size() ? r.rescaled[x] : 0.0);
    out << '\n';
  }
}

}  // namespace gnls
