#include "gnls/fixtures.hpp"

#include <charconv>

#include "gnls/generator.hpp"

namespace gnls {

namespace {

constexpr const char* kPrismNote =
    "edge set is a placeholder (triangular prism x1x2x3 / x4x5x6 with rungs x1x4, x2x5, x3x6); "
    "the original drawing of this graph is not available, so values that depend on the edges "
    "(concentrated profiles at m = 10 and m = 100, the eigenvalue 0.2171) are not expected to match";

WeightedGraph prism(const std::vector<double>& mu) {
  GraphSpec spec;
  for (std::size_t i = 0; i < mu.size(); ++i) spec.vertices.push_back({"x" + std::to_string(i + 1), mu[i]});
  const char* pairs[][2] = {{"x1", "x2"}, {"x2", "x3"}, {"x3", "x1"}, {"x4", "x5"}, {"x5", "x6"},
                            {"x6", "x4"}, {"x1", "x4"}, {"x2", "x5"}, {"x3", "x6"}};
  for (auto& p : pairs) spec.edges.push_back({p[0], p[1], 1.0});
  return WeightedGraph::build(spec);
}

WeightedGraph path(int n) {
  GraphSpec spec;
  const std::string names = "abcdefghijklmnopqrstuvwxyz";
  for (int i = 0; i < n; ++i) spec.vertices.push_back({std::string(1, names[static_cast<std::size_t>(i)]), 1.0});
  for (int i = 0; i + 1 < n; ++i)
    spec.edges.push_back({spec.vertices[static_cast<std::size_t>(i)].id, spec.vertices[static_cast<std::size_t>(i + 1)].id, 1.0});
  return WeightedGraph::build(spec);
}

// "lattice1d(12)" → 12
std::optional<int> radius_arg(std::string_view name, std::string_view prefix) {
  if (!name.starts_with(prefix) || !name.ends_with(")")) return std::nullopt;
  const auto digits = name.substr(prefix.size(), name.size() - prefix.size() - 1);
  int r = -1;
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), r);
  if (ec != std::errc{} || end != digits.data() + digits.size() || r < 0) return std::nullopt;
  return r;
}

Fixture lattice(std::string_view name, const VertexGenerator& gen, const std::string& origin, int r) {
  auto t = ball_from_generator(gen, origin, r);
  return {std::string(name), std::move(t.graph), std::move(t.h), origin, "ball of radius " + std::to_string(r) + ", h = 1 + rho"};
}

}  // namespace

Fixture load_fixture(std::string_view name) {
  if (name == "g6-table1") return {"g6-table1", prism({3, 2, 10, 1, 40, 1}), std::nullopt, std::nullopt, kPrismNote};
  if (name == "g6-uniform") return {"g6-uniform", prism({1, 1, 1, 1, 1, 1}), std::nullopt, std::nullopt, kPrismNote};
  if (name == "path2") return {"path2", path(2), std::nullopt, std::nullopt, ""};
  if (name == "path3") return {"path3", path(3), std::nullopt, std::nullopt, ""};
  if (auto r = radius_arg(name, "lattice1d(")) return lattice(name, lattice_1d(), "0", *r);
  if (auto r = radius_arg(name, "lattice2d(")) return lattice(name, lattice_2d(), "0,0", *r);
  throw Error(ErrorCode::UnknownFixture, "unknown fixture '" + std::string(name) + "'");
}

std::vector<std::string> fixture_names() {
  return {"g6-table1", "g6-uniform", "path2", "path3", "lattice1d(r)", "lattice2d(r)"};
}

}  // namespace gnls
