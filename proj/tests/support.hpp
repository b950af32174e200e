#pragma once

#include <cmath>
#include <random>
#include <string>

#include "gnls/graph.hpp"

namespace gnls::testing {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Random connected graph: a random spanning tree plus extra random edges.
inline WeightedGraph random_connected_graph(std::mt19937_64& rng, int n, double lo = 0.1, double hi = 10.0,
                                            double extra = 0.3) {
  GraphSpec spec;
  for (int i = 0; i < n; ++i) spec.vertices.push_back({"v" + std::to_string(i), uniform(rng, lo, hi)});
  std::vector<std::vector<bool>> used(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  auto add = [&](int a, int b) {
    if (a == b || used[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) return;
    used[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = used[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = true;
    spec.edges.push_back({"v" + std::to_string(a), "v" + std::to_string(b), uniform(rng, lo, hi)});
  };
  for (int i = 1; i < n; ++i) add(i, std::uniform_int_distribution<int>(0, i - 1)(rng));
  const int more = static_cast<int>(extra * n);
  for (int k = 0; k < more; ++k)
    add(std::uniform_int_distribution<int>(0, n - 1)(rng), std::uniform_int_distribution<int>(0, n - 1)(rng));
  return WeightedGraph::build(spec);
}

inline VertexFunction random_function(std::mt19937_64& rng, const WeightedGraph& g, double lo = -1.0, double hi = 1.0) {
  VertexFunction f = VertexFunction::zeros(g);
  for (auto& x : f) x = uniform(rng, lo, hi);
  return f;
}

/// Two vertices a, b joined by one edge.
inline WeightedGraph two_vertex(double mu_a = 1.0, double mu_b = 1.0, double w = 1.0) {
  return WeightedGraph::build({{{"a", mu_a}, {"b", mu_b}}, {{"a", "b", w}}});
}

inline bool close(double a, double b, double rel, double abs = 0.0) {
  return std::abs(a - b) <= abs + rel * std::max(std::abs(a), std::abs(b));
}

}  // namespace gnls::testing
