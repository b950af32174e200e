#include "gnls/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <set>
#include <utility>

namespace gnls {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::NonPositiveMeasure: return "NonPositiveMeasure";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::AsymmetricWeight: return "AsymmetricWeight";
    case ErrorCode::UnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::InvalidExponent: return "InvalidExponent";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MassMismatch: return "MassMismatch";
    case ErrorCode::NonPositiveMass: return "NonPositiveMass";
    case ErrorCode::NonPositivePotential: return "NonPositivePotential";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::IsolatedOrigin: return "IsolatedOrigin";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::TooManyVertices: return "TooManyVertices";
    case ErrorCode::SweepNotSettled: return "SweepNotSettled";
    case ErrorCode::InconsistentMultiplier: return "InconsistentMultiplier";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::ConfigParse: return "ConfigParse";
    case ErrorCode::FileIO: return "FileIO";
  }
  return "Unknown";
}

WeightedGraph WeightedGraph::build(const GraphSpec& spec) {
  if (spec.vertices.empty()) throw Error(ErrorCode::EmptyGraph, "graph needs at least one vertex");

  WeightedGraph g;
  g.ids_.reserve(spec.vertices.size());
  g.mu_.reserve(spec.vertices.size());
  for (std::size_t i = 0; i < spec.vertices.size(); ++i) {
    const auto& v = spec.vertices[i];
    if (!(v.mu > 0.0) || !std::isfinite(v.mu))
      throw Error(ErrorCode::NonPositiveMeasure, "vertices[" + std::to_string(i) + "] '" + v.id + "': mu = " + std::to_string(v.mu));
    if (!g.index_.emplace(v.id, i).second)
      throw Error(ErrorCode::InvalidArgument, "vertices[" + std::to_string(i) + "]: repeated vertex id '" + v.id + "'");
    g.ids_.push_back(v.id);
    g.mu_.push_back(v.mu);
  }

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t k = 0; k < spec.edges.size(); ++k) {
    const auto& e = spec.edges[k];
    const std::string where = "edges[" + std::to_string(k) + "] (" + e.u + "," + e.v + ")";
    auto a = g.find(e.u);
    auto b = g.find(e.v);
    if (!a || !b) throw Error(ErrorCode::UnknownEndpoint, where);
    if (*a == *b) throw Error(ErrorCode::SelfLoop, where);
    if (!(e.w > 0.0) || !std::isfinite(e.w))
      throw Error(ErrorCode::NonPositiveWeight, where + ": w = " + std::to_string(e.w));
    if (!seen.emplace(std::minmax(*a, *b)).second) throw Error(ErrorCode::DuplicateEdge, where);
    g.edges_.push_back({*a, *b, e.w});
  }

  const std::size_t n = g.ids_.size();
  std::vector<std::size_t> count(n, 0);
  for (const auto& e : g.edges_) {
    ++count[e.a];
    ++count[e.b];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + count[i];
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& e : g.edges_) {
    g.adjacency_[fill[e.a]++] = {e.b, e.w};
    g.adjacency_[fill[e.b]++] = {e.a, e.w};
  }

  g.degree_.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& nb : g.neighbors(i)) g.degree_[i] += nb.weight;

  g.volume_ = 0.0;
  g.min_mu_ = std::numeric_limits<double>::infinity();
  for (double m : g.mu_) {
    g.volume_ += m;
    g.min_mu_ = std::min(g.min_mu_, m);
  }

  const auto dist = g.distances_from(0);
  g.connected_ = std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
  return g;
}

std::optional<std::size_t> WeightedGraph::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t WeightedGraph::index_of(std::string_view id) const {
  auto i = find(id);
  if (!i) throw Error(ErrorCode::UnknownVertex, "'" + std::string(id) + "'");
  return *i;
}

std::vector<int> WeightedGraph::distances_from(std::size_t origin) const {
  std::vector<int> dist(size(), -1);
  std::deque<std::size_t> queue{origin};
  dist.at(origin) = 0;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (const auto& nb : neighbors(x)) {
      if (dist[nb.index] >= 0) continue;
      dist[nb.index] = dist[x] + 1;
      queue.push_back(nb.index);
    }
  }
  return dist;
}

GraphSpec WeightedGraph::to_spec() const {
  GraphSpec spec;
  for (std::size_t i = 0; i < size(); ++i) spec.vertices.push_back({ids_[i], mu_[i]});
  for (const auto& e : edges_) spec.edges.push_back({ids_[e.a], ids_[e.b], e.w});
  return spec;
}

double degree(const WeightedGraph& g, std::string_view x) { return g.degree(g.index_of(x)); }

WeightedGraph ball_subgraph(const WeightedGraph& g, std::string_view origin, int radius) {
  if (radius < 0) throw Error(ErrorCode::InvalidArgument, "negative radius");
  const auto dist = g.distances_from(g.index_of(origin));
  auto inside = [&](std::size_t i) { return dist[i] >= 0 && dist[i] <= radius; };

  GraphSpec spec;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (inside(i)) spec.vertices.push_back({g.id(i), g.measure(i)});
  for (const auto& e : g.edges())
    if (inside(e.a) && inside(e.b)) spec.edges.push_back({g.id(e.a), g.id(e.b), e.w});
  return WeightedGraph::build(spec);
}

void require_domain(const WeightedGraph& g, const VertexFunction& f, std::string_view what) {
  if (f.size() != g.size())
    throw Error(ErrorCode::DomainMismatch, std::string(what) + " has " + std::to_string(f.size()) +
                                               " values, graph has " + std::to_string(g.size()) + " vertices");
}

}  // namespace gnls
