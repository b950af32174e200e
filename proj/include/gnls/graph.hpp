#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gnls/error.hpp"

namespace gnls {

/// Description of one vertex for `WeightedGraph::build`.
struct VertexSpec {
  std::string id;
  double mu = 1.0;
};

/// Undirected edge; listed once, symmetrized by the builder.
struct EdgeSpec {
  std::string u;
  std::string v;
  double w = 1.0;
};

struct GraphSpec {
  std::vector<VertexSpec> vertices;
  std::vector<EdgeSpec> edges;
};

struct Neighbor {
  std::size_t index;
  double weight;
};

struct Edge {
  std::size_t a;
  std::size_t b;
  double w;
};

/// Finite weighted graph with a positive vertex measure.
///
/// Immutable once built. Vertex order is insertion order and fixes the layout
/// of every `VertexFunction` defined on the graph. Disconnected graphs can be
/// built (the flag is queryable) but the solvers reject them.
class WeightedGraph {
 public:
  static WeightedGraph build(const GraphSpec& spec);

  std::size_t size() const noexcept { return ids_.size(); }
  const std::string& id(std::size_t i) const { return ids_.at(i); }
  std::span<const std::string> ids() const noexcept { return ids_; }

  std::optional<std::size_t> find(std::string_view id) const;
  /// Throws UnknownVertex.
  std::size_t index_of(std::string_view id) const;

  double measure(std::size_t i) const { return mu_.at(i); }
  std::span<const double> measures() const noexcept { return mu_; }

  std::span<const Neighbor> neighbors(std::size_t i) const {
    return {adjacency_.data() + offsets_.at(i), adjacency_.data() + offsets_.at(i + 1)};
  }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Sum of incident edge weights.
  double degree(std::size_t i) const { return degree_.at(i); }
  bool connected() const noexcept { return connected_; }

  /// |V| = sum of the measure over all vertices.
  double volume() const noexcept { return volume_; }
  double min_measure() const noexcept { return min_mu_; }

  /// Hop-count distance from `origin`; -1 for unreachable vertices.
  std::vector<int> distances_from(std::size_t origin) const;

  /// Spec that rebuilds an identical graph.
  GraphSpec to_spec() const;

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<double> mu_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
  std::vector<double> degree_;
  double volume_ = 0.0;
  double min_mu_ = 0.0;
  bool connected_ = false;
};

double degree(const WeightedGraph& g, std::string_view x);

/// Induced subgraph on {x : rho(x) <= radius}, rho = hop distance to `origin`.
/// Vertices keep their relative order from `g`.
WeightedGraph ball_subgraph(const WeightedGraph& g, std::string_view origin, int radius);

/// Real value per vertex, laid out in the vertex order of one graph.
class VertexFunction {
 public:
  VertexFunction() = default;
  explicit VertexFunction(std::vector<double> values) : values_(std::move(values)) {}
  VertexFunction(std::initializer_list<double> values) : values_(values) {}
  VertexFunction(std::size_t n, double value) : values_(n, value) {}

  static VertexFunction zeros(const WeightedGraph& g) { return VertexFunction(g.size(), 0.0); }
  static VertexFunction constant(const WeightedGraph& g, double c) { return VertexFunction(g.size(), c); }

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }

  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }
  const std::vector<double>& vector() const noexcept { return values_; }

  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }
  auto begin() noexcept { return values_.begin(); }
  auto end() noexcept { return values_.end(); }

  friend bool operator==(const VertexFunction&, const VertexFunction&) = default;

 private:
  std::vector<double> values_;
};

/// Throws DomainMismatch unless `f` has one value per vertex of `g`.
void require_domain(const WeightedGraph& g, const VertexFunction& f, std::string_view what = "function");

}  // namespace gnls
