#include "gnls/generator.hpp"

#include <cmath>
#include <cstdlib>
#include <deque>
#include <map>
#include <unordered_map>

namespace gnls {

double PowerPotential::operator()(int rho) const {
  if (rho == 0) return a;
  return a + b * std::pow(static_cast<double>(rho), gamma);
}

void PowerPotential::validate() const {
  if (!(a > 0.0) || !(b >= 0.0) || !(gamma >= 1.0))
    throw Error(ErrorCode::InvalidArgument, "potential a+b*rho^g needs a > 0, b >= 0, g >= 1");
}

namespace {

std::string coord_id(long x) { return std::to_string(x); }
std::string coord_id(long x, long y) { return std::to_string(x) + "," + std::to_string(y); }

long parse_long(const std::string& s, std::size_t& pos) {
  char* end = nullptr;
  const long v = std::strtol(s.c_str() + pos, &end, 10);
  if (end == s.c_str() + pos) throw Error(ErrorCode::UnknownVertex, "'" + s + "' is not a lattice vertex");
  pos = static_cast<std::size_t>(end - s.c_str());
  return v;
}

}  // namespace

VertexGenerator lattice_1d(PowerPotential h) {
  h.validate();
  return [h](const std::string& id) {
    std::size_t pos = 0;
    const long x = parse_long(id, pos);
    if (pos != id.size()) throw Error(ErrorCode::UnknownVertex, "'" + id + "' is not a 1-D lattice vertex");
    GeneratedVertex v;
    v.mu = 1.0;
    v.h = h(static_cast<int>(std::labs(x)));
    v.neighbors = {{coord_id(x + 1), 1.0}, {coord_id(x - 1), 1.0}};
    return v;
  };
}

VertexGenerator lattice_2d(PowerPotential h) {
  h.validate();
  return [h](const std::string& id) {
    std::size_t pos = 0;
    const long x = parse_long(id, pos);
    if (pos >= id.size() || id[pos] != ',') throw Error(ErrorCode::UnknownVertex, "'" + id + "' is not a 2-D lattice vertex");
    ++pos;
    const long y = parse_long(id, pos);
    if (pos != id.size()) throw Error(ErrorCode::UnknownVertex, "'" + id + "' is not a 2-D lattice vertex");
    GeneratedVertex v;
    v.mu = 1.0;
    v.h = h(static_cast<int>(std::labs(x) + std::labs(y)));
    v.neighbors = {{coord_id(x + 1, y), 1.0}, {coord_id(x - 1, y), 1.0},
                   {coord_id(x, y + 1), 1.0}, {coord_id(x, y - 1), 1.0}};
    return v;
  };
}

Truncation ball_from_generator(const VertexGenerator& gen, const std::string& origin, int radius) {
  if (radius < 0) throw Error(ErrorCode::InvalidArgument, "negative radius");

  std::vector<std::string> order;
  std::vector<GeneratedVertex> data;
  std::vector<int> rho;
  std::unordered_map<std::string, std::size_t> index;

  auto visit = [&](const std::string& id, int d) {
    index.emplace(id, order.size());
    order.push_back(id);
    data.push_back(gen(id));
    rho.push_back(d);
  };
  visit(origin, 0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    if (rho[head] == radius) continue;
    const auto nbs = data[head].neighbors;
    for (const auto& [id, w] : nbs)
      if (!index.count(id)) visit(id, rho[head] + 1);
  }

  GraphSpec spec;
  VertexFunction h(order.size(), 0.0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    spec.vertices.push_back({order[i], data[i].mu});
    h[i] = data[i].h;
  }
  // Each edge is emitted once, from its endpoint with the smaller index, after
  // checking the generator reports the same weight from both sides.
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& [id, w] : data[i].neighbors) {
      auto it = index.find(id);
      if (it == index.end() || it->second <= i) continue;
      const std::size_t j = it->second;
      bool symmetric = false;
      for (const auto& [back, wb] : data[j].neighbors)
        if (back == order[i]) symmetric = (wb == w);
      if (!symmetric)
        throw Error(ErrorCode::AsymmetricWeight, "generator edge (" + order[i] + "," + id + ") is not symmetric");
      spec.edges.push_back({order[i], id, w});
    }
  }
  return {WeightedGraph::build(spec), std::move(h), std::move(rho), origin, radius};
}

}  // namespace gnls
