#include "gnls/graph_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace gnls {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ConfigParse, where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) bad(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(where, std::string("missing \"") + key + "\"");
  return *it;
}

double number(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_number()) bad(where + "." + key, "expected a number");
  return v.get<double>();
}

std::string text(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) bad(where + "." + key, "expected a string");
  return v.get<std::string>();
}

const json& array(const json& doc, const char* key) {
  const json& v = field(doc, key, "graph");
  if (!v.is_array()) bad(key, "expected a list");
  return v;
}

}  // namespace

LoadedGraph parse_graph(std::string_view input) {
  json doc;
  try {
    doc = json::parse(input);
  } catch (const json::parse_error& e) {
    bad("graph", e.what());
  }

  GraphSpec spec;
  std::vector<double> h;
  const json& vertices = array(doc, "vertices");
  const json& edges = array(doc, "edges");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    spec.vertices.push_back({text(vertices[i], "id", where), number(vertices[i], "mu", where)});
    if (vertices[i].contains("h")) {
      if (h.size() != i) bad(where, "\"h\" must be given for all vertices or none");
      h.push_back(number(vertices[i], "h", where));
    } else if (!h.empty()) {
      bad(where, "\"h\" must be given for all vertices or none");
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    spec.edges.push_back({text(edges[i], "u", where), text(edges[i], "v", where), number(edges[i], "w", where)});
  }

  LoadedGraph out{WeightedGraph::build(spec), std::nullopt};
  if (!h.empty()) out.h = VertexFunction(std::move(h));
  return out;
}

LoadedGraph load_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::FileIO, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string serialize_graph(const WeightedGraph& g, const VertexFunction* h) {
  if (h) require_domain(g, *h, "potential h");
  json vertices = json::array();
  for (std::size_t x = 0; x < g.size(); ++x) {
    json v = {{"id", g.id(x)}, {"mu", g.measure(x)}};
    if (h) v["h"] = (*h)[x];
    vertices.push_back(std::move(v));
  }
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({{"u", g.id(e.a)}, {"v", g.id(e.b)}, {"w", e.w}});
  return json{{"vertices", vertices}, {"edges", edges}}.dump(2) + "\n";
}

void save_graph_file(const std::filesystem::path& path, const WeightedGraph& g, const VertexFunction* h) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::FileIO, "cannot write " + path.string());
  out << serialize_graph(g, h);
  if (!out) throw Error(ErrorCode::FileIO, "write failed for " + path.string());
}

}  // namespace gnls
