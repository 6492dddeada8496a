#include "transversals/instance_io.hpp"

#include <fstream>
#include <limits>
#include <set>

#include "transversals/errors.hpp"

namespace transversals {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::parse_error, what); }

Edge parse_edge(const nlohmann::json& j, int n) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    fail("edge must be a pair of integers, got " + j.dump());
  }
  const auto a = j[0].get<std::int64_t>();
  const auto b = j[1].get<std::int64_t>();
  if (a < 0 || b < 0 || a >= n || b >= n) fail("edge " + j.dump() + " has a vertex outside [0, " + std::to_string(n) + ")");
  return Edge::of(static_cast<Vertex>(a), static_cast<Vertex>(b));
}

std::vector<Edge> parse_edges(const nlohmann::json& j, int n, const char* field) {
  if (!j.is_array()) fail(std::string(field) + " must be a list of edges");
  std::vector<Edge> out;
  for (const auto& e : j) out.push_back(parse_edge(e, n));
  return out;
}

nlohmann::json edges_json(const std::vector<Edge>& edges) {
  nlohmann::json out = nlohmann::json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

}  // namespace

nlohmann::json transversal_to_json(const Transversal& t) {
  const Transversal c = t.canonical();
  nlohmann::json edges = nlohmann::json::array();
  nlohmann::json colors = nlohmann::json::array();
  for (const auto& [e, col] : c.edges) {
    edges.push_back({e.u, e.v});
    colors.push_back(col);
  }
  return {{"edges", edges}, {"colors", colors}};
}

Transversal transversal_from_json(const nlohmann::json& j, TransversalKind kind) {
  if (!j.is_object() || !j.contains("edges") || !j.contains("colors")) fail("transversal needs edges and colors");
  const auto& edges = j["edges"];
  const auto& colors = j["colors"];
  if (!edges.is_array() || !colors.is_array() || edges.size() != colors.size()) {
    fail("transversal edges and colors must be lists of equal length");
  }
  Transversal t;
  t.kind = kind;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (!colors[k].is_number_integer()) fail("colors must be integers");
    t.edges.push_back({parse_edge(edges[k], std::numeric_limits<int>::max()), colors[k].get<Color>()});
  }
  return t.canonical();
}

InstanceFile instance_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail("instance must be a JSON object");
  for (const char* key : {"kind", "num_vertices", "subgraphs"}) {
    if (!j.contains(key)) fail(std::string("missing field '") + key + "'");
  }
  if (!j["kind"].is_string()) fail("kind must be a string");
  const std::string kind = j["kind"].get<std::string>();
  FamilyKind fk;
  if (kind == "hamiltonian") {
    fk = FamilyKind::hamiltonian;
  } else if (kind == "perfect_matching") {
    fk = FamilyKind::matching;
  } else {
    fail("unknown kind '" + kind + "'");
  }
  if (!j["num_vertices"].is_number_integer() || j["num_vertices"].get<std::int64_t>() < 0 ||
      j["num_vertices"].get<std::int64_t>() > 1'000'000) {
    fail("num_vertices must be a non-negative integer");
  }
  const int n = j["num_vertices"].get<int>();
  if (!j["subgraphs"].is_array()) fail("subgraphs must be a list");
  std::vector<Edge> all;
  if (j.contains("base_edges")) all = parse_edges(j["base_edges"], n, "base_edges");

  InstanceFile out;
  out.family.kind = fk;
  for (const auto& sg : j["subgraphs"]) {
    if (sg.is_number_integer()) {
      const auto ref = sg.get<std::int64_t>();
      if (ref < 0 || ref >= out.family.num_colors()) fail("subgraph reference " + sg.dump() + " must name an earlier subgraph");
      out.family.subgraphs.push_back(out.family.subgraphs[static_cast<std::size_t>(ref)]);
      continue;
    }
    auto edges = parse_edges(sg, n, "subgraph");
    all.insert(all.end(), edges.begin(), edges.end());
    out.family.subgraphs.push_back(std::make_shared<const Graph>(n, edges));
  }
  out.family.base = Graph(n, all);
  if (auto rep = validate_family(out.family); !rep.ok()) fail("invalid family: " + rep.summary());

  if (j.contains("planted") && !j["planted"].is_null()) {
    const auto tk = fk == FamilyKind::hamiltonian ? TransversalKind::cycle : TransversalKind::matching;
    Transversal t = transversal_from_json(j["planted"], tk);
    for (const auto& ce : t.edges) {
      if (ce.edge.v >= n) fail("planted edge has a vertex out of range");
    }
    if (auto rep = validate_transversal(out.family, t); !rep.ok()) {
      throw Error(ErrorCode::invalid_transversal, "planted transversal: " + rep.summary());
    }
    out.planted = std::move(t);
  }
  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) fail("metadata must be an object");
    for (const auto& [k, v] : j["metadata"].items()) {
      out.metadata[k] = v.is_string() ? v.get<std::string>() : v.dump();
    }
  }
  return out;
}

nlohmann::json instance_to_json(const InstanceFile& inst) {
  const auto& f = inst.family;
  nlohmann::json j;
  j["kind"] = f.kind == FamilyKind::hamiltonian ? "hamiltonian" : "perfect_matching";
  j["num_vertices"] = f.num_vertices();
  nlohmann::json subs = nlohmann::json::array();
  std::set<Edge> covered;
  std::map<const Graph*, Color> first_use;
  for (Color c = 0; c < f.num_colors(); ++c) {
    const Graph* g = f.subgraphs[static_cast<std::size_t>(c)].get();
    if (auto it = first_use.find(g); it != first_use.end()) {
      subs.push_back(it->second);
      continue;
    }
    first_use.emplace(g, c);
    const auto edges = g->edges();
    covered.insert(edges.begin(), edges.end());
    subs.push_back(edges_json(edges));
  }
  j["subgraphs"] = subs;
  std::vector<Edge> extra;
  for (const Edge& e : f.base.edges()) {
    if (!covered.count(e)) extra.push_back(e);
  }
  if (!extra.empty()) j["base_edges"] = edges_json(extra);
  if (inst.planted) j["planted"] = transversal_to_json(*inst.planted);
  if (!inst.metadata.empty()) j["metadata"] = inst.metadata;
  return j;
}

InstanceFile read_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(path.string() + ": " + e.what());
  }
  return instance_from_json(j);
}

void write_instance_file(const std::filesystem::path& path, const InstanceFile& inst) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::parse_error, "cannot write " + path.string());
  out << instance_to_json(inst).dump(1) << '\n';
}

}  // namespace transversals
