#include "lchord/json_io.hpp"

#include <charconv>

namespace lchord {

namespace {

Json vertex_array(std::span<const Vertex> vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(v);
  return out;
}

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }
Json optional_ll(const std::optional<long long>& v) { return v ? Json(*v) : Json(nullptr); }

Json witness_json(const NcWitness& w) {
  Json out;
  out["through"] = to_json(w.through);
  out["avoiding"] = to_json(w.avoiding);
  out["pivot"] = w.pivot;
  out["wedge"] = Json::array({w.left, w.right});
  return out;
}

nlohmann::json parse_text(std::string_view text, const char* what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(Errc::syntax, 1, static_cast<int>(e.byte), std::string(what) + ": malformed JSON");
  }
}

std::vector<Vertex> vertex_tokens(const Graph& g, const nlohmann::json& arr, const char* what) {
  if (!arr.is_array()) throw Error(Errc::invalid_argument, std::string(what) + " must be a JSON array");
  std::vector<Vertex> out;
  for (const auto& t : arr) out.push_back(resolve_vertex(g, t));
  return out;
}

}  // namespace

Json to_json(const Graph& g) { return Json::parse(serialize(g, GraphFormat::json)); }

Json to_json(const Hole& h) { return vertex_array(h.cycle()); }

Json to_json(const HoleSet& hs) {
  Json out = Json::array();
  for (const Hole& h : hs.holes()) out.push_back(to_json(h));
  return out;
}

Json to_json(const HoleComponents& c) {
  Json out;
  out["omega"] = vertex_array(c.omega);
  Json classes = Json::array();
  for (const auto& cls : c.classes) classes.push_back(vertex_array(cls));
  out["classes"] = std::move(classes);
  return out;
}

Json to_json(const Partition& p) {
  Json out = Json::array();
  for (const auto& part : p.parts()) out.push_back(vertex_array(part));
  return out;
}

Json to_json(const EdgeSet& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back(Json::array({e.first, e.second}));
  return out;
}

Json to_json(const ChainTrace& trace) {
  Json out;
  out["cover"] = vertex_array(trace.partition.cover());
  out["parts"] = to_json(trace.partition);
  out["base_vertices"] = vertex_array(trace.base_vertices);
  out["base"] = serialize(trace.base, GraphFormat::edgelist);
  Json stages = Json::array();
  for (const StageRecord& s : trace.stages) {
    Json js;
    js["index"] = s.index;
    js["cover_part"] = vertex_array(s.cover_part);
    js["vertices"] = vertex_array(s.vertices);
    js["graph"] = serialize(s.graph, GraphFormat::edgelist);
    js["graph_star"] = serialize(s.graph_star, GraphFormat::edgelist);
    js["added"] = to_json(s.added);
    stages.push_back(std::move(js));
  }
  out["stages"] = std::move(stages);
  out["fill"] = to_json(trace.fill);
  out["final"] = to_json(trace.final_graph);
  return out;
}

Json to_json(const IndexResult& r) {
  Json out;
  out["value"] = r.value;
  out["exact"] = r.exact;
  out["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  Json stats;
  stats["nodes"] = r.stats.nodes;
  stats["budget_exhausted"] = r.stats.budget_exhausted;
  stats["components"] = r.stats.components;
  stats["component_values"] = r.stats.component_values;
  out["stats"] = std::move(stats);
  return out;
}

Json to_json(const AnalysisReport& r) {
  Json out;
  out["order"] = r.order;
  out["size"] = r.size;
  out["omega"] = r.omega;
  out["omega_region"] = optional_int(r.omega_region);
  out["index"] = to_json(r.index);
  out["omega_star"] = optional_int(r.omega_star);
  out["chromatic"] = optional_int(r.chromatic);
  out["dp_tiny"] = r.dp_tiny ? Json(*r.dp_tiny) : (r.dp_tiny_exceeds ? Json(">3") : Json(nullptr));
  out["degeneracy"] = r.degeneracy;
  out["alpha"] = optional_int(r.alpha);
  out["beta"] = optional_int(r.beta);
  out["list_bound"] = r.list_bound;
  out["dp_bound"] = r.dp_bound;
  out["join"] = r.join ? Json::array({r.join->first, r.join->second}) : Json(nullptr);
  out["join_found"] = r.join_found ? Json(*r.join_found) : Json(nullptr);
  Json ledger = Json::array();
  for (const LedgerRow& row : r.ledger) {
    Json jr;
    jr["id"] = row.id;
    jr["relation"] = row.lhs_name + " " + row.op + " " + row.rhs_name;
    jr["lhs"] = optional_ll(row.lhs);
    jr["rhs"] = optional_ll(row.rhs);
    jr["status"] = row_status_name(row.status);
    if (!row.note.empty()) jr["note"] = row.note;
    ledger.push_back(std::move(jr));
  }
  out["ledger"] = std::move(ledger);
  out["any_fail"] = r.any_fail();
  return out;
}

Json to_json(const EflCertificate& c) {
  Json out;
  out["status"] = c.certified == Tri::yes ? "pass" : (c.certified == Tri::no ? "fail" : "indeterminate");
  out["k"] = c.k;
  out["omega"] = c.omega;
  out["chordal"] = c.chordal;
  out["simplicial"] = vertex_array(c.simplicial);
  out["index_bound"] = optional_int(c.index_bound);
  out["nc_cover"] = vertex_array(c.nc_cover);
  out["coloring"] = c.coloring;
  out["colors_used"] = c.colors_used;
  if (!c.note.empty()) out["note"] = c.note;
  return out;
}

Json to_json(const SetNc& nc) {
  Json out;
  out["ok"] = nc.ok;
  out["failing_vertex"] = nc.failing_vertex ? Json(*nc.failing_vertex) : Json(nullptr);
  out["witness"] = nc.witness ? witness_json(*nc.witness) : Json(nullptr);
  out["crowded_hole"] = nc.crowded_hole ? to_json(*nc.crowded_hole) : Json(nullptr);
  out["crowded_pair"] =
      nc.crowded_pair ? Json::array({nc.crowded_pair->first, nc.crowded_pair->second}) : Json(nullptr);
  return out;
}

Vertex resolve_vertex(const Graph& g, const nlohmann::json& token) {
  if (token.is_number_integer()) {
    const auto v = token.get<long long>();
    if (v < 0 || v >= g.order()) throw Error(Errc::unknown_vertex, "vertex " + std::to_string(v) + " is out of range");
    return static_cast<Vertex>(v);
  }
  if (!token.is_string()) throw Error(Errc::unknown_vertex, "vertex tokens must be labels or integer ids");
  const auto name = token.get<std::string>();
  if (auto v = g.find_label(name)) return *v;
  int id = -1;
  const auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), id);
  if (ec == std::errc() && ptr == name.data() + name.size() && g.contains(id)) return id;
  throw Error(Errc::unknown_vertex, "unknown vertex '" + name + "'");
}

Partition parse_partition(const Graph& g, std::string_view json_text) {
  const nlohmann::json j = parse_text(json_text, "partition");
  if (!j.is_array()) throw Error(Errc::invalid_partition, "partition must be an array of arrays");
  std::vector<std::vector<Vertex>> parts;
  for (const auto& part : j) parts.push_back(vertex_tokens(g, part, "partition part"));
  return Partition(std::move(parts));
}

std::vector<Vertex> parse_vertex_list(const Graph& g, std::string_view json_text) {
  return vertex_tokens(g, parse_text(json_text, "vertex list"), "vertex list");
}

ListAssignment parse_list_assignment(const Graph& g, std::string_view json_text) {
  const nlohmann::json j = parse_text(json_text, "list assignment");
  if (!j.is_object() || !j.contains("lists") || !j["lists"].is_object()) {
    throw Error(Errc::invalid_argument, "list assignment needs an object field 'lists'");
  }
  ListAssignment out;
  out.lists.resize(static_cast<std::size_t>(g.order()));
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (const auto& [key, colors] : j["lists"].items()) {
    const Vertex v = resolve_vertex(g, nlohmann::json(key));
    if (!colors.is_array()) throw Error(Errc::invalid_argument, "list for '" + key + "' must be an array");
    for (const auto& c : colors) {
      if (!c.is_number_integer()) throw Error(Errc::invalid_argument, "colors must be integers");
      out.lists[v].push_back(c.get<int>());
    }
    seen[v] = 1;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!seen[v]) throw Error(Errc::invalid_argument, "vertex " + g.name(v) + " has no list");
  }
  return out;
}

Correspondence parse_correspondence(const Graph& g, std::string_view json_text) {
  const nlohmann::json j = parse_text(json_text, "correspondence cover");
  if (!j.is_object() || !j.contains("k") || !j["k"].is_number_integer() || !j.contains("edges") ||
      !j["edges"].is_object()) {
    throw Error(Errc::malformed_cover, "cover needs integer 'k' and object 'edges'");
  }
  Correspondence out;
  out.k = j["k"].get<int>();
  for (const auto& [key, pairs] : j["edges"].items()) {
    const std::size_t dash = key.find('-');
    if (dash == std::string::npos) throw Error(Errc::malformed_cover, "edge key '" + key + "' is not 'u-v'");
    Vertex a = resolve_vertex(g, nlohmann::json(key.substr(0, dash)));
    Vertex b = resolve_vertex(g, nlohmann::json(key.substr(dash + 1)));
    if (!pairs.is_array()) throw Error(Errc::malformed_cover, "matching for '" + key + "' must be an array");
    std::vector<std::pair<int, int>> matching;
    for (const auto& p : pairs) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
        throw Error(Errc::malformed_cover, "matching entries must be [color_u, color_v]");
      }
      int cu = p[0].get<int>();
      int cv = p[1].get<int>();
      // Stored oriented from the smaller endpoint.
      if (a > b) std::swap(cu, cv);
      matching.emplace_back(cu, cv);
    }
    if (!out.matchings.emplace(Edge(a, b), std::move(matching)).second) {
      throw Error(Errc::malformed_cover, "edge '" + key + "' listed twice");
    }
  }
  validate_cover(g, out);
  return out;
}

}  // namespace lchord
