#include "lchord/graph.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "json.hpp"
#include "lchord/error.hpp"

namespace lchord {

EdgeSet::EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool EdgeSet::insert(Edge e) {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) return false;
  edges_.insert(it, e);
  return true;
}

bool EdgeSet::contains(Edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

Graph::Graph(int order)
    : order_(order),
      adj_(static_cast<std::size_t>(order)),
      matrix_(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0) {
  if (order < 0) throw Error(Errc::invalid_argument, "negative graph order");
}

Graph Graph::from_edges(int order, std::span<const Edge> edges, Labels labels) {
  Graph g(order);
  for (const Edge& e : edges) {
    if (e.first < 0 || e.second >= order) {
      throw Error(Errc::vertex_out_of_range,
                  "edge (" + std::to_string(e.first) + ", " +
                      std::to_string(e.second) + ") has an endpoint outside 0.." +
                      std::to_string(order - 1));
    }
    if (e.first == e.second) {
      throw Error(Errc::self_loop, "self-loop at vertex " + std::to_string(e.first));
    }
    auto& cell = g.matrix_[static_cast<std::size_t>(e.first) * order + e.second];
    if (cell) {
      throw Error(Errc::duplicate_edge, "duplicate edge (" + std::to_string(e.first) +
                                            ", " + std::to_string(e.second) + ")");
    }
    cell = 1;
    g.matrix_[static_cast<std::size_t>(e.second) * order + e.first] = 1;
    g.adj_[e.first].push_back(e.second);
    g.adj_[e.second].push_back(e.first);
  }
  for (auto& row : g.adj_) std::sort(row.begin(), row.end());
  g.edge_count_ = edges.size();
  for (const auto& [v, name] : labels) {
    if (v < 0 || v >= order) {
      throw Error(Errc::vertex_out_of_range, "label for unknown vertex " + std::to_string(v));
    }
  }
  g.labels_ = std::move(labels);
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::with_labels(Labels labels) const {
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

std::optional<Vertex> Graph::find_label(std::string_view name) const {
  for (const auto& [v, label] : labels_) {
    if (label == name) return v;
  }
  return std::nullopt;
}

std::string Graph::name(Vertex v) const {
  auto it = labels_.find(v);
  return it == labels_.end() ? std::to_string(v) : it->second;
}

std::optional<GraphFormat> parse_format_name(std::string_view name) {
  if (name == "edgelist") return GraphFormat::edgelist;
  if (name == "json") return GraphFormat::json;
  if (name == "dot") return GraphFormat::dot;
  return std::nullopt;
}

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> split_tokens(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

long long parse_nonnegative(const Token& tok, int line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc() || ptr != tok.text.data() + tok.text.size() || value < 0 ||
      value > (1LL << 30)) {
    throw ParseError(Errc::syntax, line_no, tok.column,
                     "expected a nonnegative integer, found '" + std::string(tok.text) + "'");
  }
  return value;
}

Graph parse_edgelist(std::string_view text) {
  int line_no = 0;
  std::size_t pos = 0;
  bool have_header = false;
  long long order = 0;
  long long expected = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  int last_line = 0;

  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++line_no;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().text.front() == '#') continue;
    last_line = line_no;
    if (tokens.size() != 2) {
      int col = tokens.size() > 2 ? tokens[2].column : static_cast<int>(line.size()) + 1;
      throw ParseError(Errc::syntax, line_no, col,
                       have_header ? "expected 'u v'" : "expected header 'n m'");
    }
    long long a = parse_nonnegative(tokens[0], line_no);
    long long b = parse_nonnegative(tokens[1], line_no);
    if (!have_header) {
      order = a;
      expected = b;
      have_header = true;
      continue;
    }
    if (static_cast<long long>(edges.size()) == expected) {
      throw ParseError(Errc::edge_count_mismatch, line_no, 0,
                       "more edge lines than the declared " + std::to_string(expected));
    }
    if (a >= order || b >= order) {
      const Token& bad = a >= order ? tokens[0] : tokens[1];
      throw ParseError(Errc::vertex_out_of_range, line_no, bad.column,
                       "vertex " + std::string(bad.text) + " >= declared order " +
                           std::to_string(order));
    }
    if (a == b) {
      throw ParseError(Errc::self_loop, line_no, tokens[0].column,
                       "self-loop at vertex " + std::to_string(a));
    }
    Edge e(static_cast<Vertex>(a), static_cast<Vertex>(b));
    if (!seen.insert(e).second) {
      throw ParseError(Errc::duplicate_edge, line_no, tokens[0].column,
                       "duplicate edge " + std::to_string(e.first) + " " + std::to_string(e.second));
    }
    edges.push_back(e);
  }
  if (!have_header) throw ParseError(Errc::syntax, std::max(line_no, 1), 0, "missing header 'n m'");
  if (static_cast<long long>(edges.size()) != expected) {
    throw ParseError(Errc::edge_count_mismatch, last_line, 0,
                     "declared " + std::to_string(expected) + " edges, found " +
                         std::to_string(edges.size()));
  }
  return Graph::from_edges(static_cast<int>(order), edges);
}

std::pair<int, int> line_column_at(std::string_view text, std::size_t byte) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Graph parse_json_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_column_at(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(Errc::syntax, line, col, "malformed JSON");
  }
  auto schema = [](const std::string& what) { return ParseError(Errc::syntax, 1, 0, what); };
  if (!doc.is_object()) throw schema("graph JSON must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<long long>() < 0) {
    throw schema("field 'n' must be a nonnegative integer");
  }
  const int order = doc["n"].get<int>();
  if (!doc.contains("edges") || !doc["edges"].is_array()) throw schema("field 'edges' must be an array");

  std::vector<Edge> edges;
  std::set<Edge> seen;
  int index = 0;
  for (const auto& item : doc["edges"]) {
    ++index;
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer()) {
      throw schema("edge #" + std::to_string(index) + " must be a pair of integers");
    }
    long long a = item[0].get<long long>();
    long long b = item[1].get<long long>();
    if (a < 0 || b < 0 || a >= order || b >= order) {
      throw ParseError(Errc::vertex_out_of_range, 1, 0,
                       "edge #" + std::to_string(index) + " has an endpoint outside 0.." +
                           std::to_string(order - 1));
    }
    if (a == b) {
      throw ParseError(Errc::self_loop, 1, 0, "self-loop at vertex " + std::to_string(a));
    }
    Edge e(static_cast<Vertex>(a), static_cast<Vertex>(b));
    if (!seen.insert(e).second) {
      throw ParseError(Errc::duplicate_edge, 1, 0,
                       "duplicate edge " + std::to_string(e.first) + " " + std::to_string(e.second));
    }
    edges.push_back(e);
  }

  Labels labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_object()) throw schema("field 'labels' must be an object");
    for (const auto& [key, value] : doc["labels"].items()) {
      int id = -1;
      auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), id);
      if (ec != std::errc() || ptr != key.data() + key.size() || !value.is_string()) {
        throw schema("labels must map decimal ids to strings");
      }
      if (id < 0 || id >= order) {
        throw ParseError(Errc::vertex_out_of_range, 1, 0, "label for unknown vertex " + key);
      }
      labels[id] = value.get<std::string>();
    }
  }
  return Graph::from_edges(order, edges, std::move(labels));
}

std::string dot_name(const Graph& g, Vertex v) {
  std::string out = "\"";
  for (char c : g.name(v)) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::edgelist: return parse_edgelist(text);
    case GraphFormat::json: return parse_json_graph(text);
    case GraphFormat::dot: break;
  }
  throw Error(Errc::invalid_argument, "the dot format is export-only");
}

std::string serialize(const Graph& g, GraphFormat format) {
  const auto edges = g.edges();
  switch (format) {
    case GraphFormat::edgelist: {
      std::string out = std::to_string(g.order()) + " " + std::to_string(edges.size());
      for (const Edge& e : edges) {
        out += '\n';
        out += std::to_string(e.first);
        out += ' ';
        out += std::to_string(e.second);
      }
      return out;
    }
    case GraphFormat::json: {
      nlohmann::ordered_json doc;
      doc["n"] = g.order();
      auto arr = nlohmann::ordered_json::array();
      for (const Edge& e : edges) arr.push_back({e.first, e.second});
      doc["edges"] = std::move(arr);
      if (!g.labels().empty()) {
        nlohmann::ordered_json labels = nlohmann::ordered_json::object();
        for (const auto& [v, name] : g.labels()) labels[std::to_string(v)] = name;
        doc["labels"] = std::move(labels);
      }
      return doc.dump();
    }
    case GraphFormat::dot: {
      std::ostringstream out;
      out << "graph {\n";
      for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 0) out << "  " << dot_name(g, v) << ";\n";
      }
      for (const Edge& e : edges) {
        out << "  " << dot_name(g, e.first) << " -- " << dot_name(g, e.second) << ";\n";
      }
      out << "}\n";
      return out.str();
    }
  }
  return {};
}

std::vector<Vertex> sorted_unique(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  if (keep.empty()) throw Error(Errc::empty_set, "induced subgraph of an empty vertex set");
  std::vector<Vertex> kept = sorted_unique({keep.begin(), keep.end()});
  for (Vertex v : kept) {
    if (!g.contains(v)) throw Error(Errc::unknown_vertex, "unknown vertex " + std::to_string(v));
  }
  InducedSubgraph out;
  out.new_to_old = kept;
  for (std::size_t i = 0; i < kept.size(); ++i) out.old_to_new[kept[i]] = static_cast<Vertex>(i);

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (Vertex w : g.neighbors(kept[i])) {
      auto it = out.old_to_new.find(w);
      if (it != out.old_to_new.end() && static_cast<Vertex>(i) < it->second) {
        edges.emplace_back(static_cast<Vertex>(i), it->second);
      }
    }
  }
  Labels labels;
  for (const auto& [v, name] : g.labels()) {
    auto it = out.old_to_new.find(v);
    if (it != out.old_to_new.end()) labels[it->second] = name;
  }
  out.graph = Graph::from_edges(static_cast<int>(kept.size()), edges, std::move(labels));
  return out;
}

Graph apply_edits(const Graph& g, const EdgeSet& add, std::span<const Vertex> delete_vertices) {
  std::vector<char> deleted(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : delete_vertices) {
    if (!g.contains(v)) throw Error(Errc::unknown_vertex, "cannot delete unknown vertex " + std::to_string(v));
    deleted[v] = 1;
  }
  for (const Edge& e : add) {
    if (e.first == e.second) {
      throw Error(Errc::self_loop, "cannot add a loop at vertex " + std::to_string(e.first));
    }
    if (!g.contains(e.first) || !g.contains(e.second)) {
      throw Error(Errc::unknown_vertex, "added edge touches an unknown vertex");
    }
    if (g.adjacent(e.first, e.second)) {
      throw Error(Errc::existing_edge, "edge (" + std::to_string(e.first) + ", " +
                                           std::to_string(e.second) + ") already present");
    }
    if (deleted[e.first] || deleted[e.second]) {
      throw Error(Errc::invalid_argument, "added edge touches a deleted vertex");
    }
  }

  std::vector<Vertex> remap(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!deleted[v]) remap[v] = next++;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (!deleted[e.first] && !deleted[e.second]) edges.emplace_back(remap[e.first], remap[e.second]);
  }
  for (const Edge& e : add) edges.emplace_back(remap[e.first], remap[e.second]);
  Labels labels;
  for (const auto& [v, name] : g.labels()) {
    if (!deleted[v]) labels[remap[v]] = name;
  }
  return Graph::from_edges(next, edges, std::move(labels));
}

Graph with_edges(const Graph& g, std::span<const Edge> extra) {
  EdgeSet all(g.edges());
  for (const Edge& e : extra) all.insert(e);
  return Graph::from_edges(g.order(), all.edges(), g.labels());
}

Graph without_edges(const Graph& g, std::span<const Edge> removed) {
  EdgeSet drop(std::vector<Edge>(removed.begin(), removed.end()));
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (!drop.contains(e)) kept.push_back(e);
  }
  return Graph::from_edges(g.order(), kept, g.labels());
}

Graph isolate_vertices(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<char> drop(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : vertices) drop[v] = 1;
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (!drop[e.first] && !drop[e.second]) kept.push_back(e);
  }
  return Graph::from_edges(g.order(), kept, g.labels());
}

bool is_spanning_subgraph(const Graph& sub, const Graph& super) {
  if (sub.order() != super.order()) return false;
  for (const Edge& e : sub.edges()) {
    if (!super.adjacent(e.first, e.second)) return false;
  }
  return true;
}

}  // namespace lchord
