#include "lchord/generators.hpp"

#include <cmath>
#include <cctype>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "lchord/error.hpp"

namespace lchord {

namespace detail {
extern const std::string_view kFig1Json;
extern const std::string_view kFig5Json;
}  // namespace detail

namespace {

[[noreturn]] void bad(const std::string& kind, const std::string& what) {
  throw Error(Errc::invalid_argument, kind + ": " + what);
}

void need_nonnegative(const std::string& kind, int n) {
  if (n < 0) bad(kind, "size must be nonnegative");
}

}  // namespace

Graph cycle_graph(int n) {
  if (n < 3) bad("cycle", "length must be at least 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
  need_nonnegative("complete", n);
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  return Graph::from_edges(n, edges);
}

Graph empty_graph(int n) {
  need_nonnegative("empty", n);
  return Graph(n);
}

Graph complete_multipartite(std::span<const int> sizes) {
  std::vector<int> part;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    need_nonnegative("complete_multipartite", sizes[i]);
    part.insert(part.end(), static_cast<std::size_t>(sizes[i]), static_cast<int>(i));
  }
  const int n = static_cast<int>(part.size());
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (part[a] != part[b]) edges.emplace_back(a, b);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph paper_fig1() { return parse_graph(detail::kFig1Json, GraphFormat::json); }
Graph paper_fig5() { return parse_graph(detail::kFig5Json, GraphFormat::json); }

Graph sharpness_instance(std::span<const int> m_list) {
  if (m_list.empty()) bad("sharpness", "s = |m_list| must be at least 1");
  long long t = 0;
  for (int m : m_list) {
    if (m < 0) bad("sharpness", "m_i must be nonnegative");
    t += m;
  }
  const long long base = static_cast<long long>(m_list.size()) + t;
  long long big = 1;
  for (long long i = 0; i < base; ++i) {
    big *= base;
    if (big > 100'000) bad("sharpness", "(s+t)^(s+t) exceeds the 100000-vertex limit");
  }
  std::vector<int> sizes;
  for (int m : m_list) sizes.push_back(1 + m);
  sizes.push_back(static_cast<int>(big));
  return complete_multipartite(sizes);
}

EflInstance efl_near_pencil(int k) {
  if (k < 1) bad("efl_near_pencil", "k must be at least 1");
  EflInstance out;
  const int n = 1 + k * (k - 1);
  std::vector<Edge> edges;
  for (int j = 0; j < k; ++j) {
    std::vector<Vertex> clique{0};
    for (int i = 0; i < k - 1; ++i) clique.push_back(1 + j * (k - 1) + i);
    for (std::size_t a = 0; a < clique.size(); ++a) {
      for (std::size_t b = a + 1; b < clique.size(); ++b) edges.emplace_back(clique[a], clique[b]);
    }
    out.cliques.push_back(std::move(clique));
  }
  out.graph = Graph::from_edges(n, edges);
  return out;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  need_nonnegative("random", n);
  if (!(p >= 0.0 && p <= 1.0)) bad("random", "p must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p) edges.emplace_back(a, b);
    }
  }
  return Graph::from_edges(n, edges);
}

namespace {

Graph combine(const Graph& a, const Graph& b, bool connect) {
  const int offset = a.order();
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.emplace_back(e.first + offset, e.second + offset);
  if (connect) {
    for (Vertex x = 0; x < a.order(); ++x) {
      for (Vertex y = 0; y < b.order(); ++y) edges.emplace_back(x, y + offset);
    }
  }
  Labels labels = a.labels();
  std::set<std::string> taken;
  for (const auto& [v, name] : labels) taken.insert(name);
  for (const auto& [v, name] : b.labels()) {
    std::string fresh = name;
    while (taken.count(fresh)) fresh += '\'';
    taken.insert(fresh);
    labels[v + offset] = fresh;
  }
  return Graph::from_edges(a.order() + b.order(), edges, std::move(labels));
}

int int_param(const GeneratorSpec& spec, std::size_t i, const char* name) {
  if (i >= spec.params.size()) bad(spec.kind, std::string("missing parameter ") + name);
  const double v = spec.params[i];
  if (v != std::floor(v) || std::abs(v) > 1e9) bad(spec.kind, std::string(name) + " must be an integer");
  return static_cast<int>(v);
}

void arity(const GeneratorSpec& spec, std::size_t lo, std::size_t hi) {
  if (spec.params.size() < lo || spec.params.size() > hi) {
    bad(spec.kind, "expected " + std::to_string(lo) + (lo == hi ? "" : ".." + std::to_string(hi)) +
                       " parameters, got " + std::to_string(spec.params.size()));
  }
  if (!spec.operands.empty()) bad(spec.kind, "takes no operand graphs");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

GeneratorSpec from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw Error(Errc::invalid_argument, "generator spec needs a string field 'kind'");
  }
  GeneratorSpec spec;
  spec.kind = j["kind"].get<std::string>();
  if (j.contains("params")) {
    for (const auto& p : j["params"]) {
      if (!p.is_number()) bad(spec.kind, "params must be numbers");
      spec.params.push_back(p.get<double>());
    }
  }
  if (j.contains("operands")) {
    for (const auto& o : j["operands"]) spec.operands.push_back(from_json(o));
  }
  return spec;
}

}  // namespace

Graph disjoint_union(const Graph& a, const Graph& b) { return combine(a, b, false); }
Graph join(const Graph& a, const Graph& b) { return combine(a, b, true); }

GeneratorSpec parse_generator_spec(std::string_view text) {
  text = trim(text);
  GeneratorSpec spec;
  const std::size_t paren = text.find('(');
  const std::size_t colon = text.find(':');
  if (paren != std::string_view::npos && (colon == std::string_view::npos || paren < colon)) {
    if (text.back() != ')') throw Error(Errc::invalid_argument, "generator spec: missing ')'");
    spec.kind = std::string(trim(text.substr(0, paren)));
    std::string_view inner = text.substr(paren + 1, text.size() - paren - 2);
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= inner.size(); ++i) {
      if (i == inner.size() || (inner[i] == ';' && depth == 0)) {
        spec.operands.push_back(parse_generator_spec(inner.substr(start, i - start)));
        start = i + 1;
      } else if (inner[i] == '(') {
        ++depth;
      } else if (inner[i] == ')') {
        --depth;
      }
    }
    return spec;
  }
  spec.kind = std::string(trim(text.substr(0, colon)));
  if (spec.kind.empty()) throw Error(Errc::invalid_argument, "generator spec: empty kind");
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    std::size_t start = 0;
    for (std::size_t i = 0; i <= rest.size(); ++i) {
      if (i < rest.size() && rest[i] != ',') continue;
      std::string token(trim(rest.substr(start, i - start)));
      start = i + 1;
      try {
        std::size_t used = 0;
        double v = std::stod(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        spec.params.push_back(v);
      } catch (const std::exception&) {
        bad(spec.kind, "parameter '" + token + "' is not a number");
      }
    }
  }
  return spec;
}

GeneratorSpec parse_generator_spec_json(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error&) {
    throw Error(Errc::invalid_argument, "generator spec: malformed JSON");
  }
  return from_json(j);
}

std::string to_string(const GeneratorSpec& spec) {
  std::string out = spec.kind;
  if (!spec.operands.empty()) {
    out += '(';
    for (std::size_t i = 0; i < spec.operands.size(); ++i) {
      if (i) out += ';';
      out += to_string(spec.operands[i]);
    }
    return out + ')';
  }
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    out += i ? ',' : ':';
    std::ostringstream num;
    num << spec.params[i];
    out += num.str();
  }
  return out;
}

Graph generate(const GeneratorSpec& spec) {
  const std::string& k = spec.kind;
  if (k == "cycle") {
    arity(spec, 1, 1);
    return cycle_graph(int_param(spec, 0, "n"));
  }
  if (k == "complete") {
    arity(spec, 1, 1);
    return complete_graph(int_param(spec, 0, "n"));
  }
  if (k == "empty") {
    arity(spec, 1, 1);
    return empty_graph(int_param(spec, 0, "n"));
  }
  if (k == "complete_multipartite") {
    arity(spec, 1, 64);
    std::vector<int> sizes;
    for (std::size_t i = 0; i < spec.params.size(); ++i) sizes.push_back(int_param(spec, i, "part size"));
    return complete_multipartite(sizes);
  }
  if (k == "paper_fig1") {
    arity(spec, 0, 0);
    return paper_fig1();
  }
  if (k == "paper_fig5") {
    arity(spec, 0, 0);
    return paper_fig5();
  }
  if (k == "sharpness") {
    arity(spec, 1, 16);
    std::vector<int> m_list;
    for (std::size_t i = 0; i < spec.params.size(); ++i) m_list.push_back(int_param(spec, i, "m_i"));
    return sharpness_instance(m_list);
  }
  if (k == "efl_near_pencil") {
    arity(spec, 1, 1);
    return efl_near_pencil(int_param(spec, 0, "k")).graph;
  }
  if (k == "random") {
    arity(spec, 3, 3);
    const double seed = spec.params[2];
    if (seed < 0 || seed != std::floor(seed) || seed > 9.007199254740992e15) bad(k, "seed must be a nonnegative integer");
    return random_graph(int_param(spec, 0, "n"), spec.params[1], static_cast<std::uint64_t>(seed));
  }
  if (k == "disjoint_union" || k == "join") {
    if (spec.operands.size() != 2 || !spec.params.empty()) bad(k, "takes exactly two operand specs");
    Graph a = generate(spec.operands[0]);
    Graph b = generate(spec.operands[1]);
    return k == "join" ? join(a, b) : disjoint_union(a, b);
  }
  throw Error(Errc::invalid_argument, "unknown generator kind '" + k + "'");
}

}  // namespace lchord
