#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lchord/graph.hpp"

namespace lchord {

Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph complete_multipartite(std::span<const int> sizes);

/// Built-in fixture graphs, labeled; the named vertices are u, v, w, x.
Graph paper_fig1();
Graph paper_fig5();

/// K_{1+m_1, ..., 1+m_s, m} with s = m_list.size(), t = sum(m_list) and
/// m = (s+t)^(s+t).
Graph sharpness_instance(std::span<const int> m_list);

struct EflInstance {
  Graph graph;
  std::vector<std::vector<Vertex>> cliques;
};

/// k copies of K_k through one common vertex (vertex 0).
EflInstance efl_near_pencil(int k);

/// G(n, p) from std::mt19937_64 seeded with `seed`: for each pair i < j in
/// lexicographic order one 64-bit word r is drawn and the edge is present
/// iff (r >> 11) * 2^-53 < p.
Graph random_graph(int n, double p, std::uint64_t seed);

/// B's vertices follow A's. Labels are kept; a label of B that clashes
/// with one of A gets a trailing apostrophe.
Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);

/// Parsed generator description. Text grammar:
///   spec  := kind [ ':' num { ',' num } ] | op '(' spec ';' spec ')'
///   op    := disjoint_union | join
/// JSON: {"kind": str, "params": [num...], "operands": [spec, spec]}.
struct GeneratorSpec {
  std::string kind;
  std::vector<double> params;
  std::vector<GeneratorSpec> operands;
};

GeneratorSpec parse_generator_spec(std::string_view text);
GeneratorSpec parse_generator_spec_json(std::string_view json_text);
std::string to_string(const GeneratorSpec& spec);

/// Throws Errc::invalid_argument naming the kind and the bad parameter.
Graph generate(const GeneratorSpec& spec);

}  // namespace lchord
