#pragma once

#include <cstdint>
#include <vector>

#include "lchord/generators.hpp"

namespace suite {

using lchord::Edge;
using lchord::Graph;

/// Seeded random graphs with 4..10 vertices and densities 0.3..0.6.
inline std::vector<Graph> random_suite(int count = 500, int max_order = 10) {
  static constexpr double kDensity[] = {0.3, 0.4, 0.5, 0.6};
  std::vector<Graph> out;
  for (int s = 0; s < count; ++s) {
    const int n = 4 + s % (max_order - 3);
    out.push_back(lchord::random_graph(n, kDensity[(s / 7) % 4], 1000 + static_cast<std::uint64_t>(s)));
  }
  return out;
}

/// Calls f on every labeled graph with n vertices.
template <class F>
void for_each_labeled_graph(int n, F&& f) {
  std::vector<Edge> slots;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (mask >> i & 1u) edges.push_back(slots[i]);
    }
    f(Graph::from_edges(n, edges));
  }
}

/// Identifies vertex 0 of b with vertex 0 of a.
inline Graph glue_at_vertex(const Graph& a, const Graph& b) {
  const int offset = a.order() - 1;
  auto map = [&](int v) { return v == 0 ? 0 : v + offset; };
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.emplace_back(map(e.first), map(e.second));
  return Graph::from_edges(a.order() + b.order() - 1, edges);
}

}  // namespace suite
