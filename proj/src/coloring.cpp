#include <algorithm>
#include <functional>
#include <numeric>

#include "lchord/oracles.hpp"

namespace lchord {

bool is_proper_coloring(const Graph& g, std::span<const int> colors) {
  if (colors.size() != static_cast<std::size_t>(g.order())) return false;
  for (const Edge& e : g.edges()) {
    if (colors[e.first] == colors[e.second]) return false;
  }
  return std::all_of(colors.begin(), colors.end(), [](int c) { return c >= 0; });
}

std::optional<std::vector<int>> find_coloring(const Graph& g, int k) {
  const int n = g.order();
  if (n == 0) return std::vector<int>{};
  if (k <= 0) return std::nullopt;
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<int> colors(static_cast<std::size_t>(n), -1);
  std::function<bool(int, int)> place = [&](int i, int used) -> bool {
    if (i == n) return true;
    Vertex v = order[i];
    // A fresh color is interchangeable with any other fresh color.
    for (int c = 0; c < std::min(k, used + 1); ++c) {
      bool clash = false;
      for (Vertex w : g.neighbors(v)) {
        if (colors[w] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      colors[v] = c;
      if (place(i + 1, std::max(used, c + 1))) return true;
    }
    colors[v] = -1;
    return false;
  };
  if (!place(0, 0)) return std::nullopt;
  return colors;
}

int chromatic_number(const Graph& g, int max_order) {
  if (g.order() > max_order) {
    throw Error(Errc::limit_exceeded, "exact chromatic number limited to order " + std::to_string(max_order));
  }
  if (g.order() == 0) return 0;
  for (int k = clique_number(g);; ++k) {
    if (find_coloring(g, k)) return k;
  }
}

ListColoringResult list_colorable(const Graph& g, const ListAssignment& lists) {
  const int n = g.order();
  if (lists.lists.size() != static_cast<std::size_t>(n)) {
    throw Error(Errc::invalid_argument, "list assignment must give one list per vertex");
  }
  for (const auto& l : lists.lists) {
    if (l.empty()) throw Error(Errc::invalid_argument, "every list must be nonempty");
  }
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return lists.lists[a].size() < lists.lists[b].size(); });
  ListColoringResult out;
  std::vector<int> colors(static_cast<std::size_t>(n), 0);
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  std::function<bool(int)> place = [&](int i) -> bool {
    if (i == n) return true;
    Vertex v = order[i];
    for (int c : lists.lists[v]) {
      bool clash = false;
      for (Vertex w : g.neighbors(v)) {
        if (done[w] && colors[w] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      colors[v] = c;
      done[v] = 1;
      if (place(i + 1)) return true;
      done[v] = 0;
    }
    return false;
  };
  out.colorable = place(0);
  if (out.colorable) out.coloring = colors;
  return out;
}

void validate_cover(const Graph& g, const Correspondence& cover) {
  if (cover.k <= 0) throw Error(Errc::malformed_cover, "cover needs k >= 1");
  for (const auto& [edge, pairs] : cover.matchings) {
    if (!g.contains(edge.first) || !g.contains(edge.second) || !g.adjacent(edge.first, edge.second)) {
      throw Error(Errc::malformed_cover, "matching given on a non-edge " + std::to_string(edge.first) + "-" +
                                             std::to_string(edge.second));
    }
    std::vector<char> left(static_cast<std::size_t>(cover.k), 0);
    std::vector<char> right(static_cast<std::size_t>(cover.k), 0);
    for (const auto& [a, b] : pairs) {
      if (a < 0 || b < 0 || a >= cover.k || b >= cover.k) {
        throw Error(Errc::malformed_cover, "matching color out of range");
      }
      if (left[a]++ || right[b]++) throw Error(Errc::malformed_cover, "matching is not injective");
    }
  }
}

Correspondence identity_cover(const Graph& g, int k) {
  Correspondence out;
  out.k = k;
  for (const Edge& e : g.edges()) {
    auto& pairs = out.matchings[e];
    for (int c = 0; c < k; ++c) pairs.emplace_back(c, c);
  }
  return out;
}

namespace {

// forbid[e][a * k + b]: the endpoints of edge e may not take (a, b).
struct DpInstance {
  int k = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<char>> forbid;
};

bool solve_dp(const Graph& g, const DpInstance& inst, std::vector<int>* coloring) {
  const int n = g.order();
  const int k = inst.k;
  // Edges indexed by their later endpoint so a vertex is checked against
  // the already colored ones.
  std::vector<std::vector<int>> closing(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < inst.edges.size(); ++i) closing[inst.edges[i].second].push_back(static_cast<int>(i));
  std::vector<int> colors(static_cast<std::size_t>(n), 0);
  std::function<bool(Vertex)> place = [&](Vertex v) -> bool {
    if (v == n) return true;
    for (int c = 0; c < k; ++c) {
      bool clash = false;
      for (int ei : closing[v]) {
        const Edge& e = inst.edges[ei];
        if (inst.forbid[ei][colors[e.first] * k + c]) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      colors[v] = c;
      if (place(v + 1)) return true;
    }
    return false;
  };
  bool ok = place(0);
  if (ok && coloring) *coloring = colors;
  return ok;
}

}  // namespace

DpResult dp_colorable(const Graph& g, const Correspondence& cover) {
  validate_cover(g, cover);
  DpInstance inst;
  inst.k = cover.k;
  for (const auto& [edge, pairs] : cover.matchings) {
    inst.edges.push_back(edge);
    std::vector<char> table(static_cast<std::size_t>(cover.k * cover.k), 0);
    for (const auto& [a, b] : pairs) table[a * cover.k + b] = 1;
    inst.forbid.push_back(std::move(table));
  }
  DpResult out;
  out.colorable = g.order() == 0 || solve_dp(g, inst, &out.coloring);
  return out;
}

std::optional<int> dp_chromatic_tiny(const Graph& g, int k_max) {
  if (g.order() > 6 || k_max > 3) {
    throw Error(Errc::limit_exceeded, "DP-chromatic enumeration needs order <= 6 and k_max <= 3");
  }
  if (g.order() == 0) return 0;

  // Edges of a BFS spanning forest keep the identity matching.
  const auto edges = g.edges();
  std::vector<char> in_forest(edges.size(), 0);
  {
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (Vertex root = 0; root < g.order(); ++root) {
      if (seen[root]) continue;
      seen[root] = 1;
      std::vector<Vertex> queue{root};
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Vertex a = queue[qi];
        for (Vertex b : g.neighbors(a)) {
          if (seen[b]) continue;
          seen[b] = 1;
          queue.push_back(b);
          auto it = std::lower_bound(edges.begin(), edges.end(), Edge(a, b));
          in_forest[static_cast<std::size_t>(it - edges.begin())] = 1;
        }
      }
    }
  }

  for (int k = 1; k <= k_max; ++k) {
    std::vector<std::vector<int>> perms;
    std::vector<int> p(static_cast<std::size_t>(k));
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    DpInstance inst;
    inst.k = k;
    inst.edges = edges;
    std::vector<int> free_edges;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      std::vector<char> table(static_cast<std::size_t>(k * k), 0);
      for (int c = 0; c < k; ++c) table[c * k + c] = 1;
      inst.forbid.push_back(std::move(table));
      if (!in_forest[i]) free_edges.push_back(static_cast<int>(i));
    }
    std::vector<std::size_t> choice(free_edges.size(), 0);
    bool all_colorable = true;
    for (;;) {
      for (std::size_t j = 0; j < free_edges.size(); ++j) {
        auto& table = inst.forbid[free_edges[j]];
        std::fill(table.begin(), table.end(), 0);
        const auto& perm = perms[choice[j]];
        for (int c = 0; c < k; ++c) table[c * k + perm[c]] = 1;
      }
      if (!solve_dp(g, inst, nullptr)) {
        all_colorable = false;
        break;
      }
      std::size_t j = 0;
      while (j < choice.size() && ++choice[j] == perms.size()) choice[j++] = 0;
      if (j == choice.size()) break;
    }
    if (all_colorable) return k;
  }
  return std::nullopt;
}

}  // namespace lchord
