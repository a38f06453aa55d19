#include "lchord/oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace lchord {

namespace {

std::optional<Hole> hole_through_wedge(const Graph& g, Vertex v, Vertex x, Vertex y) {
  // Shortest x-y path avoiding the other neighbors of v closes an induced
  // cycle with v.
  const int n = g.order();
  std::vector<char> blocked(static_cast<std::size_t>(n), 0);
  blocked[v] = 1;
  for (Vertex w : g.neighbors(v)) {
    if (w != x && w != y) blocked[w] = 1;
  }
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::deque<Vertex> queue{x};
  parent[x] = x;
  while (!queue.empty()) {
    Vertex a = queue.front();
    queue.pop_front();
    if (a == y) break;
    for (Vertex b : g.neighbors(a)) {
      if (blocked[b] || parent[b] >= 0) continue;
      parent[b] = a;
      queue.push_back(b);
    }
  }
  if (parent[y] < 0) return std::nullopt;
  std::vector<Vertex> cycle{v};
  for (Vertex a = y; a != x; a = parent[a]) cycle.push_back(a);
  cycle.push_back(x);
  return Hole(std::move(cycle));
}

}  // namespace

EliminationOrdering is_chordal_with_peo(const Graph& g) {
  const int n = g.order();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> visit;
  visit.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!visited[v] && (pick < 0 || weight[v] > weight[pick])) pick = v;
    }
    visited[pick] = 1;
    visit.push_back(pick);
    for (Vertex w : g.neighbors(pick)) {
      if (!visited[w]) ++weight[w];
    }
  }

  EliminationOrdering out;
  out.order.assign(visit.rbegin(), visit.rend());
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position[out.order[i]] = i;

  out.perfect = true;
  for (Vertex v : out.order) {
    std::vector<Vertex> later;
    for (Vertex w : g.neighbors(v)) {
      if (position[w] > position[v]) later.push_back(w);
    }
    for (std::size_t i = 0; i < later.size() && out.perfect; ++i) {
      for (std::size_t j = i + 1; j < later.size(); ++j) {
        if (g.adjacent(later[i], later[j])) continue;
        out.perfect = false;
        out.hole = hole_through_wedge(g, v, later[i], later[j]);
        break;
      }
    }
    if (!out.perfect) break;
  }
  if (!out.perfect && !out.hole) {
    for (Vertex v = 0; v < n && !out.hole; ++v) {
      const auto& nb = g.neighbors(v);
      for (std::size_t i = 0; i < nb.size() && !out.hole; ++i) {
        for (std::size_t j = i + 1; j < nb.size() && !out.hole; ++j) {
          if (!g.adjacent(nb[i], nb[j])) out.hole = hole_through_wedge(g, v, nb[i], nb[j]);
        }
      }
    }
  }
  return out;
}

bool is_chordal(const Graph& g) { return is_chordal_with_peo(g).perfect; }

ChordalColoring chordal_clique_and_coloring(const Graph& g) {
  EliminationOrdering peo = is_chordal_with_peo(g);
  if (!peo.perfect) throw Error(Errc::not_chordal, "graph is not chordal");
  const int n = g.order();
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position[peo.order[i]] = i;

  ChordalColoring out;
  out.colors.assign(static_cast<std::size_t>(n), -1);
  for (auto it = peo.order.rbegin(); it != peo.order.rend(); ++it) {
    Vertex v = *it;
    std::vector<char> used;
    int later = 0;
    for (Vertex w : g.neighbors(v)) {
      if (position[w] < position[v]) continue;
      ++later;
      if (out.colors[w] >= static_cast<int>(used.size())) used.resize(out.colors[w] + 1, 0);
      used[out.colors[w]] = 1;
    }
    int c = 0;
    while (c < static_cast<int>(used.size()) && used[c]) ++c;
    out.colors[v] = c;
    out.omega = std::max(out.omega, later + 1);
  }
  return out;
}

bool is_clique(const Graph& g, std::span<const Vertex> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[i] == vs[j] || !g.adjacent(vs[i], vs[j])) return false;
    }
  }
  return true;
}

std::vector<Vertex> max_clique(const Graph& g) {
  std::vector<Vertex> best;
  std::vector<Vertex> current;
  // Candidates stay sorted, so cliques are visited in lexicographic order
  // and the first clique of each size wins.
  std::function<void(const std::vector<Vertex>&)> grow = [&](const std::vector<Vertex>& cand) {
    if (current.size() > best.size()) best = current;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (current.size() + (cand.size() - i) <= best.size()) return;
      Vertex v = cand[i];
      std::vector<Vertex> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j) {
        if (g.adjacent(v, cand[j])) next.push_back(cand[j]);
      }
      current.push_back(v);
      grow(next);
      current.pop_back();
    }
  };
  std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
  grow(all);
  return best;
}

int clique_number(const Graph& g) { return static_cast<int>(max_clique(g).size()); }

std::vector<std::vector<Vertex>> maximal_cliques(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> r;
  std::function<void(std::vector<Vertex>, std::vector<Vertex>)> expand = [&](std::vector<Vertex> p,
                                                                             std::vector<Vertex> x) {
    if (p.empty() && x.empty()) {
      std::vector<Vertex> clique = r;
      std::sort(clique.begin(), clique.end());
      out.push_back(std::move(clique));
      return;
    }
    Vertex pivot = -1;
    std::size_t pivot_hits = 0;
    for (const auto* side : {&p, &x}) {
      for (Vertex u : *side) {
        std::size_t hits = 0;
        for (Vertex w : p) hits += g.adjacent(u, w) ? 1 : 0;
        if (pivot < 0 || hits > pivot_hits) pivot = u, pivot_hits = hits;
      }
    }
    std::vector<Vertex> branch;
    for (Vertex v : p) {
      if (!g.adjacent(pivot, v)) branch.push_back(v);
    }
    for (Vertex v : branch) {
      std::vector<Vertex> np, nx;
      for (Vertex w : p) {
        if (g.adjacent(v, w)) np.push_back(w);
      }
      for (Vertex w : x) {
        if (g.adjacent(v, w)) nx.push_back(w);
      }
      r.push_back(v);
      expand(std::move(np), std::move(nx));
      r.pop_back();
      std::erase(p, v);
      x.push_back(v);
    }
  };
  std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
  if (g.order() > 0) expand(all, {});
  std::sort(out.begin(), out.end());
  return out;
}

DegeneracyInfo degeneracy_and_cover_numbers(const Graph& g, bool want_beta) {
  const int n = g.order();
  DegeneracyInfo out;
  std::vector<int> degree(static_cast<std::size_t>(n));
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!removed[v] && (pick < 0 || degree[v] < degree[pick])) pick = v;
    }
    out.degeneracy = std::max(out.degeneracy, degree[pick]);
    out.peel_order.push_back(pick);
    removed[pick] = 1;
    for (Vertex w : g.neighbors(pick)) {
      if (!removed[w]) --degree[w];
    }
  }
  if (want_beta) {
    if (n > 20) throw Error(Errc::limit_exceeded, "exact independence number needs order <= 20");
    std::vector<Edge> complement;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (!g.adjacent(a, b)) complement.emplace_back(a, b);
      }
    }
    out.alpha = clique_number(Graph::from_edges(n, complement));
    out.beta = n - *out.alpha;
  }
  return out;
}

std::optional<JoinWitness> contains_join_subgraph(const Graph& g, int m, int n) {
  if (m < n || n < 1) throw Error(Errc::invalid_argument, "join search needs m >= n >= 1");
  std::vector<Vertex> candidates;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) >= m + n - 1) candidates.push_back(v);
  }
  std::optional<JoinWitness> found;
  std::vector<Vertex> clique;
  std::function<void(std::size_t)> search = [&](std::size_t from) {
    if (found) return;
    if (static_cast<int>(clique.size()) == n) {
      std::vector<Vertex> common;
      for (Vertex w = 0; w < g.order(); ++w) {
        if (std::find(clique.begin(), clique.end(), w) != clique.end()) continue;
        if (std::all_of(clique.begin(), clique.end(), [&](Vertex b) { return g.adjacent(b, w); })) {
          common.push_back(w);
        }
      }
      if (static_cast<int>(common.size()) >= m) {
        common.resize(static_cast<std::size_t>(m));
        found = JoinWitness{common, clique};
      }
      return;
    }
    for (std::size_t i = from; i < candidates.size() && !found; ++i) {
      Vertex v = candidates[i];
      if (!std::all_of(clique.begin(), clique.end(), [&](Vertex b) { return g.adjacent(b, v); })) continue;
      clique.push_back(v);
      search(i + 1);
      clique.pop_back();
    }
  };
  search(0);
  return found;
}

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::no: return "no";
    case Tri::yes: return "yes";
    case Tri::indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

namespace {

bool connected_within(const Graph& g, const std::vector<Vertex>& set) {
  if (set.empty()) return false;
  std::vector<Vertex> stack{set.front()};
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<char> inside(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : set) inside[v] = 1;
  seen[set.front()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex a = stack.back();
    stack.pop_back();
    for (Vertex b : g.neighbors(a)) {
      if (inside[b] && !seen[b]) {
        seen[b] = 1;
        ++reached;
        stack.push_back(b);
      }
    }
  }
  return reached == set.size();
}

bool is_forest(const Graph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) parent[v] = v;
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  for (const Edge& e : g.edges()) {
    int a = find(e.first);
    int b = find(e.second);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

}  // namespace

MinorResult has_clique_minor(const Graph& g, int t, std::uint64_t budget) {
  MinorResult out;
  const int n = g.order();
  auto singletons = [&](const std::vector<Vertex>& vs) {
    for (Vertex v : vs) out.branch_sets.push_back({v});
  };
  if (t <= 0) {
    out.status = Tri::yes;
    return out;
  }
  if (t > n || g.size() < static_cast<std::size_t>(t) * (t - 1) / 2) {
    out.status = Tri::no;
    return out;
  }
  if (t == 3 && is_forest(g)) {
    out.status = Tri::no;
    return out;
  }
  std::vector<Vertex> clique = max_clique(g);
  if (static_cast<int>(clique.size()) >= t) {
    clique.resize(static_cast<std::size_t>(t));
    singletons(clique);
    out.status = Tri::yes;
    return out;
  }
  if (n > 12) throw Error(Errc::limit_exceeded, "clique minor search needs order <= 12");

  // label[v]: 0 = discarded, 1..t = branch set. A new branch set may only
  // be opened with the next unused label.
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  bool exhausted = false;
  std::function<bool(Vertex, int)> assign = [&](Vertex v, int opened) -> bool {
    if (++out.nodes > budget) {
      exhausted = true;
      return false;
    }
    if (t - opened > n - v) return false;
    if (v == n) {
      std::vector<std::vector<Vertex>> sets(static_cast<std::size_t>(t));
      for (Vertex w = 0; w < n; ++w) {
        if (label[w]) sets[label[w] - 1].push_back(w);
      }
      for (const auto& s : sets) {
        if (!connected_within(g, s)) return false;
      }
      for (int a = 0; a < t; ++a) {
        for (int b = a + 1; b < t; ++b) {
          bool touch = false;
          for (Vertex x : sets[a]) {
            for (Vertex y : sets[b]) touch = touch || g.adjacent(x, y);
          }
          if (!touch) return false;
        }
      }
      out.branch_sets = std::move(sets);
      return true;
    }
    for (int l = 0; l <= std::min(opened + 1, t); ++l) {
      label[v] = l;
      if (assign(v + 1, std::max(opened, l))) return true;
      if (exhausted) return false;
    }
    label[v] = 0;
    return false;
  };
  if (assign(0, 0)) {
    out.status = Tri::yes;
  } else {
    out.status = exhausted ? Tri::indeterminate : Tri::no;
  }
  return out;
}

}  // namespace lchord
