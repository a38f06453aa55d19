#include <algorithm>
#include <set>

#include "lchord/chordalize.hpp"
#include "lchord/index.hpp"
#include "lchord/oracles.hpp"

namespace lchord {

namespace {

void validate_efl(const Graph& g, const std::vector<std::vector<Vertex>>& cliques) {
  const std::size_t k = cliques.size();
  std::set<Edge> seen;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& c = cliques[i];
    if (c.size() != k) {
      throw Error(Errc::efl_wrong_size, "clique " + std::to_string(i) + " has " + std::to_string(c.size()) +
                                            " vertices, expected k = " + std::to_string(k));
    }
    for (Vertex v : c) {
      if (!g.contains(v)) throw Error(Errc::unknown_vertex, "clique " + std::to_string(i) + " names unknown vertex");
    }
    if (!is_clique(g, c)) throw Error(Errc::efl_not_clique, "set " + std::to_string(i) + " is not a clique");
    for (std::size_t a = 0; a < c.size(); ++a) {
      for (std::size_t b = a + 1; b < c.size(); ++b) {
        if (!seen.insert(Edge(c[a], c[b])).second) {
          throw Error(Errc::efl_not_edge_disjoint, "edge " + std::to_string(std::min(c[a], c[b])) + "-" +
                                                       std::to_string(std::max(c[a], c[b])) +
                                                       " lies in two cliques");
        }
      }
    }
  }
  if (seen.size() != g.size()) {
    throw Error(Errc::efl_union_mismatch, "the cliques cover " + std::to_string(seen.size()) + " of " +
                                              std::to_string(g.size()) + " edges");
  }
}

}  // namespace

EflCertificate check_efl_instance(const Graph& g, const std::vector<std::vector<Vertex>>& cliques) {
  if (cliques.empty()) throw Error(Errc::efl_wrong_size, "at least one clique is required");
  validate_efl(g, cliques);
  EflCertificate out;
  out.k = static_cast<int>(cliques.size());
  out.omega = clique_number(g);
  out.chordal = is_chordal(g);

  // A vertex lying in no other clique is simplicial: its neighborhood is
  // the rest of its own clique.
  std::vector<int> membership(static_cast<std::size_t>(g.order()), 0);
  for (const auto& c : cliques) {
    for (Vertex v : c) ++membership[v];
  }
  for (const auto& c : cliques) {
    auto it = std::find_if(c.begin(), c.end(), [&](Vertex v) {
      return membership[v] == 1 && g.degree(v) == static_cast<int>(c.size()) - 1;
    });
    if (it == c.end()) {
      out.certified = Tri::no;
      out.note = "a clique has no simplicial vertex";
      return out;
    }
    out.simplicial.push_back(*it);
  }
  std::vector<Vertex> sorted_simplicial = sorted_unique(out.simplicial);
  if (static_cast<int>(sorted_simplicial.size()) != out.k) {
    out.certified = Tri::no;
    out.note = "simplicial vertices are not distinct";
    return out;
  }

  // Reduced graph: the simplicial vertices become isolated.
  Graph reduced = isolate_vertices(g, sorted_simplicial);
  auto [nc_cover, finished] = find_nc_cover(reduced);
  if (!finished) {
    out.note = "NC search on the reduced graph ran out of budget";
    return out;
  }
  if (!nc_cover) {
    out.index_bound.reset();
    out.note = "the reduced graph has no NC hole cover";
    return out;
  }
  out.index_bound = nc_cover->empty() ? 0 : 1;
  out.nc_cover = nc_cover->empty() ? std::vector<Vertex>{0} : *nc_cover;
  if (nc_cover->empty()) {
    // Chordal: any nonempty set is an NC hole cover. Pick a non-simplicial
    // vertex when there is one.
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!std::binary_search(sorted_simplicial.begin(), sorted_simplicial.end(), v)) {
        out.nc_cover = {v};
        break;
      }
    }
  }
  Graph completed = hat(reduced, out.nc_cover).graph;
  ChordalColoring base = chordal_clique_and_coloring(completed);
  out.coloring = base.colors;

  // Put the simplicial vertices back, greedily.
  for (Vertex s : sorted_simplicial) {
    std::vector<char> used(static_cast<std::size_t>(out.k) + 1, 0);
    for (Vertex w : g.neighbors(s)) {
      if (out.coloring[w] >= 0 && out.coloring[w] < static_cast<int>(used.size())) used[out.coloring[w]] = 1;
    }
    int c = 0;
    while (used[c]) ++c;
    out.coloring[s] = c;
  }
  out.colors_used = 1 + *std::max_element(out.coloring.begin(), out.coloring.end());
  const bool proper = is_proper_coloring(g, out.coloring);
  if (proper && out.colors_used <= out.k && out.omega == out.k) {
    out.certified = Tri::yes;
  } else {
    out.certified = Tri::no;
    out.note = proper ? "construction used more than k colors" : "construction produced an improper coloring";
  }
  return out;
}

}  // namespace lchord
