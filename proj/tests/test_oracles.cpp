#include <algorithm>

#include "doctest.h"
#include "lchord/generators.hpp"
#include "lchord/oracles.hpp"
#include "support/brute_force.hpp"

using namespace lchord;

namespace {

Errc error_code(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::syntax;
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, edges);
}

bool later_neighbors_are_cliques(const Graph& g, const std::vector<Vertex>& order) {
  std::vector<int> pos(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  for (Vertex v : order) {
    std::vector<Vertex> later;
    for (Vertex w : g.neighbors(v)) {
      if (pos[w] > pos[v]) later.push_back(w);
    }
    if (!is_clique(g, later)) return false;
  }
  return true;
}

// K_{2,4}: side A = {0, 1}, side B = {2..5}.
ListAssignment k24_bad_lists() { return ListAssignment{{{1, 2}, {3, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}}; }

}  // namespace

TEST_CASE("chordality with a perfect elimination ordering or a hole") {
  const Graph chordal = with_edges(cycle_graph(6), std::vector<Edge>{{0, 2}, {0, 3}, {0, 4}});
  const EliminationOrdering ok = is_chordal_with_peo(chordal);
  CHECK(ok.perfect);
  CHECK(ok.order.size() == 6);
  CHECK(later_neighbors_are_cliques(chordal, ok.order));
  const EliminationOrdering bad = is_chordal_with_peo(cycle_graph(5));
  CHECK_FALSE(bad.perfect);
  REQUIRE(bad.hole);
  CHECK(bf::induces_hole(bf::Adj(cycle_graph(5)), bf::hole_mask(bad.hole->cycle())));
  const Graph fig1 = paper_fig1();
  const EliminationOrdering f = is_chordal_with_peo(fig1);
  REQUIRE(f.hole);
  CHECK(bf::induces_hole(bf::Adj(fig1), bf::hole_mask(f.hole->cycle())));
}

TEST_CASE("chordal coloring uses omega colors") {
  const Graph g = with_edges(cycle_graph(6), std::vector<Edge>{{0, 2}, {0, 3}, {0, 4}});
  const ChordalColoring c = chordal_clique_and_coloring(g);
  CHECK(c.omega == 3);
  CHECK(is_proper_coloring(g, c.colors));
  CHECK(*std::max_element(c.colors.begin(), c.colors.end()) == 2);
  CHECK(error_code([] { chordal_clique_and_coloring(cycle_graph(4)); }) == Errc::not_chordal);
}

TEST_CASE("clique oracles") {
  const Graph fig1 = paper_fig1();
  CHECK(clique_number(fig1) == 5);
  CHECK(clique_number(fig1) == bf::clique_number(fig1));
  CHECK(is_clique(fig1, max_clique(fig1)));
  CHECK(clique_number(cycle_graph(5)) == 2);
  CHECK(clique_number(empty_graph(3)) == 1);
  CHECK(clique_number(empty_graph(0)) == 0);
  const auto cliques = maximal_cliques(cycle_graph(4));
  CHECK(cliques.size() == 4);
  CHECK(maximal_cliques(complete_graph(4)).size() == 1);
}

TEST_CASE("chromatic number") {
  CHECK(chromatic_number(cycle_graph(5)) == 3);
  CHECK(chromatic_number(cycle_graph(6)) == 2);
  CHECK(chromatic_number(complete_graph(5)) == 5);
  CHECK(chromatic_number(petersen()) == 3);
  CHECK(chromatic_number(empty_graph(0)) == 0);
  CHECK(error_code([] { chromatic_number(cycle_graph(13)); }) == Errc::limit_exceeded);
  const auto c = find_coloring(cycle_graph(5), 3);
  REQUIRE(c);
  CHECK(is_proper_coloring(cycle_graph(5), *c));
  CHECK_FALSE(find_coloring(cycle_graph(5), 2));
}

TEST_CASE("list coloring refutes the classic 2-assignment on K_{2,4}") {
  const Graph k24 = complete_multipartite(std::vector<int>{2, 4});
  CHECK_FALSE(list_colorable(k24, k24_bad_lists()).colorable);
  ListAssignment easy = k24_bad_lists();
  easy.lists[1] = {1, 2};
  const ListColoringResult r = list_colorable(k24, easy);
  REQUIRE(r.colorable);
  CHECK(is_proper_coloring(k24, r.coloring));
  for (Vertex v = 0; v < 6; ++v) {
    CHECK(std::count(easy.lists[v].begin(), easy.lists[v].end(), r.coloring[v]) == 1);
  }
}

TEST_CASE("DP coloring of the 4-cycle") {
  const Graph c4 = cycle_graph(4);
  CHECK(dp_chromatic_tiny(c4) == 3);
  CHECK(dp_colorable(c4, identity_cover(c4, 2)).colorable);
  Correspondence twisted = identity_cover(c4, 2);
  twisted.matchings[Edge(0, 3)] = {{0, 1}, {1, 0}};
  CHECK_FALSE(dp_colorable(c4, twisted).colorable);
  CHECK(dp_chromatic_tiny(complete_graph(3)) == 3);
  CHECK(dp_chromatic_tiny(empty_graph(4)) == 1);
  CHECK(dp_chromatic_tiny(complete_graph(4)) == std::nullopt);
  CHECK(error_code([] { dp_chromatic_tiny(cycle_graph(7)); }) == Errc::limit_exceeded);
}

TEST_CASE("correspondence covers are validated") {
  const Graph c4 = cycle_graph(4);
  Correspondence bad = identity_cover(c4, 2);
  bad.matchings[Edge(0, 2)] = {{0, 0}};
  CHECK(error_code([&] { validate_cover(c4, bad); }) == Errc::malformed_cover);
  Correspondence clash = identity_cover(c4, 2);
  clash.matchings[Edge(0, 1)] = {{0, 0}, {1, 0}};
  CHECK(error_code([&] { validate_cover(c4, clash); }) == Errc::malformed_cover);
  Correspondence range = identity_cover(c4, 2);
  range.matchings[Edge(0, 1)] = {{0, 2}};
  CHECK(error_code([&] { validate_cover(c4, range); }) == Errc::malformed_cover);
}

TEST_CASE("degeneracy and cover numbers") {
  const DegeneracyInfo c4 = degeneracy_and_cover_numbers(cycle_graph(4), true);
  CHECK(c4.degeneracy == 2);
  CHECK(c4.alpha == 2);
  CHECK(c4.beta == 2);
  const DegeneracyInfo k5 = degeneracy_and_cover_numbers(complete_graph(5), true);
  CHECK(k5.degeneracy == 4);
  CHECK(k5.beta == 4);
  const Graph p = petersen();
  CHECK(degeneracy_and_cover_numbers(p, true).degeneracy == bf::degeneracy(p));
  CHECK(degeneracy_and_cover_numbers(p, true).alpha == bf::independence_number(p));
  CHECK_FALSE(degeneracy_and_cover_numbers(p, false).beta);
}

TEST_CASE("join subgraph search") {
  const Graph k24 = complete_multipartite(std::vector<int>{2, 4});
  const auto star = contains_join_subgraph(k24, 4, 1);
  REQUIRE(star);
  CHECK(star->independent_side.size() == 4);
  CHECK(star->clique_side.size() == 1);
  CHECK_FALSE(contains_join_subgraph(k24, 2, 2));
  CHECK(contains_join_subgraph(complete_graph(5), 3, 2));
  CHECK(error_code([&] { contains_join_subgraph(k24, 1, 2); }) == Errc::invalid_argument);
}

TEST_CASE("clique minors") {
  CHECK(has_clique_minor(complete_graph(4), 4).status == Tri::yes);
  CHECK(has_clique_minor(cycle_graph(6), 3).status == Tri::yes);
  CHECK(has_clique_minor(cycle_graph(6), 4).status == Tri::no);
  const MinorResult p5 = has_clique_minor(petersen(), 5);
  CHECK(p5.status == Tri::yes);
  CHECK(p5.branch_sets.size() == 5);
  CHECK(has_clique_minor(petersen(), 6).status == Tri::no);
  CHECK(error_code([] { has_clique_minor(cycle_graph(13), 3); }) == Errc::limit_exceeded);
}

TEST_CASE("EFL near-pencils are certified with k colors") {
  for (int k = 2; k <= 6; ++k) {
    CAPTURE(k);
    const EflInstance inst = efl_near_pencil(k);
    const EflCertificate c = check_efl_instance(inst.graph, inst.cliques);
    CHECK(c.certified == Tri::yes);
    CHECK(c.colors_used == k);
    CHECK(c.omega == k);
    CHECK(is_proper_coloring(inst.graph, c.coloring));
  }
}

TEST_CASE("EFL input validation") {
  const Graph k3 = complete_graph(3);
  CHECK(error_code([&] { check_efl_instance(k3, {{0, 1}}); }) == Errc::efl_wrong_size);
  CHECK(error_code([&] { check_efl_instance(cycle_graph(4), {{0, 1}, {2, 3}}); }) == Errc::efl_union_mismatch);
  CHECK(error_code([&] { check_efl_instance(cycle_graph(4), {{0, 2}, {1, 3}}); }) == Errc::efl_not_clique);
  CHECK(error_code([&] { check_efl_instance(k3, {{0, 1}, {1, 0}}); }) == Errc::efl_not_edge_disjoint);
  CHECK(error_code([&] { check_efl_instance(k3, {{0, 7}, {1, 2}}); }) == Errc::unknown_vertex);
}
