// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "lchord/chordalize.hpp"
#include "lchord/generators.hpp"
#include "lchord/index.hpp"
#include "lchord/oracles.hpp"
#include "lchord/report.hpp"
#include "support/brute_force.hpp"
#include "support/suite.hpp"

using namespace lchord;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

Vertex id(const Graph& g, const char* label) { return *g.find_label(label); }

const std::vector<Graph>& random_suite() {
  static const std::vector<Graph> all = suite::random_suite();
  return all;
}

std::vector<bf::Mask> masks(const Graph& g) { return bf::hole_sets(g); }

bool subset_of(const std::vector<bf::Mask>& small, const std::vector<bf::Mask>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Verdict figure1_index() {
  Verdict v;
  const Graph g = paper_fig1();
  const IndexResult r = exact_index(g);
  v.require(r.value == 2 && r.exact, "index " + std::to_string(r.value) + (r.exact ? "" : " (inexact)"));
  v.require(r.witness && validate_partition(g, *r.witness).ok, "witness does not validate");
  const Partition good({{id(g, "u"), id(g, "v"), id(g, "w")}, {id(g, "x")}});
  v.require(validate_partition(g, good).ok, "({u,v,w},{x}) rejected");
  const Partition single({{id(g, "u"), id(g, "v"), id(g, "w"), id(g, "x")}});
  bool diagnosed = false;
  try {
    run_chain(g, single);
  } catch (const NcViolation& e) {
    diagnosed = !e.diagnostics().ok;
  }
  v.require(diagnosed, "({u,v,w,x}) not rejected with an NC diagnostic");
  if (v.ok) v.detail = "i = 2 exact, ({u,v,w},{x}) valid, ({u,v,w,x}) rejected";
  return v;
}

Verdict nc_impossibility() {
  Verdict v;
  const Graph g = paper_fig1();
  const HoleSet hs = enumerate_holes(g);
  const auto [cover, finished] = find_nc_cover(g);
  v.require(finished && !cover, "search found an NC hole cover or ran out of budget");
  // Any NC hole cover consists of NC vertices: try every such subset.
  std::vector<Vertex> candidates;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (vertex_satisfies_nc(hs, u).ok) candidates.push_back(u);
  }
  int found = 0;
  for (std::uint32_t m = 1; m < (1u << candidates.size()); ++m) {
    std::vector<Vertex> set;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (m >> i & 1u) set.push_back(candidates[i]);
    }
    if (is_hole_cover(hs, set) && set_satisfies_nc(hs, set).ok) ++found;
  }
  v.require(found == 0, std::to_string(found) + " NC hole covers among NC-vertex subsets");
  const Graph h = apply_edits(g, EdgeSet{}, std::vector<Vertex>{id(g, "x")});
  const std::vector<Vertex> uvw{id(h, "u"), id(h, "v"), id(h, "w")};
  const HoleSet hh = enumerate_holes(h);
  v.require(is_hole_cover(hh, uvw) && set_satisfies_nc(hh, uvw).ok, "{u,v,w} fails in G - x");
  v.require(bf::is_hole_cover(h, uvw), "{u,v,w} not a cover of G - x by subset enumeration");
  if (v.ok) {
    v.detail = "no NC hole cover (" + std::to_string(candidates.size()) + " NC vertices, all subsets), {u,v,w} NC in G - x";
  }
  return v;
}

Verdict no_new_holes() {
  Verdict v;
  int vertices = 0;
  int covers = 0;
  int violations = 0;
  for (const Graph& g : random_suite()) {
    const HoleSet hs = enumerate_holes(g);
    const auto before = masks(g);
    const std::vector<char> flags = nc_vertex_flags(hs);
    for (Vertex u = 0; u < g.order(); ++u) {
      if (!flags[u] || hs.indices_through(u).empty()) continue;
      ++vertices;
      if (!subset_of(masks(locally_chordalize(g, u).graph), before)) ++violations;
    }
    const auto [cover, finished] = find_nc_cover(g);
    if (!finished) ++violations;
    if (!cover || cover->empty()) continue;
    ++covers;
    const Graph reference = hat(g, *cover).graph;
    if (!bf::is_chordal(reference) || !subset_of(masks(reference), before)) ++violations;
    if (cover->size() > 4) continue;
    std::vector<Vertex> order = *cover;
    std::sort(order.begin(), order.end());
    do {
      if (chordalize_in_order(g, order).graph != reference) ++violations;
    } while (std::next_permutation(order.begin(), order.end()));
  }
  v.require(violations == 0, std::to_string(violations) + " violations");
  v.require(vertices > 0 && covers > 0, "suite produced no NC vertex or cover");
  v.detail += (v.detail.empty() ? "" : "; ") + std::to_string(vertices) + " NC vertices, " +
              std::to_string(covers) + " NC covers, 0 violations tolerated";
  return v;
}

Verdict clique_growth() {
  Verdict v;
  int covers = 0;
  int equalities = 0;
  int violations = 0;
  for (const Graph& g : random_suite()) {
    const auto [cover, finished] = find_nc_cover(g);
    if (!cover || cover->empty()) continue;
    ++covers;
    const int omega = bf::clique_number(g);
    const int grown = bf::clique_number(hat(g, *cover).graph);
    if (grown > omega + 1) ++violations;
    if ((grown == omega + 1) != bf::clique_growth_condition(g, *cover)) ++violations;
    if (grown == omega + 1) ++equalities;
  }
  v.require(violations == 0, std::to_string(violations) + " violations");
  v.detail += (v.detail.empty() ? "" : "; ") + std::to_string(covers) + " covers, " + std::to_string(equalities) +
              " with growth";
  return v;
}

Verdict chain_bounds() {
  Verdict v;
  std::vector<Graph> graphs = random_suite();
  graphs.push_back(paper_fig1());
  graphs.push_back(paper_fig5());
  graphs.push_back(disjoint_union(paper_fig1(), cycle_graph(4)));
  int chains = 0;
  int violations = 0;
  for (const Graph& g : graphs) {
    for (const IndexResult& r : {exact_index(g), greedy_index_upper_bound(g)}) {
      if (!r.witness) continue;
      ++chains;
      const ChainTrace trace = run_chain(g, *r.witness);
      const bool ok = is_chordal(trace.final_graph) && is_spanning_subgraph(g, trace.final_graph) &&
                      is_minimal_completion(g, trace.final_graph).minimal &&
                      clique_number(trace.final_graph) <= clique_number(g) + static_cast<int>(r.witness->size());
      if (!ok) ++violations;
    }
  }
  v.require(violations == 0, std::to_string(violations) + " violations");
  v.detail += (v.detail.empty() ? "" : "; ") + std::to_string(chains) + " chains checked";
  return v;
}

Verdict coloring_ledger() {
  Verdict v;
  int graphs = 0;
  int chordal = 0;
  int violations = 0;
  for (const Graph& g : random_suite()) {
    if (g.order() > 9) continue;
    ++graphs;
    const int chi = bf::chromatic_number(g);
    const int omega = bf::clique_number(g);
    const int index = exact_index(g).value;
    if (chi > omega + index) ++violations;
    if (index == 0) {
      ++chordal;
      if (chi != omega) ++violations;
    }
  }
  v.require(violations == 0, std::to_string(violations) + " violations");
  v.detail += (v.detail.empty() ? "" : "; ") + std::to_string(graphs) + " graphs, " + std::to_string(chordal) +
              " chordal";
  return v;
}

Verdict dp_numbers() {
  Verdict v;
  const Graph c4 = cycle_graph(4);
  const auto dp = dp_chromatic_tiny(c4);
  const DegeneracyInfo d = degeneracy_and_cover_numbers(c4, true);
  v.require(dp == 3, "chi_DP(C_4) = " + (dp ? std::to_string(*dp) : std::string(">3")));
  v.require(d.beta == 2, "beta(C_4) != 2");
  v.require(dp && d.beta && *dp == *d.beta + 1, "chi_DP(C_4) != beta(C_4) + 1");
  long long instances = 0;
  int mismatches = 0;
  for (int n = 1; n <= 6; ++n) {
    suite::for_each_labeled_graph(n, [&](const Graph& g) {
      const int chi = chromatic_number(g);
      for (int k = 1; k <= 3; ++k) {
        ++instances;
        if (dp_colorable(g, identity_cover(g, k)).colorable != (chi <= k)) ++mismatches;
      }
    });
  }
  v.require(mismatches == 0, std::to_string(mismatches) + " identity-cover mismatches");
  if (v.ok) v.detail = "chi_DP(C_4) = 3 = beta + 1; identity covers agree on " + std::to_string(instances) + " cases";
  return v;
}

Verdict sharpness() {
  Verdict v;
  const Graph g = sharpness_instance(std::vector<int>{1});
  v.require(g == complete_multipartite(std::vector<int>{2, 4}), "generator did not yield K_{2,4}");
  const AnalysisReport r = bound_report(g);
  v.require(r.omega == 2, "omega != 2");
  v.require(r.chromatic == 2, "chi != 2");
  v.require(r.index.value == 1 && r.index.exact, "i != 1");
  // Side A = {0, 1}, side B = {2..5}.
  const ListAssignment lists{{{1, 2}, {3, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}};
  v.require(!list_colorable(g, lists).colorable, "2-list assignment is colorable");
  v.require(r.list_bound == 3, "omega + i != 3");
  if (v.ok) v.detail = "K_{2,4}: omega 2, chi 2, i 1, 2-lists refuted so chi_l = 3 = s + t + 1";
  return v;
}

Verdict figure5() {
  Verdict v;
  const Graph g = paper_fig5();
  ReportOptions opts;
  opts.join = std::pair{8, 4};
  const AnalysisReport r = bound_report(g, opts);
  const int region = r.omega_region.value_or(-1);
  v.require(r.omega == 11, "omega = " + std::to_string(r.omega));
  v.require(region == 5, "omega(G[Omega]) = " + std::to_string(region) + ", expected 5");
  v.require(r.index.value == 2 && r.index.exact, "i = " + std::to_string(r.index.value));
  v.require(r.join_found == false, "I_8 v K_4 found");
  const auto conclusion = std::find_if(r.ledger.begin(), r.ledger.end(),
                                       [](const LedgerRow& row) { return row.id == "kmnfree_omega_star"; });
  const bool certified = conclusion != r.ledger.end() && conclusion->status == RowStatus::pass;
  v.require(certified, "omega(G*) < 12 not certified");
  v.require(r.omega_star && *r.omega_star < r.omega + r.index.value, "no improvement over omega + i");
  std::ostringstream facts;
  facts << "omega " << r.omega << ", omega(G[Omega]) " << region << ", i " << r.index.value << ", omega(G*) "
        << r.omega_star.value_or(-1) << " < 12 " << (certified ? "certified" : "not certified");
  v.detail = v.ok ? facts.str() : v.detail + " (" + facts.str() + ")";
  return v;
}

Verdict components() {
  Verdict v;
  const Graph g = disjoint_union(paper_fig1(), cycle_graph(4));
  const IndexResult r = exact_index(g);
  v.require(r.value == 2 && r.exact, "i = " + std::to_string(r.value));
  v.require(r.witness && validate_partition(g, *r.witness).ok, "recomposed witness does not validate");
  const int m = *std::max_element(r.stats.component_values.begin(), r.stats.component_values.end());
  v.require(m == 2 && r.stats.components == 4, "component values do not combine by max");
  if (v.ok) v.detail = "i = max(2, 1) = 2 over 4 hole components, witness validates";
  return v;
}

Verdict efl() {
  Verdict v;
  for (int k = 2; k <= 6; ++k) {
    const EflInstance inst = efl_near_pencil(k);
    const EflCertificate c = check_efl_instance(inst.graph, inst.cliques);
    v.require(c.certified == Tri::yes && c.colors_used == k && is_proper_coloring(inst.graph, c.coloring),
              "k = " + std::to_string(k) + ": " + c.note);
  }
  if (v.ok) v.detail = "k = 2..6 certified with k colors";
  return v;
}

Verdict oracle_agreement() {
  Verdict v;
  long long graphs = 0;
  int disagreements = 0;
  auto check = [&](const Graph& g) {
    ++graphs;
    const auto holes = bf::hole_sets(g);
    if (is_chordal_with_peo(g).perfect != holes.empty()) ++disagreements;
    if (clique_number(g) != bf::clique_number(g)) ++disagreements;
    if (chromatic_number(g) != bf::chromatic_number(g)) ++disagreements;
    const int cover = holes.empty() ? 0 : static_cast<int>(min_hole_cover(enumerate_holes(g)).cover.size());
    if (cover != bf::min_hole_cover_size(g)) ++disagreements;
  };
  for (int n = 1; n <= 6; ++n) suite::for_each_labeled_graph(n, check);
  for (int s = 0; s < 400; ++s) check(random_graph(7 + s % 2, 0.25 + 0.1 * (s % 5), 5000 + s));
  v.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  v.detail += (v.detail.empty() ? "" : "; ") + std::to_string(graphs) + " graphs (all labeled n <= 6, 400 at n = 7, 8)";
  return v;
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;  // 0 = no limit
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "fig1 index", 60, figure1_index},
      {2, "NC impossibility", 60, nc_impossibility},
      {3, "no new holes and order independence", 0, no_new_holes},
      {4, "clique growth bound", 0, clique_growth},
      {5, "chain bounds", 0, chain_bounds},
      {6, "coloring ledger", 0, coloring_ledger},
      {7, "DP desk-scale numbers", 0, dp_numbers},
      {8, "sharpness s = t = 1", 0, sharpness},
      {9, "fig5 refinement", 120, figure5},
      {10, "component decomposition", 0, components},
      {11, "EFL near-pencil", 0, efl},
      {12, "oracle agreement", 0, oracle_agreement},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) v.require(false, "over the time limit");
    if (!v.ok) ++failed;
    std::printf("%s %2d %s: %s (%.2fs)\n", v.ok ? "PASS" : "FAIL", c.number, c.name, v.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
