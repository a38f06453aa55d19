#include "lchord/report.hpp"

#include <algorithm>

#include "lchord/chordalize.hpp"
#include "lchord/holes.hpp"
#include "lchord/oracles.hpp"

namespace lchord {

const char* row_status_name(RowStatus s) {
  switch (s) {
    case RowStatus::pass: return "pass";
    case RowStatus::fail: return "fail";
    case RowStatus::not_computed: return "not_computed";
    case RowStatus::unmet: return "unmet";
  }
  return "not_computed";
}

bool AnalysisReport::any_fail() const {
  return std::any_of(ledger.begin(), ledger.end(), [](const LedgerRow& r) { return r.status == RowStatus::fail; });
}

namespace {

bool holds(long long lhs, const std::string& op, long long rhs) {
  if (op == "<=") return lhs <= rhs;
  if (op == "<") return lhs < rhs;
  if (op == "==") return lhs == rhs;
  return lhs >= rhs;
}

LedgerRow row(std::string id, std::string lhs_name, std::string op, std::string rhs_name,
              std::optional<long long> lhs, std::optional<long long> rhs, bool hypothesis = false) {
  LedgerRow r{std::move(id), std::move(lhs_name), std::move(op), std::move(rhs_name), lhs, rhs,
              RowStatus::not_computed, {}};
  if (lhs && rhs) {
    const bool ok = holds(*lhs, r.op, *rhs);
    r.status = ok ? RowStatus::pass : (hypothesis ? RowStatus::unmet : RowStatus::fail);
  }
  return r;
}

std::optional<long long> widen(std::optional<int> v) {
  if (!v) return std::nullopt;
  return *v;
}

}  // namespace

AnalysisReport bound_report(const Graph& g, const ReportOptions& options) {
  AnalysisReport rep;
  rep.order = g.order();
  rep.size = g.size();
  rep.omega = clique_number(g);

  HoleSet hs = enumerate_holes(g, options.index.limits);
  if (!hs.complete()) throw Error(Errc::incomplete_holes, "hole enumeration hit its limits");
  if (!hs.empty()) {
    HoleComponents comps = hole_components(hs);
    rep.omega_region = clique_number(induced_subgraph(g, comps.omega).graph);
  }

  if (options.exact_index) {
    try {
      rep.index = exact_index(g, options.index);
    } catch (const Error& e) {
      if (e.code() != Errc::limit_exceeded) throw;
      rep.index = greedy_index_upper_bound(g, options.index);
    }
  } else {
    rep.index = greedy_index_upper_bound(g, options.index);
  }
  const int k = rep.index.value;
  rep.list_bound = rep.omega + k;
  rep.dp_bound = rep.omega + k;

  bool completion_chordal = true;
  bool completion_minimal = true;
  if (rep.index.witness) {
    ChainTrace trace = run_chain(g, *rep.index.witness, options.index.limits);
    completion_chordal = is_chordal(trace.final_graph);
    completion_minimal = is_minimal_completion(g, trace.final_graph).minimal;
    rep.omega_star = chordal_clique_and_coloring(trace.final_graph).omega;
  } else {
    rep.omega_star = rep.omega;
  }

  if (g.order() <= options.chromatic_max_order) rep.chromatic = chromatic_number(g, options.chromatic_max_order);
  DegeneracyInfo deg = degeneracy_and_cover_numbers(g, g.order() <= options.beta_max_order);
  rep.degeneracy = deg.degeneracy;
  rep.alpha = deg.alpha;
  rep.beta = deg.beta;
  if (g.order() <= std::min(options.dp_max_order, 6)) {
    rep.dp_tiny = dp_chromatic_tiny(g, 3);
    rep.dp_tiny_exceeds = !rep.dp_tiny.has_value();
  }

  const std::string index_name = rep.index.exact ? "omega + i" : "omega + i_upper";
  auto& L = rep.ledger;
  L.push_back(row("completion_chordal", "chordal(G*)", "==", "1", completion_chordal ? 1 : 0, 1));
  L.push_back(row("completion_minimal", "minimal(G*)", "==", "1", completion_minimal ? 1 : 0, 1));
  L.push_back(row("omega_star_bound", "omega(G*)", "<=", index_name, widen(rep.omega_star), rep.omega + k));
  L.push_back(row("omega_le_chi", "omega", "<=", "chi", rep.omega, widen(rep.chromatic)));
  L.push_back(row("chi_le_omega_star", "chi", "<=", "omega(G*)", widen(rep.chromatic), widen(rep.omega_star)));
  L.push_back(row("chi_le_omega_plus_i", "chi", "<=", index_name, widen(rep.chromatic), rep.omega + k));
  L.push_back(row("degeneracy_le_beta", "degeneracy", "<=", "beta", rep.degeneracy, widen(rep.beta)));
  L.push_back(row("chi_le_degeneracy_plus_1", "chi", "<=", "degeneracy + 1", widen(rep.chromatic),
                  rep.degeneracy + 1));
  if (rep.index.value == 0) {
    L.push_back(row("chordal_chi_eq_omega", "chi", "==", "omega", widen(rep.chromatic), rep.omega));
    L.push_back(row("chordal_degeneracy", "degeneracy", "==", "omega - 1", rep.degeneracy, rep.omega - 1));
  }
  if (rep.dp_tiny || rep.dp_tiny_exceeds) {
    std::optional<long long> dp = widen(rep.dp_tiny);
    LedgerRow beta_row = row("chi_dp_le_beta_plus_1", "chi_DP", "<=", "beta + 1", dp,
                             rep.beta ? std::optional<long long>(*rep.beta + 1) : std::nullopt);
    LedgerRow index_row = row("chi_dp_le_omega_plus_i", "chi_DP", "<=", index_name, dp, rep.omega + k);
    if (rep.dp_tiny_exceeds) {
      // chi_DP >= 4 is known, so bounds below 4 are refuted.
      if (rep.beta && *rep.beta + 1 < 4) beta_row.status = RowStatus::fail;
      if (rep.omega + k < 4) index_row.status = RowStatus::fail;
      beta_row.note = index_row.note = "chi_DP > 3";
    }
    L.push_back(beta_row);
    L.push_back(index_row);
    L.push_back(row("chi_le_chi_dp", "chi", "<=", "chi_DP", widen(rep.chromatic), dp));
    if (rep.index.value == 0) L.push_back(row("chordal_chi_dp_eq_omega", "chi_DP", "==", "omega", dp, rep.omega));
  }
  if (options.join) {
    const auto [m, n] = *options.join;
    rep.join = options.join;
    rep.join_found = contains_join_subgraph(g, m, n).has_value();
    L.push_back(row("kmnfree_no_join", "contains(I_m v K_n)", "==", "0", *rep.join_found ? 1 : 0, 0, true));
    L.push_back(row("kmnfree_region", "omega(G[Omega]) + i", "<=", "m",
                    rep.omega_region ? std::optional<long long>(*rep.omega_region + k) : std::nullopt, m, true));
    L.push_back(row("kmnfree_nonchordal", "i", ">=", "1", k, 1, true));
    const bool hypotheses = std::all_of(L.end() - 3, L.end(), [](const LedgerRow& r) {
      return r.status == RowStatus::pass;
    });
    LedgerRow conclusion = row("kmnfree_omega_star", "omega(G*)", "<", "m + n", widen(rep.omega_star), m + n);
    if (!hypotheses) {
      conclusion.status = RowStatus::unmet;
      conclusion.note = "hypotheses not met";
    }
    L.push_back(conclusion);
  }
  return rep;
}

}  // namespace lchord
