#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lchord/graph.hpp"
#include "lchord/index.hpp"

namespace lchord {

enum class RowStatus { pass, fail, not_computed, unmet };
const char* row_status_name(RowStatus s);

/// One checked relation "lhs op rhs". Hypothesis rows use unmet instead of
/// fail; rows whose inputs were not computed are not_computed.
struct LedgerRow {
  std::string id;
  std::string lhs_name;
  std::string op;  // "<=", "<", "==", ">="
  std::string rhs_name;
  std::optional<long long> lhs;
  std::optional<long long> rhs;
  RowStatus status = RowStatus::not_computed;
  std::string note;
};

struct ReportOptions {
  IndexOptions index;
  /// Use the exact search; otherwise only the greedy bound.
  bool exact_index = true;
  int chromatic_max_order = 12;
  int beta_max_order = 20;
  int dp_max_order = 6;
  /// (m, n) for the I_m v K_n route.
  std::optional<std::pair<int, int>> join;
};

struct AnalysisReport {
  int order = 0;
  std::size_t size = 0;
  int omega = 0;
  std::optional<int> omega_region;
  IndexResult index;
  std::optional<int> omega_star;
  std::optional<int> chromatic;
  std::optional<int> dp_tiny;
  bool dp_tiny_exceeds = false;  // chi_DP > 3 established
  int degeneracy = 0;
  std::optional<int> alpha;
  std::optional<int> beta;
  /// omega + index, an upper bound on chi_l and chi_DP.
  int list_bound = 0;
  int dp_bound = 0;
  std::optional<std::pair<int, int>> join;
  std::optional<bool> join_found;
  std::vector<LedgerRow> ledger;

  bool any_fail() const;
};

AnalysisReport bound_report(const Graph& g, const ReportOptions& options = {});

}  // namespace lchord
