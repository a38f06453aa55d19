#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lchord/chordalize.hpp"
#include "lchord/graph.hpp"
#include "lchord/holes.hpp"

namespace lchord {

struct IndexOptions {
  /// Search nodes shared by all components.
  std::uint64_t budget = 20'000'000;
  HoleLimits limits;
};

struct IndexStats {
  std::uint64_t nodes = 0;
  bool budget_exhausted = false;
  int components = 0;
  /// Per component, in the order of hole_components().classes.
  std::vector<int> component_values;
};

struct IndexResult {
  int value = 0;
  bool exact = true;
  /// Absent when value == 0.
  std::optional<Partition> witness;
  IndexStats stats;
};

/// Non-chordality index. Each hole component is searched separately and
/// the per-component witnesses are merged part by part.
///
/// Per component: k = 1 is decided by an exact-transversal search over the
/// NC vertices; larger k by enumerating hole covers by size and then
/// lexicographically, and ordered partitions of each cover stage by stage.
/// Witnesses are ranked by (k, cover size, lexicographic cover).
/// The searches use 64-bit vertex masks, so every hole component must have
/// at most 64 vertices (Errc::limit_exceeded).
IndexResult exact_index(const Graph& g, const IndexOptions& options = {});

/// Greedy valid partition: a cover picked by hole coverage, then stages
/// grown greedily while they stay valid. Never exact unless the value is 0
/// or 1 is certified by the exact k = 1 test.
IndexResult greedy_index_upper_bound(const Graph& g, const IndexOptions& options = {});

/// Minimum NC hole cover of the whole graph (k = 1 witness), if any.
/// The bool reports whether the search finished within the budget.
std::pair<std::optional<std::vector<Vertex>>, bool> find_nc_cover(const Graph& g,
                                                                  const IndexOptions& options = {});

}  // namespace lchord
