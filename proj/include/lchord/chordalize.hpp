#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lchord/graph.hpp"
#include "lchord/holes.hpp"

namespace lchord {

struct Completion {
  Graph graph;
  EdgeSet added;
};

/// Joins u to every vertex nonadjacent to u on each hole through u.
/// Holes are taken from the input graph in a single pass.
Completion locally_chordalize(const Graph& g, Vertex u, const HoleLimits& limits = {});

/// Locally chordalizes by the listed vertices in the given order, without
/// checking the cover or NC preconditions.
Completion chordalize_in_order(const Graph& g, std::span<const Vertex> order,
                               const HoleLimits& limits = {});

/// The completion by an NC hole cover, processed in ascending id order.
/// Throws Errc::not_a_hole_cover or NcViolation.
Completion hat(const Graph& g, std::span<const Vertex> cover, const HoleLimits& limits = {});

/// Ordered partition (C_1, ..., C_k) of a hole cover.
class Partition {
 public:
  Partition() = default;
  /// Throws Errc::invalid_partition for empty input, empty parts or
  /// repeated vertices. Parts are stored sorted.
  explicit Partition(std::vector<std::vector<Vertex>> parts);

  const std::vector<std::vector<Vertex>>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  /// Union of the parts, sorted.
  std::vector<Vertex> cover() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::vector<Vertex>> parts_;
};

struct StageRecord {
  int index = 0;  // 1-based
  std::vector<Vertex> cover_part;
  /// Vertices of G_i; the others are isolated placeholders.
  std::vector<Vertex> vertices;
  Graph graph;       // G_i
  Graph graph_star;  // G_i^*
  EdgeSet added;
};

/// Stage graphs keep the full vertex-id range of the input; vertices not
/// yet present are isolated and omitted from `vertices`.
struct ChainTrace {
  Partition partition;
  std::vector<Vertex> base_vertices;
  Graph base;  // G_0 = G - C
  std::vector<StageRecord> stages;
  Graph final_graph;
  /// E(final) minus E(G).
  EdgeSet fill;
};

struct StageFailure {
  int stage = 0;  // 1-based
  bool cover_ok = true;
  bool chordal_after = true;
  SetNc nc;
  std::string message;
};

struct PartitionCheck {
  bool ok = true;
  std::optional<StageFailure> failure;
};

/// Simulates the chain and checks every stage. Throws
/// Errc::not_a_hole_cover when the union is not a hole cover of g.
PartitionCheck validate_partition(const Graph& g, const Partition& p, const HoleLimits& limits = {});

/// Throws NcViolation / Errc::not_a_hole_cover with the stage index in the
/// message when the partition is not valid.
ChainTrace run_chain(const Graph& g, const Partition& p, const HoleLimits& limits = {});

struct MinimalityCheck {
  bool minimal = true;
  /// A fill edge whose removal keeps the completion chordal.
  std::optional<Edge> removable;
};

/// Single-edge criterion: a chordal completion is minimal iff removing any
/// one fill edge destroys chordality. Throws Errc::not_subgraph or
/// Errc::not_chordal.
MinimalityCheck is_minimal_completion(const Graph& g, const Graph& completion);

}  // namespace lchord
