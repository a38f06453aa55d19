#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lchord/error.hpp"
#include "lchord/graph.hpp"

namespace lchord {

/// Induced cycle of length >= 4 in canonical form: the minimum vertex
/// first, followed by the smaller of its two cycle neighbors.
class Hole {
 public:
  Hole() = default;
  /// Accepts any rotation or reflection of the cycle.
  explicit Hole(std::vector<Vertex> cycle);

  const std::vector<Vertex>& cycle() const { return cycle_; }
  std::size_t length() const { return cycle_.size(); }
  bool contains(Vertex v) const;
  /// Cycle vertices in ascending order.
  std::vector<Vertex> vertex_set() const;

  friend auto operator<=>(const Hole&, const Hole&) = default;

 private:
  std::vector<Vertex> cycle_;
};

struct HoleLimits {
  std::size_t max_hole_count = 1'000'000;
  /// 0 means the graph order (no limit).
  int max_hole_length = 0;
};

/// The holes of one graph with a per-vertex index.
class HoleSet {
 public:
  HoleSet() = default;
  HoleSet(int order, std::vector<Hole> holes, bool complete);

  int order() const { return order_; }
  bool complete() const { return complete_; }
  bool empty() const { return holes_.empty(); }
  std::size_t size() const { return holes_.size(); }
  const std::vector<Hole>& holes() const { return holes_; }
  const Hole& operator[](std::size_t i) const { return holes_[i]; }

  /// Indices (into holes()) of the holes through v.
  const std::vector<int>& indices_through(Vertex v) const { return index_[v]; }

 private:
  int order_ = 0;
  std::vector<Hole> holes_;
  bool complete_ = true;
  std::vector<std::vector<int>> index_;
};

/// All holes of g, sorted. Enumerates induced paths anchored at each
/// hole's minimum vertex, so every hole is produced once.
HoleSet enumerate_holes(const Graph& g, const HoleLimits& limits = {});

/// Holes of g passing through u, enumerated directly from u.
/// Sets *complete to false if a limit pruned the search.
std::vector<Hole> enumerate_holes_through(const Graph& g, Vertex u,
                                          const HoleLimits& limits = {},
                                          bool* complete = nullptr);

std::vector<Hole> holes_through(const HoleSet& hs, Vertex u);

bool is_hole_cover(const HoleSet& hs, std::span<const Vertex> cover);

/// Two holes sharing the consecutive edges {pivot,left} and {pivot,right}.
struct NcWitness {
  Hole through;   // contains the tested vertex
  Hole avoiding;  // does not
  Vertex pivot = 0;
  Vertex left = 0;
  Vertex right = 0;
};

struct VertexNc {
  bool ok = true;
  std::optional<NcWitness> witness;
};

VertexNc vertex_satisfies_nc(const HoleSet& hs, Vertex u);

/// flags[v] != 0 iff v has the NC property. Vertices on no hole pass.
std::vector<char> nc_vertex_flags(const HoleSet& hs);

struct SetNc {
  bool ok = true;
  std::optional<Vertex> failing_vertex;
  std::optional<NcWitness> witness;
  /// A hole containing two members, with those members.
  std::optional<Hole> crowded_hole;
  std::optional<std::pair<Vertex, Vertex>> crowded_pair;

  std::string describe(const Graph* names = nullptr) const;
};

SetNc set_satisfies_nc(const HoleSet& hs, std::span<const Vertex> members);

class NcViolation : public Error {
 public:
  NcViolation(SetNc diagnostics, const std::string& what)
      : Error(Errc::nc_violation, what), diagnostics_(std::move(diagnostics)) {}
  const SetNc& diagnostics() const { return diagnostics_; }

 private:
  SetNc diagnostics_;
};

struct HoleComponents {
  std::vector<Vertex> omega;
  /// Sorted inside, ordered by minimum element.
  std::vector<std::vector<Vertex>> classes;
};

HoleComponents hole_components(const HoleSet& hs);

struct HoleCoverResult {
  std::vector<Vertex> cover;
  bool optimal = true;
  std::uint64_t nodes = 0;
};

/// Minimum transversal of the holes by branch and bound. An empty hole
/// set gives an empty cover.
HoleCoverResult min_hole_cover(const HoleSet& hs, std::uint64_t budget = 10'000'000);

}  // namespace lchord
