#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lchord/graph.hpp"
#include "lchord/holes.hpp"

namespace lchord {

// ---- chordality --------------------------------------------------------

struct EliminationOrdering {
  /// Elimination order: order[0] is eliminated first.
  std::vector<Vertex> order;
  bool perfect = false;
  /// Present when the ordering is not perfect.
  std::optional<Hole> hole;
};

/// Maximum cardinality search (ties to the smallest id), reversed into an
/// elimination ordering and checked for perfection. On failure a hole is
/// extracted from the first vertex whose later neighbors are not a clique.
EliminationOrdering is_chordal_with_peo(const Graph& g);

bool is_chordal(const Graph& g);

struct ChordalColoring {
  int omega = 0;
  std::vector<int> colors;
};

/// Clique number and an omega-coloring of a chordal graph.
/// Throws Errc::not_chordal otherwise.
ChordalColoring chordal_clique_and_coloring(const Graph& g);

// ---- cliques -----------------------------------------------------------

bool is_clique(const Graph& g, std::span<const Vertex> vs);
/// Lexicographically smallest maximum clique.
std::vector<Vertex> max_clique(const Graph& g);
int clique_number(const Graph& g);
/// All maximal cliques, each sorted, in sorted order.
std::vector<std::vector<Vertex>> maximal_cliques(const Graph& g);

// ---- colorings ---------------------------------------------------------

bool is_proper_coloring(const Graph& g, std::span<const int> colors);

/// A proper coloring with colors 0..k-1, if one exists.
std::optional<std::vector<int>> find_coloring(const Graph& g, int k);

/// Exact chromatic number. Throws Errc::limit_exceeded above max_order.
int chromatic_number(const Graph& g, int max_order = 12);

struct ListAssignment {
  std::vector<std::vector<int>> lists;
};

struct ListColoringResult {
  bool colorable = false;
  std::vector<int> coloring;
};

ListColoringResult list_colorable(const Graph& g, const ListAssignment& lists);

/// Correspondence cover with colors 0..k-1 at every vertex. For the edge
/// (a, b) with a < b, each pair (ca, cb) forbids a taking ca while b takes cb.
struct Correspondence {
  int k = 0;
  std::map<Edge, std::vector<std::pair<int, int>>> matchings;
};

/// Throws Errc::malformed_cover for colors out of range, non-injective
/// matchings, or matchings on non-edges.
void validate_cover(const Graph& g, const Correspondence& cover);

Correspondence identity_cover(const Graph& g, int k);

struct DpResult {
  bool colorable = false;
  std::vector<int> coloring;
};

DpResult dp_colorable(const Graph& g, const Correspondence& cover);

/// Least k <= k_max such that every cover of g by perfect matchings admits
/// a coloring; nullopt when no such k exists up to k_max. Partial
/// matchings forbid a subset of what some perfect matching forbids, so
/// perfect-matching covers are the hardest and suffice. Relabeling the
/// colors at one vertex maps covers to covers, so the edges of a spanning
/// forest are fixed to the identity matching.
/// Requires order <= 6 and k_max <= 3 (Errc::limit_exceeded otherwise).
std::optional<int> dp_chromatic_tiny(const Graph& g, int k_max = 3);

// ---- degeneracy and covers --------------------------------------------

struct DegeneracyInfo {
  int degeneracy = 0;
  /// Peeling order: repeatedly remove a minimum-degree vertex.
  std::vector<Vertex> peel_order;
  std::optional<int> alpha;
  std::optional<int> beta;
};

/// alpha and beta are exact and need order <= 20 (Errc::limit_exceeded).
DegeneracyInfo degeneracy_and_cover_numbers(const Graph& g, bool want_beta);

// ---- substructures -----------------------------------------------------

struct JoinWitness {
  std::vector<Vertex> independent_side;  // m vertices
  std::vector<Vertex> clique_side;       // n vertices
};

/// Searches for I_m v K_n as a (not necessarily induced) subgraph.
std::optional<JoinWitness> contains_join_subgraph(const Graph& g, int m, int n);

enum class Tri { no, yes, indeterminate };
const char* tri_name(Tri t);

struct MinorResult {
  Tri status = Tri::indeterminate;
  std::vector<std::vector<Vertex>> branch_sets;
  std::uint64_t nodes = 0;
};

/// K_t minor search over branch-set labelings. Requires order <= 12
/// unless a shortcut decides the answer.
MinorResult has_clique_minor(const Graph& g, int t, std::uint64_t budget = 50'000'000);

// ---- EFL instances -----------------------------------------------------

struct EflCertificate {
  /// pass: structure valid and chi = k certified; indeterminate: valid but
  /// the NC hypothesis does not hold, so no coloring is certified.
  Tri certified = Tri::indeterminate;
  int k = 0;
  int omega = 0;
  std::vector<Vertex> simplicial;  // one per clique
  bool chordal = false;
  std::optional<int> index_bound;  // exact index of the reduced graph, when computed
  std::vector<Vertex> nc_cover;
  std::vector<int> coloring;
  int colors_used = 0;
  std::string note;
};

/// Validates the clique list (Errc::efl_* codes), then runs the
/// simplicial-removal coloring construction.
EflCertificate check_efl_instance(const Graph& g, const std::vector<std::vector<Vertex>>& cliques);

}  // namespace lchord
