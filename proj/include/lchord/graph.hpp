#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lchord {

using Vertex = int;

/// Unordered vertex pair, normalized so that first < second.
struct Edge {
  Vertex first = 0;
  Vertex second = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : first(a < b ? a : b), second(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free set of edges.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::vector<Edge> edges);

  bool insert(Edge e);
  bool contains(Edge e) const;
  bool empty() const { return edges_.empty(); }
  std::size_t size() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<Edge> edges_;
};

using Labels = std::map<Vertex, std::string>;

/// Immutable simple undirected graph on vertices 0..order-1.
///
/// Adjacency lists are sorted. Labels are display names used only for I/O;
/// they do not take part in equality.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  /// Validating constructor: rejects loops, repeated edges and out-of-range
  /// endpoints with distinct error codes.
  static Graph from_edges(int order, std::span<const Edge> edges,
                          Labels labels = {});

  int order() const { return order_; }
  std::size_t size() const { return edge_count_; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const {
    return matrix_[static_cast<std::size_t>(u) * order_ + v] != 0;
  }
  bool contains(Vertex v) const { return v >= 0 && v < order_; }

  /// Edges in canonical (lexicographic on (min, max)) order.
  std::vector<Edge> edges() const;

  const Labels& labels() const { return labels_; }
  Graph with_labels(Labels labels) const;
  std::optional<Vertex> find_label(std::string_view name) const;
  /// Label of v, or its decimal id when unlabeled.
  std::string name(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.adj_ == b.adj_;
  }

 private:
  int order_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<char> matrix_;
  Labels labels_;
};

enum class GraphFormat { edgelist, json, dot };

std::optional<GraphFormat> parse_format_name(std::string_view name);

/// Parses edgelist or json text. The dot format is export-only.
Graph parse_graph(std::string_view text, GraphFormat format);

/// Canonical serialization: edges sorted, no trailing newline for edgelist.
std::string serialize(const Graph& g, GraphFormat format);

struct InducedSubgraph {
  Graph graph;
  /// old id -> new id, only for kept vertices.
  std::map<Vertex, Vertex> old_to_new;
  /// new id -> old id.
  std::vector<Vertex> new_to_old;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// Adds edges and then deletes vertices (renumbering the survivors in
/// increasing order). No added edge may touch a deleted vertex.
Graph apply_edits(const Graph& g, const EdgeSet& add,
                  std::span<const Vertex> delete_vertices);

/// Same vertex set, extra edges. Edges already present are ignored.
Graph with_edges(const Graph& g, std::span<const Edge> extra);

/// Same vertex set with the listed edges removed.
Graph without_edges(const Graph& g, std::span<const Edge> removed);

/// Same vertex set; every edge incident to a listed vertex is dropped.
Graph isolate_vertices(const Graph& g, std::span<const Vertex> vertices);

bool is_spanning_subgraph(const Graph& sub, const Graph& super);

std::vector<Vertex> sorted_unique(std::vector<Vertex> vs);

}  // namespace lchord
