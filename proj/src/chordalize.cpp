#include "lchord/chordalize.hpp"

#include <algorithm>
#include <stdexcept>

#include "lchord/oracles.hpp"

namespace lchord {

namespace {

EdgeSet edge_difference(const Graph& bigger, const Graph& smaller) {
  std::vector<Edge> out;
  for (const Edge& e : bigger.edges()) {
    if (!smaller.adjacent(e.first, e.second)) out.push_back(e);
  }
  return EdgeSet(std::move(out));
}

void require_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v)) throw Error(Errc::unknown_vertex, "unknown vertex " + std::to_string(v));
}

}  // namespace

Completion locally_chordalize(const Graph& g, Vertex u, const HoleLimits& limits) {
  require_vertex(g, u);
  bool complete = true;
  std::vector<Hole> holes = enumerate_holes_through(g, u, limits, &complete);
  if (!complete) throw Error(Errc::incomplete_holes, "holes through vertex " + std::to_string(u) + " were truncated");
  std::vector<Edge> extra;
  for (const Hole& h : holes) {
    for (Vertex v : h.cycle()) {
      if (v != u && !g.adjacent(u, v)) extra.emplace_back(u, v);
    }
  }
  EdgeSet added(std::move(extra));
  if (added.empty()) return {g, added};
  return {with_edges(g, added.edges()), added};
}

Completion chordalize_in_order(const Graph& g, std::span<const Vertex> order, const HoleLimits& limits) {
  Completion out{g, {}};
  for (Vertex u : order) {
    Completion step = locally_chordalize(out.graph, u, limits);
    out.graph = std::move(step.graph);
  }
  out.added = edge_difference(out.graph, g);
  return out;
}

Completion hat(const Graph& g, std::span<const Vertex> cover, const HoleLimits& limits) {
  const std::vector<Vertex> members = sorted_unique({cover.begin(), cover.end()});
  for (Vertex v : members) require_vertex(g, v);
  HoleSet hs = enumerate_holes(g, limits);
  if (!is_hole_cover(hs, members)) throw Error(Errc::not_a_hole_cover, "the given set is not a hole cover");
  SetNc nc = set_satisfies_nc(hs, members);
  if (!nc.ok) throw NcViolation(nc, nc.describe(&g));
  return chordalize_in_order(g, members, limits);
}

Partition::Partition(std::vector<std::vector<Vertex>> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error(Errc::invalid_partition, "a partition needs at least one part");
  std::vector<Vertex> all;
  for (auto& part : parts_) {
    if (part.empty()) throw Error(Errc::invalid_partition, "partition parts must be nonempty");
    std::sort(part.begin(), part.end());
    all.insert(all.end(), part.begin(), part.end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw Error(Errc::invalid_partition, "partition parts must be disjoint and duplicate-free");
  }
}

std::vector<Vertex> Partition::cover() const {
  std::vector<Vertex> all;
  for (const auto& part : parts_) all.insert(all.end(), part.begin(), part.end());
  std::sort(all.begin(), all.end());
  return all;
}

namespace {

struct Simulation {
  ChainTrace trace;
  std::optional<StageFailure> failure;
};

Simulation simulate(const Graph& g, const Partition& p, const HoleLimits& limits) {
  const int n = g.order();
  const std::vector<Vertex> cover = p.cover();
  for (Vertex v : cover) {
    if (!g.contains(v)) throw Error(Errc::invalid_partition, "partition names unknown vertex " + std::to_string(v));
  }
  HoleSet hs = enumerate_holes(g, limits);
  if (!is_hole_cover(hs, cover)) {
    throw Error(Errc::not_a_hole_cover, "the union of the parts is not a hole cover");
  }

  Simulation sim;
  ChainTrace& trace = sim.trace;
  trace.partition = p;
  std::vector<char> active(static_cast<std::size_t>(n), 1);
  for (Vertex v : cover) active[v] = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (active[v]) trace.base_vertices.push_back(v);
  }
  trace.base = isolate_vertices(g, cover);

  Graph previous = trace.base;
  int index = 0;
  for (const auto& part : p.parts()) {
    ++index;
    for (Vertex v : part) active[v] = 1;
    StageRecord stage;
    stage.index = index;
    stage.cover_part = part;
    for (Vertex v = 0; v < n; ++v) {
      if (active[v]) stage.vertices.push_back(v);
    }
    std::vector<Edge> restored;
    for (const Edge& e : g.edges()) {
      if (active[e.first] && active[e.second] && !previous.adjacent(e.first, e.second)) restored.push_back(e);
    }
    stage.graph = with_edges(previous, restored);

    HoleSet stage_holes = enumerate_holes(stage.graph, limits);
    StageFailure fail;
    fail.stage = index;
    fail.cover_ok = stage_holes.empty() || is_hole_cover(stage_holes, part);
    fail.nc = set_satisfies_nc(stage_holes, part);
    stage.graph_star = chordalize_in_order(stage.graph, part, limits).graph;
    fail.chordal_after = is_chordal(stage.graph_star);
    stage.added = edge_difference(stage.graph_star, stage.graph);

    if (!sim.failure && (!fail.cover_ok || !fail.nc.ok || !fail.chordal_after)) {
      if (!fail.cover_ok) {
        fail.message = "stage " + std::to_string(index) + ": part is not a hole cover of the stage graph";
      } else if (!fail.nc.ok) {
        fail.message = "stage " + std::to_string(index) + ": " + fail.nc.describe(&g);
      } else {
        fail.message = "stage " + std::to_string(index) + ": completed stage graph is not chordal";
      }
      sim.failure = std::move(fail);
    }
    previous = stage.graph_star;
    trace.stages.push_back(std::move(stage));
  }
  trace.final_graph = previous.with_labels(g.labels());
  trace.fill = edge_difference(trace.final_graph, g);
  return sim;
}

}  // namespace

PartitionCheck validate_partition(const Graph& g, const Partition& p, const HoleLimits& limits) {
  Simulation sim = simulate(g, p, limits);
  PartitionCheck out;
  out.ok = !sim.failure.has_value();
  out.failure = std::move(sim.failure);
  return out;
}

ChainTrace run_chain(const Graph& g, const Partition& p, const HoleLimits& limits) {
  Simulation sim = simulate(g, p, limits);
  if (sim.failure) {
    const StageFailure& f = *sim.failure;
    if (!f.nc.ok) throw NcViolation(f.nc, f.message);
    throw Error(f.cover_ok ? Errc::not_chordal : Errc::not_a_hole_cover, f.message);
  }
  if (!is_spanning_subgraph(g, sim.trace.final_graph) || !is_chordal(sim.trace.final_graph)) {
    throw std::logic_error("chain produced a graph that is not a chordal completion");
  }
  return std::move(sim.trace);
}

MinimalityCheck is_minimal_completion(const Graph& g, const Graph& completion) {
  if (!is_spanning_subgraph(g, completion)) {
    throw Error(Errc::not_subgraph, "the input graph is not a spanning subgraph of the completion");
  }
  if (!is_chordal(completion)) throw Error(Errc::not_chordal, "the completion is not chordal");
  MinimalityCheck out;
  for (const Edge& e : edge_difference(completion, g)) {
    const Edge single[] = {e};
    if (is_chordal(without_edges(completion, single))) {
      out.minimal = false;
      out.removable = e;
      return out;
    }
  }
  return out;
}

}  // namespace lchord
