#include "lchord/index.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

#include "lchord/oracles.hpp"

namespace lchord {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }
// Vertices with id >= v.
constexpr Mask from(int v) { return v >= 64 ? 0 : ~((Mask{1} << v) - 1); }

std::vector<int> members(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

struct BudgetOut {};

struct Budget {
  std::uint64_t limit = 0;
  std::uint64_t used = 0;
  void tick(std::uint64_t n = 1) {
    used += n;
    if (used > limit) throw BudgetOut{};
  }
};

struct MaskGraph {
  int n = 0;
  std::vector<Mask> adj;

  static MaskGraph from(const Graph& g) {
    MaskGraph m;
    m.n = g.order();
    m.adj.assign(static_cast<std::size_t>(m.n), 0);
    for (const Edge& e : g.edges()) m.add_edge(e.first, e.second);
    return m;
  }
  void add_edge(int a, int b) {
    adj[a] |= bit(b);
    adj[b] |= bit(a);
  }
  friend bool operator==(const MaskGraph&, const MaskGraph&) = default;
};

struct MaskHole {
  Mask verts = 0;
  std::vector<int> cycle;
};

// Induced-path search as in enumerate_holes, on bitmask rows.
class MaskPaths {
 public:
  MaskPaths(const MaskGraph& g, int anchor, Mask allowed, std::vector<MaskHole>& out, Budget& budget)
      : g_(g), anchor_(anchor), allowed_(allowed & ~bit(anchor)), out_(out), budget_(budget) {}

  void run() {
    for (int first : members(g_.adj[anchor_] & allowed_)) {
      path_ = {first};
      path_mask_ = bit(first);
      extend(first);
    }
  }

 private:
  void extend(int end) {
    budget_.tick();
    Mask cand = g_.adj[end] & allowed_ & ~path_mask_;
    while (cand) {
      const int w = std::countr_zero(cand);
      cand &= cand - 1;
      if ((g_.adj[w] & path_mask_) != bit(end)) continue;
      if (g_.adj[anchor_] & bit(w)) {
        if (path_.size() >= 2 && w > path_.front()) {
          MaskHole h;
          h.verts = path_mask_ | bit(w) | bit(anchor_);
          h.cycle.reserve(path_.size() + 2);
          h.cycle.push_back(anchor_);
          h.cycle.insert(h.cycle.end(), path_.begin(), path_.end());
          h.cycle.push_back(w);
          out_.push_back(std::move(h));
        }
        continue;
      }
      path_.push_back(w);
      path_mask_ |= bit(w);
      extend(w);
      path_mask_ &= ~bit(w);
      path_.pop_back();
    }
  }

  const MaskGraph& g_;
  int anchor_;
  Mask allowed_;
  std::vector<MaskHole>& out_;
  Budget& budget_;
  std::vector<int> path_;
  Mask path_mask_ = 0;
};

std::vector<MaskHole> all_holes(const MaskGraph& g, Mask within, Budget& budget) {
  std::vector<MaskHole> out;
  for (int s : members(within)) {
    MaskPaths(g, s, within & from(s + 1), out, budget).run();
  }
  return out;
}

std::vector<MaskHole> holes_through(const MaskGraph& g, int u, Mask within, Budget& budget) {
  std::vector<MaskHole> out;
  MaskPaths(g, u, within, out, budget).run();
  return out;
}

// Vertices failing NC: within a group of holes sharing a wedge, everything
// on some but not all of the group.
Mask nc_failures(const std::vector<MaskHole>& holes) {
  struct Group {
    Mask any = 0;
    Mask every = ~Mask{0};
    int count = 0;
  };
  std::unordered_map<std::uint32_t, Group> groups;
  for (const MaskHole& h : holes) {
    const std::size_t len = h.cycle.size();
    for (std::size_t i = 0; i < len; ++i) {
      const int a = h.cycle[(i + len - 1) % len];
      const int b = h.cycle[(i + 1) % len];
      const std::uint32_t key = static_cast<std::uint32_t>(h.cycle[i]) << 12 |
                                static_cast<std::uint32_t>(std::min(a, b)) << 6 |
                                static_cast<std::uint32_t>(std::max(a, b));
      Group& grp = groups[key];
      grp.any |= h.verts;
      grp.every &= h.verts;
      ++grp.count;
    }
  }
  Mask fail = 0;
  for (const auto& [key, grp] : groups) {
    if (grp.count >= 2) fail |= grp.any & ~grp.every;
  }
  return fail;
}

bool stage_accepts(const std::vector<MaskHole>& holes, Mask part) {
  for (const MaskHole& h : holes) {
    if (std::popcount(h.verts & part) != 1) return false;
  }
  return (nc_failures(holes) & part) == 0;
}

bool chordal_within(const MaskGraph& g, Mask within) {
  // Maximum cardinality search; the visit order reversed is a perfect
  // elimination ordering iff the graph is chordal.
  std::vector<int> weight(static_cast<std::size_t>(g.n), 0);
  std::vector<int> visit;
  Mask left = within;
  while (left) {
    int pick = -1;
    for (int v : members(left)) {
      if (pick < 0 || weight[v] > weight[pick]) pick = v;
    }
    left &= ~bit(pick);
    visit.push_back(pick);
    for (int w : members(g.adj[pick] & left)) ++weight[w];
  }
  // Earlier-visited neighbors of v are its later neighbors in elimination
  // order; they must lie in the closed neighborhood of the latest visited.
  Mask earlier = 0;
  for (int v : visit) {
    const Mask back = g.adj[v] & earlier;
    if (back) {
      // Latest visited among back neighbors.
      int parent = -1;
      for (auto it = visit.begin(); *it != v; ++it) {
        if (back & bit(*it)) parent = *it;
      }
      if ((back & ~bit(parent) & ~g.adj[parent]) != 0) return false;
    }
    earlier |= bit(v);
  }
  return true;
}

MaskGraph chordalize_part(const MaskGraph& stage, Mask within, Mask part, Budget& budget) {
  MaskGraph cur = stage;
  for (int u : members(part)) {
    Mask join = 0;
    for (const MaskHole& h : holes_through(cur, u, within, budget)) join |= h.verts;
    join &= ~cur.adj[u] & ~bit(u);
    for (int v : members(join)) cur.add_edge(u, v);
  }
  return cur;
}

struct StateKey {
  std::vector<Mask> words;
  friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateHash {
  std::size_t operator()(const StateKey& k) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (Mask w : k.words) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

struct ComponentOutcome {
  int value = 0;
  int lower = 0;
  bool exact = true;
  std::vector<Mask> parts;
};

// Exact search on one hole component (all of its vertices lie on holes).
class ComponentSearch {
 public:
  ComponentSearch(const Graph& h, Budget& budget) : graph_(h), g_(MaskGraph::from(h)), budget_(budget) {
    all_ = g_.n == 64 ? ~Mask{0} : bit(g_.n) - 1;
    holes_ = all_holes(g_, all_, budget_);
    nc_ok_ = all_ & ~nc_failures(holes_);
  }

  std::optional<Mask> nc_cover() {
    best_transversal_.reset();
    transversal(0, 0);
    return best_transversal_;
  }

  ComponentOutcome run(const HoleSet& hs, const IndexOptions& options) {
    ComponentOutcome out;
    // Upper bound: singleton stages of a minimum cover, or the greedy chain.
    HoleCoverResult mc = min_hole_cover(hs, options.budget);
    for (int v : mc.cover) out.parts.push_back(bit(v));
    out.value = static_cast<int>(out.parts.size());
    IndexOptions greedy_options = options;
    IndexResult greedy = greedy_index_upper_bound(graph_, greedy_options);
    if (greedy.value < out.value && greedy.witness) {
      out.value = greedy.value;
      out.parts.clear();
      for (const auto& part : greedy.witness->parts()) {
        Mask m = 0;
        for (Vertex v : part) m |= bit(v);
        out.parts.push_back(m);
      }
    }
    out.lower = 1;
    try {
      if (auto cover = nc_cover()) {
        out.value = 1;
        out.parts = {*cover};
        return out;
      }
      out.lower = 2;
      for (int k = 2; k <= out.value; ++k) {
        if (auto parts = search_k(k)) {
          out.value = k;
          out.parts = *parts;
          out.lower = k;
          return out;
        }
        out.lower = k + 1;
      }
    } catch (const BudgetOut&) {
    }
    out.exact = out.lower >= out.value;
    out.lower = std::min(out.lower, out.value);
    return out;
  }

 private:
  // Exact NC transversals: every hole gets exactly one member. Keeps the
  // smallest, then lexicographically first, solution.
  void transversal(Mask chosen, Mask blocked) {
    budget_.tick();
    const int size = std::popcount(chosen);
    const MaskHole* pick = nullptr;
    Mask pick_cand = 0;
    for (const MaskHole& h : holes_) {
      if (h.verts & chosen) continue;
      Mask cand = h.verts & nc_ok_ & ~blocked;
      if (!cand) return;
      if (!pick || std::popcount(cand) < std::popcount(pick_cand)) pick = &h, pick_cand = cand;
    }
    if (!pick) {
      if (!best_transversal_ || better(chosen, *best_transversal_)) best_transversal_ = chosen;
      return;
    }
    if (best_transversal_ && size + 1 > std::popcount(*best_transversal_)) return;
    for (int v : members(pick_cand)) {
      Mask on_holes = 0;
      for (const MaskHole& h : holes_) {
        if (h.verts & bit(v)) on_holes |= h.verts;
      }
      transversal(chosen | bit(v), blocked | on_holes);
    }
  }

  static bool better(Mask a, Mask b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    return members(a) < members(b);
  }

  bool covers(Mask c) const {
    return std::all_of(holes_.begin(), holes_.end(), [&](const MaskHole& h) { return (h.verts & c) != 0; });
  }

  std::optional<std::vector<Mask>> search_k(int k) {
    const int omega = std::popcount(all_);
    for (int size = k; size <= omega; ++size) {
      std::optional<std::vector<Mask>> found;
      enumerate_covers(0, 0, size, k, found);
      if (found) return found;
    }
    return std::nullopt;
  }

  // Covers of exactly `size` vertices in lexicographic order.
  void enumerate_covers(int v, Mask chosen, int size, int k,
                        std::optional<std::vector<Mask>>& found) {
    if (found) return;
    budget_.tick();
    for (const MaskHole& h : holes_) {
      if ((h.verts & chosen) == 0 && (h.verts & from(v)) == 0) return;
    }
    const int picked = std::popcount(chosen);
    if (picked == size) {
      if (!covers(chosen)) return;
      std::vector<Mask> parts;
      const Mask active = all_ & ~chosen;
      MaskGraph base;
      base.n = g_.n;
      base.adj.assign(static_cast<std::size_t>(g_.n), 0);
      for (int a : members(active)) base.adj[a] = g_.adj[a] & active;
      if (chain(base, active, chosen, k, parts)) found = std::move(parts);
      return;
    }
    if (v >= g_.n || g_.n - v < size - picked) return;
    enumerate_covers(v + 1, chosen | bit(v), size, k, found);
    enumerate_covers(v + 1, chosen, size, k, found);
  }

  bool chain(const MaskGraph& star, Mask active, Mask remaining, int parts_left, std::vector<Mask>& parts) {
    StateKey key;
    key.words.reserve(static_cast<std::size_t>(g_.n) + 3);
    key.words.push_back(active);
    key.words.push_back(remaining);
    key.words.push_back(static_cast<Mask>(parts_left));
    for (int a : members(active)) key.words.push_back(star.adj[a]);
    if (failed_.count(key)) return false;

    const int left = std::popcount(remaining);
    // Submasks in increasing numeric order.
    for (Mask part = remaining & (0 - remaining);; part = (part - remaining) & remaining) {
      if (part == 0) break;
      if (parts_left == 1 && part != remaining) continue;
      if (parts_left > 1 && left - std::popcount(part) < parts_left - 1) continue;
      budget_.tick();
      const Mask now = active | part;
      MaskGraph stage = star;
      for (int a : members(part)) {
        stage.adj[a] = g_.adj[a] & now;
        for (int b : members(stage.adj[a])) stage.adj[b] |= bit(a);
      }
      std::vector<MaskHole> holes = all_holes(stage, now, budget_);
      if (!stage_accepts(holes, part)) continue;
      MaskGraph next = chordalize_part(stage, now, part, budget_);
      if (!chordal_within(next, now)) continue;
      parts.push_back(part);
      if (parts_left == 1) return true;
      if (chain(next, now, remaining & ~part, parts_left - 1, parts)) return true;
      parts.pop_back();
    }
    if (failed_.size() > 2'000'000) failed_.clear();
    failed_.insert(std::move(key));
    return false;
  }

  const Graph& graph_;
  MaskGraph g_;
  Budget& budget_;
  Mask all_ = 0;
  std::vector<MaskHole> holes_;
  Mask nc_ok_ = 0;
  std::optional<Mask> best_transversal_;
  std::unordered_set<StateKey, StateHash> failed_;
};

InducedSubgraph component_graph(const Graph& g, const std::vector<Vertex>& cls) {
  if (cls.size() > 64) {
    throw Error(Errc::limit_exceeded, "hole component with " + std::to_string(cls.size()) +
                                          " vertices exceeds the 64-vertex search limit");
  }
  return induced_subgraph(g, cls);
}

Partition merge_parts(const std::vector<std::vector<std::vector<Vertex>>>& per_component) {
  std::size_t k = 0;
  for (const auto& parts : per_component) k = std::max(k, parts.size());
  std::vector<std::vector<Vertex>> merged(k);
  for (const auto& parts : per_component) {
    for (std::size_t i = 0; i < parts.size(); ++i) merged[i].insert(merged[i].end(), parts[i].begin(), parts[i].end());
  }
  std::erase_if(merged, [](const auto& part) { return part.empty(); });
  return Partition(std::move(merged));
}

std::vector<std::vector<Vertex>> to_original(const std::vector<Mask>& parts, const InducedSubgraph& sub) {
  std::vector<std::vector<Vertex>> out;
  for (Mask m : parts) {
    std::vector<Vertex> part;
    for (int v : members(m)) part.push_back(sub.new_to_old[v]);
    out.push_back(std::move(part));
  }
  return out;
}

HoleSet complete_holes(const Graph& g, const HoleLimits& limits) {
  HoleSet hs = enumerate_holes(g, limits);
  if (!hs.complete()) throw Error(Errc::incomplete_holes, "hole enumeration hit its limits");
  return hs;
}

// ---- greedy ------------------------------------------------------------

std::vector<Vertex> greedy_cover(const HoleSet& hs) {
  std::vector<char> hit(hs.size(), 0);
  std::vector<Vertex> chosen;
  for (;;) {
    Vertex best = -1;
    std::size_t best_gain = 0;
    for (Vertex v = 0; v < hs.order(); ++v) {
      std::size_t gain = 0;
      for (int h : hs.indices_through(v)) gain += hit[h] ? 0 : 1;
      if (gain > best_gain) best = v, best_gain = gain;
    }
    if (best < 0) break;
    chosen.push_back(best);
    for (int h : hs.indices_through(best)) hit[h] = 1;
  }
  std::sort(chosen.begin(), chosen.end());
  for (std::size_t i = 0; i < chosen.size();) {
    std::vector<Vertex> rest = chosen;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (!rest.empty() && is_hole_cover(hs, rest)) {
      chosen = std::move(rest);
    } else {
      ++i;
    }
  }
  return chosen;
}

// Builds stages greedily; every stage is valid by construction because a
// single new vertex always is.
std::vector<std::vector<Vertex>> greedy_stages(const Graph& g, const HoleSet& hs, std::vector<Vertex> cover,
                                               const HoleLimits& limits) {
  const int n = g.order();
  std::vector<char> active(static_cast<std::size_t>(n), 1);
  for (Vertex v : cover) active[v] = 0;
  Graph previous = isolate_vertices(g, cover);
  std::stable_sort(cover.begin(), cover.end(), [&](Vertex a, Vertex b) {
    return hs.indices_through(a).size() > hs.indices_through(b).size();
  });
  auto stage_graph = [&](const std::vector<Vertex>& part) {
    std::vector<char> now = active;
    for (Vertex v : part) now[v] = 1;
    std::vector<Edge> restored;
    for (const Edge& e : g.edges()) {
      if (now[e.first] && now[e.second] && !previous.adjacent(e.first, e.second)) restored.push_back(e);
    }
    return with_edges(previous, restored);
  };
  auto valid = [&](const std::vector<Vertex>& part) {
    Graph stage = stage_graph(part);
    HoleSet stage_holes = enumerate_holes(stage, limits);
    if (!stage_holes.complete()) return false;
    if (!stage_holes.empty() && !is_hole_cover(stage_holes, part)) return false;
    if (!set_satisfies_nc(stage_holes, part).ok) return false;
    return is_chordal(chordalize_in_order(stage, part, limits).graph);
  };

  std::vector<std::vector<Vertex>> parts;
  std::vector<Vertex> remaining = cover;
  while (!remaining.empty()) {
    std::vector<Vertex> part{remaining.front()};
    for (std::size_t i = 1; i < remaining.size(); ++i) {
      std::vector<Vertex> trial = part;
      trial.push_back(remaining[i]);
      if (valid(trial)) part = std::move(trial);
    }
    std::sort(part.begin(), part.end());
    Graph stage = stage_graph(part);
    previous = chordalize_in_order(stage, part, limits).graph;
    for (Vertex v : part) active[v] = 1;
    std::erase_if(remaining, [&](Vertex v) { return std::binary_search(part.begin(), part.end(), v); });
    parts.push_back(std::move(part));
  }
  return parts;
}

}  // namespace

IndexResult greedy_index_upper_bound(const Graph& g, const IndexOptions& options) {
  IndexResult out;
  HoleSet hs = complete_holes(g, options.limits);
  if (hs.empty()) return out;
  out.exact = false;
  HoleComponents comps = hole_components(hs);
  std::vector<std::vector<std::vector<Vertex>>> per_component;
  for (const auto& cls : comps.classes) {
    InducedSubgraph sub = induced_subgraph(g, cls);
    HoleSet sub_holes = complete_holes(sub.graph, options.limits);
    std::vector<std::vector<Vertex>> best;
    std::vector<std::vector<Vertex>> candidates{greedy_cover(sub_holes)};
    HoleCoverResult mc = min_hole_cover(sub_holes, std::min<std::uint64_t>(options.budget, 200'000));
    if (mc.cover != candidates.front()) candidates.push_back(mc.cover);
    for (const auto& cover : candidates) {
      auto parts = greedy_stages(sub.graph, sub_holes, cover, options.limits);
      if (best.empty() || parts.size() < best.size()) best = std::move(parts);
    }
    std::vector<std::vector<Vertex>> original;
    for (const auto& part : best) {
      std::vector<Vertex> mapped;
      for (Vertex v : part) mapped.push_back(sub.new_to_old[v]);
      original.push_back(std::move(mapped));
    }
    out.stats.component_values.push_back(static_cast<int>(original.size()));
    per_component.push_back(std::move(original));
  }
  out.stats.components = static_cast<int>(comps.classes.size());
  out.witness = merge_parts(per_component);
  out.value = static_cast<int>(out.witness->size());
  return out;
}

IndexResult exact_index(const Graph& g, const IndexOptions& options) {
  IndexResult out;
  HoleSet hs = complete_holes(g, options.limits);
  if (hs.empty()) return out;
  HoleComponents comps = hole_components(hs);
  Budget budget{options.budget, 0};
  std::vector<std::vector<std::vector<Vertex>>> per_component;
  int lower = 0;
  for (const auto& cls : comps.classes) {
    InducedSubgraph sub = component_graph(g, cls);
    HoleSet sub_holes = complete_holes(sub.graph, options.limits);
    ComponentOutcome res;
    try {
      ComponentSearch search(sub.graph, budget);
      res = search.run(sub_holes, options);
    } catch (const BudgetOut&) {
      // The component's own holes could not even be listed in budget.
      HoleCoverResult mc = min_hole_cover(sub_holes, options.budget);
      res.parts.clear();
      for (Vertex v : mc.cover) res.parts.push_back(bit(v));
      res.value = static_cast<int>(res.parts.size());
      res.lower = 1;
      res.exact = false;
    }
    lower = std::max(lower, res.lower);
    out.stats.component_values.push_back(res.value);
    per_component.push_back(to_original(res.parts, sub));
  }
  out.stats.components = static_cast<int>(comps.classes.size());
  out.stats.nodes = budget.used;
  out.stats.budget_exhausted = budget.used > budget.limit;
  out.witness = merge_parts(per_component);
  out.value = static_cast<int>(out.witness->size());
  out.exact = lower >= out.value;
  return out;
}

std::pair<std::optional<std::vector<Vertex>>, bool> find_nc_cover(const Graph& g, const IndexOptions& options) {
  HoleSet hs = complete_holes(g, options.limits);
  if (hs.empty()) return {std::vector<Vertex>{}, true};
  HoleComponents comps = hole_components(hs);
  Budget budget{options.budget, 0};
  std::vector<Vertex> cover;
  try {
    for (const auto& cls : comps.classes) {
      InducedSubgraph sub = component_graph(g, cls);
      ComponentSearch search(sub.graph, budget);
      std::optional<Mask> part = search.nc_cover();
      if (!part) return {std::nullopt, true};
      for (int v : members(*part)) cover.push_back(sub.new_to_old[v]);
    }
  } catch (const BudgetOut&) {
    return {std::nullopt, false};
  }
  std::sort(cover.begin(), cover.end());
  return {cover, true};
}

}  // namespace lchord
