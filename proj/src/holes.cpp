#include "lchord/holes.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace lchord {

Hole::Hole(std::vector<Vertex> cycle) {
  if (cycle.size() < 4) throw Error(Errc::invalid_argument, "a hole needs at least 4 vertices");
  const std::size_t n = cycle.size();
  std::size_t at = static_cast<std::size_t>(std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
  const Vertex next = cycle[(at + 1) % n];
  const Vertex prev = cycle[(at + n - 1) % n];
  cycle_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    cycle_.push_back(next < prev ? cycle[(at + i) % n] : cycle[(at + n - i) % n]);
  }
}

bool Hole::contains(Vertex v) const {
  return std::find(cycle_.begin(), cycle_.end(), v) != cycle_.end();
}

std::vector<Vertex> Hole::vertex_set() const {
  std::vector<Vertex> out = cycle_;
  std::sort(out.begin(), out.end());
  return out;
}

HoleSet::HoleSet(int order, std::vector<Hole> holes, bool complete)
    : order_(order), holes_(std::move(holes)), complete_(complete),
      index_(static_cast<std::size_t>(order)) {
  std::sort(holes_.begin(), holes_.end());
  holes_.erase(std::unique(holes_.begin(), holes_.end()), holes_.end());
  for (std::size_t i = 0; i < holes_.size(); ++i) {
    for (Vertex v : holes_[i].cycle()) {
      if (v < 0 || v >= order) throw Error(Errc::unknown_vertex, "hole vertex out of range");
      index_[v].push_back(static_cast<int>(i));
    }
  }
}

namespace {

// Depth-first search over induced paths starting at `anchor`. A path
// vertex w other than the anchor may be used only if it is adjacent to
// exactly one path vertex (the current end); a neighbor of the anchor
// closes the cycle. When `above_anchor` is set only vertices larger than
// the anchor are used, which makes the anchor the minimum of every hole.
class PathSearch {
 public:
  PathSearch(const Graph& g, Vertex anchor, bool above_anchor, const HoleLimits& limits,
             std::vector<Hole>& out, std::size_t& budget)
      : g_(g), anchor_(anchor), above_(above_anchor),
        max_len_(limits.max_hole_length > 0 ? limits.max_hole_length : g.order()),
        out_(out), budget_(budget),
        block_(static_cast<std::size_t>(g.order()), 0),
        on_path_(static_cast<std::size_t>(g.order()), 0) {}

  bool truncated() const { return truncated_; }

  void run() {
    on_path_[anchor_] = 1;
    for (Vertex first : g_.neighbors(anchor_)) {
      if (above_ && first < anchor_) continue;
      if (stopped_) break;
      push(first);
      extend(first);
      pop(first);
    }
    on_path_[anchor_] = 0;
  }

 private:
  void push(Vertex v) {
    path_.push_back(v);
    on_path_[v] = 1;
    for (Vertex w : g_.neighbors(v)) ++block_[w];
  }

  void pop(Vertex v) {
    for (Vertex w : g_.neighbors(v)) --block_[w];
    on_path_[v] = 0;
    path_.pop_back();
  }

  void extend(Vertex end) {
    const Vertex first = path_.front();
    for (Vertex w : g_.neighbors(end)) {
      if (stopped_) return;
      if (on_path_[w] || block_[w] != 1) continue;
      if (above_ && w < anchor_) continue;
      // Path is anchor, path_..., w: length path_.size() + 2 vertices.
      const int length = static_cast<int>(path_.size()) + 2;
      if (g_.adjacent(anchor_, w)) {
        if (path_.size() < 2 || w < first) continue;
        if (length > max_len_) {
          truncated_ = true;
          continue;
        }
        if (out_.size() >= budget_) {
          truncated_ = true;
          stopped_ = true;
          return;
        }
        std::vector<Vertex> cycle;
        cycle.reserve(static_cast<std::size_t>(length));
        cycle.push_back(anchor_);
        cycle.insert(cycle.end(), path_.begin(), path_.end());
        cycle.push_back(w);
        out_.emplace_back(std::move(cycle));
        continue;
      }
      // A hole through w would have at least length + 1 vertices.
      if (length + 1 > max_len_) {
        truncated_ = true;
        continue;
      }
      push(w);
      extend(w);
      pop(w);
    }
  }

  const Graph& g_;
  Vertex anchor_;
  bool above_;
  int max_len_;
  std::vector<Hole>& out_;
  std::size_t& budget_;
  std::vector<int> block_;
  std::vector<char> on_path_;
  std::vector<Vertex> path_;
  bool truncated_ = false;
  bool stopped_ = false;
};

std::optional<NcWitness> find_conflict(const HoleSet& hs, Vertex u) {
  // Holes sharing two consecutive edges share a vertex with the same pair
  // of cycle neighbors ("wedge"). Group the holes by wedge.
  for (Vertex pivot = 0; pivot < hs.order(); ++pivot) {
    const auto& through_pivot = hs.indices_through(pivot);
    if (through_pivot.size() < 2) continue;
    std::map<std::pair<Vertex, Vertex>, std::vector<int>> wedges;
    for (int h : through_pivot) {
      const auto& c = hs[h].cycle();
      const std::size_t n = c.size();
      const std::size_t at = static_cast<std::size_t>(std::find(c.begin(), c.end(), pivot) - c.begin());
      Vertex a = c[(at + 1) % n];
      Vertex b = c[(at + n - 1) % n];
      wedges[{std::min(a, b), std::max(a, b)}].push_back(h);
    }
    for (const auto& [wedge, members] : wedges) {
      const Hole* with = nullptr;
      const Hole* without = nullptr;
      for (int h : members) {
        if (hs[h].contains(u)) {
          if (!with) with = &hs[h];
        } else if (!without) {
          without = &hs[h];
        }
      }
      if (with && without) return NcWitness{*with, *without, pivot, wedge.first, wedge.second};
    }
  }
  return std::nullopt;
}

void require_complete(const HoleSet& hs) {
  if (!hs.complete()) {
    throw Error(Errc::incomplete_holes, "hole enumeration was truncated; NC and cover answers are refused");
  }
}

void require_vertex(const HoleSet& hs, Vertex v) {
  if (v < 0 || v >= hs.order()) throw Error(Errc::unknown_vertex, "unknown vertex " + std::to_string(v));
}

std::string hole_text(const Hole& h, const Graph* names) {
  std::string out = "[";
  for (std::size_t i = 0; i < h.length(); ++i) {
    if (i) out += ' ';
    out += names ? names->name(h.cycle()[i]) : std::to_string(h.cycle()[i]);
  }
  return out + "]";
}

}  // namespace

HoleSet enumerate_holes(const Graph& g, const HoleLimits& limits) {
  std::vector<Hole> holes;
  std::size_t budget = limits.max_hole_count;
  bool complete = true;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (g.degree(s) < 2) continue;
    PathSearch search(g, s, true, limits, holes, budget);
    search.run();
    if (search.truncated()) complete = false;
    if (holes.size() >= budget && !complete) break;
  }
  return HoleSet(g.order(), std::move(holes), complete);
}

std::vector<Hole> enumerate_holes_through(const Graph& g, Vertex u, const HoleLimits& limits,
                                          bool* complete) {
  if (!g.contains(u)) throw Error(Errc::unknown_vertex, "unknown vertex " + std::to_string(u));
  std::vector<Hole> holes;
  std::size_t budget = limits.max_hole_count;
  PathSearch search(g, u, false, limits, holes, budget);
  search.run();
  if (complete) *complete = !search.truncated();
  std::sort(holes.begin(), holes.end());
  return holes;
}

std::vector<Hole> holes_through(const HoleSet& hs, Vertex u) {
  require_vertex(hs, u);
  std::vector<Hole> out;
  for (int h : hs.indices_through(u)) out.push_back(hs[h]);
  return out;
}

bool is_hole_cover(const HoleSet& hs, std::span<const Vertex> cover) {
  require_complete(hs);
  if (cover.empty()) throw Error(Errc::empty_set, "a hole cover must be nonempty");
  std::vector<char> hit(hs.size(), 0);
  for (Vertex v : cover) {
    require_vertex(hs, v);
    for (int h : hs.indices_through(v)) hit[h] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

VertexNc vertex_satisfies_nc(const HoleSet& hs, Vertex u) {
  require_complete(hs);
  require_vertex(hs, u);
  VertexNc out;
  if (hs.indices_through(u).empty()) return out;
  out.witness = find_conflict(hs, u);
  out.ok = !out.witness.has_value();
  return out;
}

std::vector<char> nc_vertex_flags(const HoleSet& hs) {
  require_complete(hs);
  // Within one wedge group, a vertex on some but not all of the holes lies
  // in the symmetric difference of a conflicting pair and fails.
  std::vector<char> flags(static_cast<std::size_t>(hs.order()), 1);
  std::vector<int> seen(static_cast<std::size_t>(hs.order()), 0);
  for (Vertex pivot = 0; pivot < hs.order(); ++pivot) {
    const auto& through_pivot = hs.indices_through(pivot);
    if (through_pivot.size() < 2) continue;
    std::map<std::pair<Vertex, Vertex>, std::vector<int>> wedges;
    for (int h : through_pivot) {
      const auto& c = hs[h].cycle();
      const std::size_t n = c.size();
      const std::size_t at = static_cast<std::size_t>(std::find(c.begin(), c.end(), pivot) - c.begin());
      Vertex a = c[(at + 1) % n];
      Vertex b = c[(at + n - 1) % n];
      wedges[{std::min(a, b), std::max(a, b)}].push_back(h);
    }
    for (const auto& [wedge, members] : wedges) {
      if (members.size() < 2) continue;
      std::vector<Vertex> touched;
      for (int h : members) {
        for (Vertex v : hs[h].cycle()) {
          if (seen[v]++ == 0) touched.push_back(v);
        }
      }
      for (Vertex v : touched) {
        if (seen[v] != static_cast<int>(members.size())) flags[v] = 0;
        seen[v] = 0;
      }
    }
  }
  return flags;
}

SetNc set_satisfies_nc(const HoleSet& hs, std::span<const Vertex> members) {
  require_complete(hs);
  if (members.empty()) throw Error(Errc::empty_set, "the NC set must be nonempty");
  const std::vector<Vertex> sorted = sorted_unique({members.begin(), members.end()});
  SetNc out;
  for (Vertex v : sorted) {
    VertexNc single = vertex_satisfies_nc(hs, v);
    if (!single.ok) {
      out.ok = false;
      out.failing_vertex = v;
      out.witness = single.witness;
      return out;
    }
  }
  std::vector<char> member(static_cast<std::size_t>(hs.order()), 0);
  for (Vertex v : sorted) member[v] = 1;
  for (const Hole& h : hs.holes()) {
    std::optional<Vertex> first;
    for (Vertex v : h.vertex_set()) {
      if (!member[v]) continue;
      if (first) {
        out.ok = false;
        out.crowded_hole = h;
        out.crowded_pair = std::make_pair(*first, v);
        return out;
      }
      first = v;
    }
  }
  return out;
}

std::string SetNc::describe(const Graph* names) const {
  if (ok) return "NC property holds";
  auto name = [&](Vertex v) { return names ? names->name(v) : std::to_string(v); };
  std::ostringstream out;
  if (failing_vertex && witness) {
    out << "vertex " << name(*failing_vertex) << " fails NC: hole " << hole_text(witness->through, names)
        << " and hole " << hole_text(witness->avoiding, names) << " share edges " << name(witness->left)
        << "-" << name(witness->pivot) << " and " << name(witness->pivot) << "-" << name(witness->right);
  } else if (crowded_hole && crowded_pair) {
    out << "hole " << hole_text(*crowded_hole, names) << " contains both " << name(crowded_pair->first)
        << " and " << name(crowded_pair->second);
  }
  return out.str();
}

HoleComponents hole_components(const HoleSet& hs) {
  require_complete(hs);
  const int n = hs.order();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (const Hole& h : hs.holes()) {
    int root = find(h.cycle().front());
    for (Vertex v : h.cycle()) {
      int r = find(v);
      if (r == root) continue;
      parent[std::max(r, root)] = std::min(r, root);
      root = std::min(r, root);
    }
  }
  HoleComponents out;
  std::map<int, std::vector<Vertex>> groups;
  for (Vertex v = 0; v < n; ++v) {
    if (hs.indices_through(v).empty()) continue;
    out.omega.push_back(v);
    groups[find(v)].push_back(v);
  }
  for (auto& [root, members] : groups) out.classes.push_back(std::move(members));
  std::sort(out.classes.begin(), out.classes.end());
  return out;
}

namespace {

class CoverSearch {
 public:
  CoverSearch(const HoleSet& hs, std::uint64_t budget)
      : hs_(hs), budget_(budget), hits_(hs.size(), 0),
        banned_(static_cast<std::size_t>(hs.order()), 0) {}

  HoleCoverResult run() {
    best_ = greedy();
    search();
    HoleCoverResult out;
    out.cover = best_;
    std::sort(out.cover.begin(), out.cover.end());
    out.optimal = !exhausted_;
    out.nodes = nodes_;
    return out;
  }

 private:
  std::vector<Vertex> greedy() const {
    std::vector<char> hit(hs_.size(), 0);
    std::vector<Vertex> chosen;
    for (;;) {
      Vertex best = -1;
      std::size_t best_gain = 0;
      for (Vertex v = 0; v < hs_.order(); ++v) {
        std::size_t gain = 0;
        for (int h : hs_.indices_through(v)) gain += hit[h] ? 0 : 1;
        if (gain > best_gain) best = v, best_gain = gain;
      }
      if (best < 0) break;
      chosen.push_back(best);
      for (int h : hs_.indices_through(best)) hit[h] = 1;
    }
    return chosen;
  }

  // Number of pairwise vertex-disjoint uncovered holes, found greedily.
  std::size_t packing_bound() const {
    std::vector<char> used(static_cast<std::size_t>(hs_.order()), 0);
    std::size_t count = 0;
    for (std::size_t h = 0; h < hs_.size(); ++h) {
      if (hits_[h]) continue;
      const auto& c = hs_[h].cycle();
      if (std::any_of(c.begin(), c.end(), [&](Vertex v) { return used[v] != 0; })) continue;
      for (Vertex v : c) used[v] = 1;
      ++count;
    }
    return count;
  }

  void choose(Vertex v, int delta) {
    for (int h : hs_.indices_through(v)) hits_[h] += delta;
  }

  void search() {
    if (exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    // Branch on the uncovered hole with the fewest usable vertices.
    int pick = -1;
    std::size_t pick_free = 0;
    for (std::size_t h = 0; h < hs_.size(); ++h) {
      if (hits_[h]) continue;
      std::size_t free = 0;
      for (Vertex v : hs_[h].cycle()) free += banned_[v] ? 0 : 1;
      if (free == 0) return;
      if (pick < 0 || free < pick_free) pick = static_cast<int>(h), pick_free = free;
    }
    if (pick < 0) {
      if (current_.size() < best_.size()) best_ = current_;
      return;
    }
    if (current_.size() + std::max<std::size_t>(packing_bound(), 1) >= best_.size()) return;

    std::vector<Vertex> branch = hs_[pick].vertex_set();
    std::erase_if(branch, [&](Vertex v) { return banned_[v] != 0; });
    std::stable_sort(branch.begin(), branch.end(), [&](Vertex a, Vertex b) {
      return hs_.indices_through(a).size() > hs_.indices_through(b).size();
    });
    std::vector<Vertex> newly_banned;
    for (Vertex v : branch) {
      current_.push_back(v);
      choose(v, +1);
      search();
      choose(v, -1);
      current_.pop_back();
      banned_[v] = 1;
      newly_banned.push_back(v);
      if (exhausted_) break;
    }
    for (Vertex v : newly_banned) banned_[v] = 0;
  }

  const HoleSet& hs_;
  std::uint64_t budget_;
  std::vector<int> hits_;
  std::vector<char> banned_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

HoleCoverResult min_hole_cover(const HoleSet& hs, std::uint64_t budget) {
  require_complete(hs);
  return CoverSearch(hs, budget).run();
}

}  // namespace lchord
