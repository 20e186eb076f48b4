#include "alt_engine.hpp"

#include <algorithm>
#include <deque>

#include "augpath/error.hpp"

namespace augpath::detail {

AltEngine::AltEngine(const Graph& g) : g_(g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  mate_.assign(n, kNoVertex);
  target_.assign(n, 0);
  dead_.assign(n, -1);
  dead_epoch_.assign(n, 0);
  pos_.assign(n, -1);
}

void AltEngine::invalidate() {
  h_valid_ = false;
  ++epoch_;
}

void AltEngine::set_matching(const Matching& m) {
  for (Vertex v = 0; v < g_.vertex_count(); ++v) mate_[v] = m.mate_or_none(v);
  region_ = nullptr;
  invalidate();
}

void AltEngine::set_region(const VertexMask* allowed) {
  region_ = allowed;
  invalidate();
}

void AltEngine::target_unmatched() {
  mode_ = TargetMode::Unmatched;
  invalidate();
}

void AltEngine::target_mask(const VertexMask& targets) {
  mode_ = TargetMode::Mask;
  for (Vertex v = 0; v < g_.vertex_count(); ++v) target_[v] = targets[v] && allowed(v);
  invalidate();
}

void AltEngine::target_single(Vertex t) {
  mode_ = TargetMode::Mask;
  std::fill(target_.begin(), target_.end(), 0);
  if (allowed(t)) target_[t] = 1;
  invalidate();
}

void AltEngine::flip(std::span<const Vertex> path) {
  for (std::size_t i = 0; i + 1 < path.size(); i += 2) {
    mate_[path[i]] = path[i + 1];
    mate_[path[i + 1]] = path[i];
  }
  invalidate();
}

void AltEngine::build_heuristic() {
  const Vertex n = g_.vertex_count();
  hodd_.assign(static_cast<std::size_t>(n), kInf);
  heven_.assign(static_cast<std::size_t>(n), kInf);
  // Reverse breadth-first search over (vertex, parity) states.  A state is
  // encoded as 2v + parity, parity 1 meaning an odd path position.
  std::deque<std::int64_t> queue;
  for (Vertex v = 0; v < n; ++v)
    if (allowed(v) && is_target(v)) {
      hodd_[v] = 0;
      queue.push_back(2 * static_cast<std::int64_t>(v) + 1);
    }
  while (!queue.empty()) {
    const std::int64_t state = queue.front();
    queue.pop_front();
    const auto v = static_cast<Vertex>(state / 2);
    if (state % 2 == 1) {
      // Entered v at an odd position from an even-position neighbor u via a
      // non-matching edge.
      const int next = hodd_[v] + 1;
      for (Vertex u : g_.neighbors(v)) {
        if (!allowed(u) || mate_[u] == v || heven_[u] <= next) continue;
        heven_[u] = next;
        queue.push_back(2 * static_cast<std::int64_t>(u));
      }
    } else {
      // Entered v at an even position from its mate at an odd position.
      const Vertex u = mate_[v];
      if (u == kNoVertex || !allowed(u)) continue;
      const int next = heven_[v] + 1;
      if (hodd_[u] <= next) continue;
      hodd_[u] = next;
      queue.push_back(2 * static_cast<std::int64_t>(u) + 1);
    }
  }
  h_valid_ = true;
}

int AltEngine::lower_bound(std::span<const Vertex> sources) {
  if (!h_valid_) build_heuristic();
  int best = kInf;
  for (Vertex s : sources)
    if (allowed(s)) best = std::min(best, heven_[s]);
  return best;
}

bool AltEngine::dfs(Vertex v, int depth, int bound, int* blocker) {
  const int remaining = bound - depth;
  int block = kInf;
  if (h_even(v) > remaining) {
    *blocker = block;
    return false;
  }
  if (dead_epoch_[v] == epoch_ && dead_[v] >= remaining) {
    *blocker = block;
    return false;
  }
  if (node_budget_ > 0 && nodes_ >= node_budget_)
    throw Error(ErrorCode::BudgetExceeded, "search exceeded " + std::to_string(node_budget_) + " states");
  ++nodes_;

  for (Vertex u : g_.neighbors(v)) {
    if (u == mate_[v] || !allowed(u)) continue;
    if (h_odd(u) > remaining - 1) continue;
    if (pos_[u] >= 0) {
      block = std::min(block, pos_[u]);
      continue;
    }
    if (is_target(u)) {
      path_.push_back(u);
      return true;
    }
    const Vertex w = mate_[u];
    if (w == kNoVertex || !allowed(w)) continue;
    if (pos_[w] >= 0) {
      block = std::min(block, pos_[w]);
      continue;
    }
    pos_[u] = depth + 1;
    pos_[w] = depth + 2;
    path_.push_back(u);
    path_.push_back(w);
    int child = kInf;
    if (dfs(w, depth + 2, bound, &child)) return true;
    path_.pop_back();
    path_.pop_back();
    pos_[u] = -1;
    pos_[w] = -1;
    block = std::min(block, child);
  }
  if (block >= depth) {
    if (dead_epoch_[v] != epoch_) {
      dead_epoch_[v] = epoch_;
      dead_[v] = remaining;
    } else {
      dead_[v] = std::max(dead_[v], remaining);
    }
  }
  *blocker = block;
  return false;
}

bool AltEngine::run(std::span<const Vertex> sources, int bound) {
  use_h_ = bound >= heuristic_threshold_;
  if (use_h_ && !h_valid_) build_heuristic();
  for (Vertex s : sources) {
    if (!allowed(s)) continue;
    path_.assign(1, s);
    pos_[s] = 0;
    int blocker = kInf;
    bool found = false;
    try {
      found = dfs(s, 0, bound, &blocker);
    } catch (...) {
      for (Vertex v : path_) pos_[v] = -1;
      throw;
    }
    for (Vertex v : path_) pos_[v] = -1;
    if (found) return true;
  }
  return false;
}

std::optional<std::vector<Vertex>> AltEngine::search(std::span<const Vertex> sources, int bound) {
  nodes_ = 0;
  if (bound < 1) return std::nullopt;
  if (run(sources, bound)) return path_;
  return std::nullopt;
}

std::optional<std::vector<Vertex>> AltEngine::shortest(std::span<const Vertex> sources, int cap,
                                                      int min_bound) {
  nodes_ = 0;
  if (cap < 1) return std::nullopt;
  int start = std::max(1, min_bound);
  if (cap >= heuristic_threshold_) {
    start = std::max(start, lower_bound(sources));
    if (start > cap) return std::nullopt;
  }
  for (int bound = start | 1; bound <= cap; bound += 2) {
    if (run(sources, bound)) return path_;
  }
  return std::nullopt;
}

}  // namespace augpath::detail
