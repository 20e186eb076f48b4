#include "augpath/alt_search.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "alt_engine.hpp"
#include "augpath/error.hpp"

namespace augpath {

void ForbiddenSchedule::set_level(int k, std::vector<Edge> edges) {
  if (k < 0) throw Error(ErrorCode::InvalidParams, "negative schedule level");
  for (Edge& e : edges) e = e.normalized();
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (static_cast<int>(levels_.size()) <= k) levels_.resize(static_cast<std::size_t>(k) + 1);
  levels_[k] = std::move(edges);
}

bool ForbiddenSchedule::forbids(int k, Vertex u, Vertex v) const {
  if (k < 0 || k >= static_cast<int>(levels_.size())) return false;
  const auto& level = levels_[k];
  return std::binary_search(level.begin(), level.end(), Edge{u, v}.normalized());
}

std::size_t ForbiddenSchedule::level_size(int k) const {
  return k >= 0 && k < static_cast<int>(levels_.size()) ? levels_[k].size() : 0;
}

bool ForbiddenSchedule::within_budget(int d, std::size_t seed_count, int upto) const {
  for (int k = 0; k < upto; ++k)
    if (level_size(k) > static_cast<std::size_t>(d) * seed_count) return false;
  return true;
}

void ForbiddenSchedule::validate(const Graph& g) const {
  for (const auto& level : levels_)
    for (const Edge& e : level)
      if (e.u < 0 || e.v >= g.vertex_count() || !g.has_edge(e.u, e.v))
        throw Error(ErrorCode::InvalidParams, "forbidden edge (" + std::to_string(e.u) + "," +
                                                  std::to_string(e.v) + ") is not an edge");
}

const char* to_string(Label label) {
  switch (label) {
    case Label::Outside: return "outside";
    case Label::Seed: return "seed";
    case Label::Head: return "head";
    case Label::Tail: return "tail";
    case Label::Both: return "both";
  }
  return "?";
}

namespace {

VertexSet checked_seeds(const Graph& g, const Matching& m, std::span<const Vertex> seeds) {
  VertexSet s(seeds.begin(), seeds.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw Error(ErrorCode::InvalidParams, "repeated seed vertex");
  for (Vertex v : s) {
    if (v < 0 || v >= g.vertex_count()) throw Error(ErrorCode::IndexOutOfRange, "seed out of range");
    if (m.is_matched(v)) throw Error(ErrorCode::SeedMatched, "seed " + std::to_string(v) + " is matched");
  }
  return s;
}

// Relaxed odd distances from the seeds inside the region (self-avoidance
// ignored), used to skip hopeless per-vertex searches.
std::vector<int> relaxed_odd_distance(const Graph& g, const Matching& m, const VertexSet& seeds,
                                      const VertexMask& region) {
  const Vertex n = g.vertex_count();
  constexpr int inf = detail::AltEngine::kInf;
  std::vector<int> odd(static_cast<std::size_t>(n), inf), even(static_cast<std::size_t>(n), inf);
  std::deque<std::pair<Vertex, bool>> queue;
  for (Vertex s : seeds) {
    even[s] = 0;
    queue.push_back({s, false});
  }
  while (!queue.empty()) {
    const auto [v, at_odd] = queue.front();
    queue.pop_front();
    if (!at_odd) {
      for (Vertex u : g.neighbors(v)) {
        if (!region[u] || m.mate_or_none(v) == u || odd[u] <= even[v] + 1) continue;
        odd[u] = even[v] + 1;
        queue.push_back({u, true});
      }
    } else {
      const Vertex w = m.mate_or_none(v);
      if (w == kNoVertex || !region[w] || even[w] <= odd[v] + 1) continue;
      even[w] = odd[v] + 1;
      queue.push_back({w, false});
    }
  }
  return odd;
}

}  // namespace

std::vector<FrontierState> grow_frontier(const Graph& g, const Matching& m, std::span<const Vertex> seeds,
                                         const ForbiddenSchedule& schedule, const FrontierOptions& options) {
  validate_matching(g, m);
  schedule.validate(g);
  const VertexSet s = checked_seeds(g, m, seeds);
  const Vertex n = g.vertex_count();
  const auto nz = static_cast<std::size_t>(n);

  detail::AltEngine engine(g);
  engine.set_matching(m);

  VertexMask in_x = to_mask(nz, s);
  VertexMask head(nz, 0);  // H~ membership, monotone in k
  std::vector<FrontierState> levels;

  for (int k = 0; k <= options.max_level; ++k) {
    FrontierState st;
    st.level = k;
    st.seeds = s;
    st.in_x = in_x;
    if (k >= 1) {
      engine.set_region(&in_x);
      const auto relaxed = relaxed_odd_distance(g, m, s, in_x);
      for (Vertex v = 0; v < n; ++v) {
        if (!in_x[v] || head[v] || relaxed[v] > 2 * k - 1) continue;
        engine.target_single(v);
        if (engine.search(s, 2 * k - 1)) head[v] = 1;
      }
    }
    st.in_h_tilde = head;
    st.in_t_tilde.assign(nz, 0);
    st.labels.assign(nz, Label::Outside);
    for (Vertex v = 0; v < n; ++v) {
      if (!in_x[v]) continue;
      st.x.push_back(v);
      const Vertex w = m.mate_or_none(v);
      const bool tail = w != kNoVertex && head[w];
      st.in_t_tilde[v] = tail;
      if (head[v]) st.h_tilde.push_back(v);
      if (tail) st.t_tilde.push_back(v);
      if (w == kNoVertex) {
        st.labels[v] = Label::Seed;
        if (head[v]) st.seed_in_head = true;
      } else if (head[v] && tail) {
        st.labels[v] = Label::Both;
        st.b.push_back(v);
      } else if (head[v]) {
        st.labels[v] = Label::Head;
        st.h.push_back(v);
      } else if (tail) {
        st.labels[v] = Label::Tail;
        st.t.push_back(v);
      } else if (k >= 1) {
        throw std::logic_error("matched vertex " + std::to_string(v) + " of X_" + std::to_string(k) +
                               " is neither head nor tail");
      }
      for (Vertex u : g.neighbors(v))
        if (!in_x[u]) {
          ++st.exit_edges;
          if (schedule.forbids(k, v, u)) ++st.forbidden_exit_edges;
        }
    }

    // X_{k+1}: pairs entered from S or T~_k through a non-forbidden edge.
    VertexMask next = in_x;
    bool grew = false;
    for (Vertex y = 0; y < n; ++y) {
      if (!in_x[y] || !(st.labels[y] == Label::Seed || st.in_t_tilde[y])) continue;
      for (Vertex v : g.neighbors(y)) {
        const Vertex w = m.mate_or_none(v);
        if (in_x[v] || w == kNoVertex || schedule.forbids(k, y, v)) continue;
        if (w == y) throw std::logic_error("exit edge is a matching edge");
        if (!next[v]) grew = true;
        next[v] = next[w] = 1;
      }
    }
    const auto size = static_cast<int>(st.x.size());
    levels.push_back(std::move(st));
    if (options.stop_when_stable && !grew && 2 * k - 1 >= size - 1) break;
    in_x = std::move(next);
  }

  if (options.check_tt_lemma) {
    for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
      const auto& cur = levels[k];
      const auto& nxt = levels[k + 1];
      auto tail_or_seed = [&](Vertex v) { return cur.labels[v] == Label::Tail || cur.labels[v] == Label::Seed; };
      for (const Edge& e : g.edges()) {
        if (!tail_or_seed(e.u) || !tail_or_seed(e.v)) continue;
        if (!nxt.head_tilde(e.u) && !nxt.head_tilde(e.v))
          throw std::logic_error("T-T edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                 ") has no endpoint in H~ at level " + std::to_string(k + 1));
      }
    }
  }
  return levels;
}

std::vector<FrontierState> grow_frontier(const Graph& g, const Matching& m, std::span<const Vertex> seeds,
                                         const ForbiddenSchedule& schedule, int max_level) {
  FrontierOptions options;
  options.max_level = max_level;
  return grow_frontier(g, m, seeds, schedule, options);
}

std::optional<AugmentingResult> shortest_augmenting_path(const Graph& g, const Matching& m,
                                                         std::span<const Vertex> seeds, int depth_cap) {
  if (depth_cap < 1 || depth_cap % 2 == 0)
    throw Error(ErrorCode::InvalidParams, "depth cap must be odd and positive");
  validate_matching(g, m);
  const VertexSet s = checked_seeds(g, m, seeds);
  detail::AltEngine engine(g);
  engine.set_matching(m);
  engine.target_unmatched();
  auto path = engine.shortest(s, depth_cap);
  if (!path) return std::nullopt;
  AugmentingResult result{AlternatingPath{std::move(*path)}, 0};
  result.length = result.path.length();
  return result;
}

std::optional<AlternatingPath> shortest_odd_path(const Graph& g, const Matching& m,
                                                 std::span<const Vertex> sources, Vertex target,
                                                 const VertexMask* region, int cap) {
  if (target < 0 || target >= g.vertex_count()) throw Error(ErrorCode::IndexOutOfRange, "target out of range");
  VertexSet s(sources.begin(), sources.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  detail::AltEngine engine(g);
  engine.set_matching(m);
  engine.set_region(region);
  engine.target_single(target);
  auto path = engine.shortest(s, cap);
  if (!path) return std::nullopt;
  return AlternatingPath{std::move(*path)};
}

}  // namespace augpath
