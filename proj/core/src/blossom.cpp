#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "augpath/alt_search.hpp"

namespace augpath {

namespace {

// Edmonds' search from a single root with union-find bases.
class BlossomSearch {
 public:
  BlossomSearch(const Graph& g, std::vector<Vertex>& mate)
      : g_(g),
        mate_(mate),
        n_(g.vertex_count()),
        base_(static_cast<std::size_t>(n_)),
        parent_(static_cast<std::size_t>(n_)),
        label_(static_cast<std::size_t>(n_)),
        seen_(static_cast<std::size_t>(n_), 0) {}

  // Path root..end if one exists from root, otherwise empty.
  std::vector<Vertex> search(Vertex root) {
    std::iota(base_.begin(), base_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), kNoVertex);
    std::fill(label_.begin(), label_.end(), kUnlabeled);
    queue_.clear();
    label_[root] = kOuter;
    queue_.push_back(root);
    while (!queue_.empty()) {
      const Vertex x = queue_.front();
      queue_.pop_front();
      for (Vertex y : g_.neighbors(x)) {
        if (label_[y] == kUnlabeled) {
          label_[y] = kInner;
          parent_[y] = x;
          if (mate_[y] == kNoVertex) return trace(y);
          label_[mate_[y]] = kOuter;
          queue_.push_back(mate_[y]);
        } else if (label_[y] == kOuter && find(x) != find(y)) {
          const Vertex l = lca(find(x), find(y));
          contract(x, y, l);
          contract(y, x, l);
        }
      }
    }
    return {};
  }

 private:
  static constexpr std::uint8_t kUnlabeled = 0, kOuter = 1, kInner = 2;

  Vertex find(Vertex v) {
    Vertex r = v;
    while (base_[r] != r) r = base_[r];
    while (base_[v] != r) {
      const Vertex next = base_[v];
      base_[v] = r;
      v = next;
    }
    return r;
  }

  Vertex lca(Vertex x, Vertex y) {
    ++stamp_;
    for (;; std::swap(x, y)) {
      if (x == kNoVertex) continue;
      if (seen_[x] == stamp_) return x;
      seen_[x] = stamp_;
      x = mate_[x] == kNoVertex ? kNoVertex : find(parent_[mate_[x]]);
    }
  }

  void contract(Vertex x, Vertex y, Vertex l) {
    while (find(x) != l) {
      parent_[x] = y;
      y = mate_[x];
      if (label_[y] == kInner) {
        label_[y] = kOuter;
        queue_.push_back(y);
      }
      if (const Vertex bx = find(x); bx != l) base_[bx] = l;
      if (const Vertex by = find(y); by != l) base_[by] = l;
      x = parent_[y];
    }
  }

  std::vector<Vertex> trace(Vertex y) {
    std::vector<Vertex> path;
    while (y != kNoVertex) {
      const Vertex x = parent_[y];
      path.push_back(y);
      path.push_back(x);
      y = mate_[x];
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  const Graph& g_;
  std::vector<Vertex>& mate_;
  Vertex n_;
  std::vector<Vertex> base_, parent_;
  std::vector<std::uint8_t> label_;
  std::vector<std::uint32_t> seen_;
  std::uint32_t stamp_ = 0;
  std::deque<Vertex> queue_;
};

std::vector<Vertex> mates_of(const Matching& m) {
  std::vector<Vertex> mate(static_cast<std::size_t>(m.size()));
  for (Vertex v = 0; v < m.size(); ++v) mate[v] = m.mate_or_none(v);
  return mate;
}

}  // namespace

std::optional<AlternatingPath> blossom_augment(const Graph& g, const Matching& m) {
  validate_matching(g, m);
  std::vector<Vertex> mate = mates_of(m);
  BlossomSearch search(g, mate);
  for (Vertex r = 0; r < g.vertex_count(); ++r) {
    if (mate[r] != kNoVertex) continue;
    auto vertices = search.search(r);
    if (vertices.empty()) continue;
    AlternatingPath path{std::move(vertices)};
    if (!is_augmenting(g, m, path)) throw std::logic_error("blossom search produced a non-augmenting walk");
    return path;
  }
  return std::nullopt;
}

Matching maximum_matching(const Graph& g, const Matching& start) {
  validate_matching(g, start);
  std::vector<Vertex> mate = mates_of(start);
  BlossomSearch search(g, mate);
  // A root without an augmenting path never gets one later, so one pass
  // over the roots suffices.
  for (Vertex r = 0; r < g.vertex_count(); ++r) {
    if (mate[r] != kNoVertex) continue;
    const auto path = search.search(r);
    for (std::size_t i = 0; i + 1 < path.size(); i += 2) {
      mate[path[i]] = path[i + 1];
      mate[path[i + 1]] = path[i];
    }
  }
  Matching out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (mate[v] != kNoVertex && v < mate[v]) out.match(v, mate[v]);
  return out;
}

Matching maximum_matching(const Graph& g) {
  // Greedy start keeps the number of searches small.
  Matching m(g.vertex_count());
  for (const Edge& e : g.edges())
    if (!m.is_matched(e.u) && !m.is_matched(e.v)) m.match(e.u, e.v);
  return maximum_matching(g, m);
}

}  // namespace augpath
