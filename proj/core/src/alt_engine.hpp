#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "augpath/graph.hpp"

namespace augpath::detail {

// Exact shortest odd alternating path search.
//
// A path p0 p1 ... pL starts at a source with a non-matching edge and
// alternates; it succeeds when it reaches a target at an odd position.
// Search is iterative deepening DFS over self-avoiding paths, in ascending
// source and neighbor order, so the first path found at the smallest length
// is the lexicographically smallest of that length.
//
// Pruning:
//  * h[v][parity]: walk distance to a target in the parity-expanded graph,
//    ignoring self-avoidance, hence a lower bound on the remaining length.
//  * dead[v]: largest remaining budget with which the subtree rooted at v
//    (at an even position) is known to fail.  It is recorded only when no
//    candidate in that subtree was rejected because it lay on the path
//    before v, so the failure does not depend on how v was reached.  A
//    (vertex, parity) memo without that condition would be unsound: a
//    vertex can fail under one prefix and succeed under another.
class AltEngine {
 public:
  static constexpr int kInf = std::numeric_limits<int>::max() / 4;

  enum class TargetMode { Unmatched, Mask };

  explicit AltEngine(const Graph& g);

  // Installs the matching; clears the region (all vertices allowed).
  void set_matching(const Matching& m);
  // Restricts paths to vertices with allowed[v] != 0; nullptr allows all.
  void set_region(const VertexMask* allowed);
  // Targets: every allowed unmatched vertex, or an explicit mask.
  void target_unmatched();
  void target_mask(const VertexMask& targets);
  void target_single(Vertex t);

  // Heuristic tables are built lazily on the first search with a bound of
  // at least this value; below it plain DFS is used.
  void set_heuristic_threshold(int bound) { heuristic_threshold_ = bound; }
  // Throws BudgetExceeded once a single search expands this many states
  // (0 = unlimited).
  void set_node_budget(std::int64_t budget) { node_budget_ = budget; }

  // Smallest odd length L <= cap (searched from the heuristic lower bound
  // upward) and its lexicographically smallest path.
  // min_bound skips bounds already known to fail.
  std::optional<std::vector<Vertex>> shortest(std::span<const Vertex> sources, int cap, int min_bound = 1);
  // One DFS accepting any path of length <= bound.
  std::optional<std::vector<Vertex>> search(std::span<const Vertex> sources, int bound);
  // Heuristic lower bound on the length from any of the sources (kInf if no
  // target is reachable even ignoring self-avoidance).
  int lower_bound(std::span<const Vertex> sources);

  // Applies an augmenting path to the internal matching.
  void flip(std::span<const Vertex> path);
  const std::vector<Vertex>& mate() const { return mate_; }

  std::int64_t nodes_expanded() const { return nodes_; }

 private:
  bool allowed(Vertex v) const { return region_ == nullptr || (*region_)[v] != 0; }
  bool is_target(Vertex v) const {
    return mode_ == TargetMode::Unmatched ? mate_[v] == kNoVertex && allowed(v) : target_[v] != 0;
  }
  void invalidate();
  void build_heuristic();
  int h_even(Vertex v) const { return use_h_ ? heven_[v] : 1; }
  int h_odd(Vertex v) const { return use_h_ ? hodd_[v] : (is_target(v) ? 0 : 2); }
  bool run(std::span<const Vertex> sources, int bound);
  // Returns true on success; otherwise *blocker receives the smallest path
  // index of a vertex that rejected a candidate in the subtree.
  bool dfs(Vertex v, int depth, int bound, int* blocker);

  const Graph& g_;
  std::vector<Vertex> mate_;
  const VertexMask* region_ = nullptr;
  TargetMode mode_ = TargetMode::Unmatched;
  VertexMask target_;

  bool use_h_ = false;
  bool h_valid_ = false;
  int heuristic_threshold_ = 7;
  std::vector<int> hodd_, heven_;

  std::vector<int> dead_;
  std::vector<std::uint32_t> dead_epoch_;
  std::uint32_t epoch_ = 1;

  std::vector<int> pos_;  // path index or -1
  std::vector<Vertex> path_;
  std::int64_t nodes_ = 0;
  std::int64_t node_budget_ = 0;
};

}  // namespace augpath::detail
