#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "augpath/graph.hpp"

namespace augpath {

// Per-level forbidden edge sets E_0, E_1, ...; levels not given are empty.
class ForbiddenSchedule {
 public:
  ForbiddenSchedule() = default;

  void set_level(int k, std::vector<Edge> edges);
  bool forbids(int k, Vertex u, Vertex v) const;
  std::size_t level_size(int k) const;
  int level_count() const { return static_cast<int>(levels_.size()); }
  // ||E_k|| <= d * ||S|| for all k < upto.
  bool within_budget(int d, std::size_t seed_count, int upto) const;
  // Throws InvalidParams unless every listed edge is an edge of g.
  void validate(const Graph& g) const;

 private:
  std::vector<std::vector<Edge>> levels_;  // normalized, sorted
};

enum class Label : std::uint8_t { Outside, Seed, Head, Tail, Both };

const char* to_string(Label label);

// One sealed level k of the frontier recursion.
//   X_k       grown set (S plus matched pairs)
//   H~_k      ends of odd alternating paths from S inside X_k, length <= 2k-1
//   T~_k      ends of even alternating paths from S inside X_k, 2 <= length <= 2k
//   H = H~ \ T~,  T = T~ \ H~,  B = H~ & T~
// Forbidden edges restrict only the growth of X, never the paths used for
// the classification.
struct FrontierState {
  int level = 0;
  VertexSet seeds;
  std::vector<Label> labels;  // per vertex
  VertexMask in_x, in_h_tilde, in_t_tilde;
  VertexSet x, h, t, b, h_tilde, t_tilde;
  // Edges from X_k to its complement, and how many of them are in E_k.
  std::int64_t exit_edges = 0;
  std::int64_t forbidden_exit_edges = 0;
  // Some seed lies in H~_k: an augmenting path of length <= 2k-1 inside X_k.
  bool seed_in_head = false;

  bool in(Vertex v) const { return in_x[v] != 0; }
  bool head_tilde(Vertex v) const { return in_h_tilde[v] != 0; }
  bool tail_tilde(Vertex v) const { return in_t_tilde[v] != 0; }
  bool is_both(Vertex v) const { return labels[v] == Label::Both; }
  bool is_tail(Vertex v) const { return labels[v] == Label::Tail; }
};

struct FrontierOptions {
  int max_level = 0;
  // Stop once X and the labels can no longer change: X_{k+1} = X_k and
  // 2k-1 is at least the largest possible path length inside X_k.
  bool stop_when_stable = true;
  // Check the T-T edge lemma between consecutive levels and throw
  // std::logic_error on a violation.
  bool check_tt_lemma = true;
};

// Levels 0..max_level (fewer when stable).  Throws SeedMatched when a seed
// is matched and InvalidParams for a malformed seed list or schedule.
std::vector<FrontierState> grow_frontier(const Graph& g, const Matching& m, std::span<const Vertex> seeds,
                                         const ForbiddenSchedule& schedule, const FrontierOptions& options);
std::vector<FrontierState> grow_frontier(const Graph& g, const Matching& m, std::span<const Vertex> seeds,
                                         const ForbiddenSchedule& schedule, int max_level);

struct AugmentingResult {
  AlternatingPath path;
  int length = 0;
};

// Minimum-length augmenting path starting in S with length <= depth_cap
// (odd, >= 1); the lexicographically smallest vertex sequence among those.
// Throws SeedMatched / InvalidParams on bad input; absence is nullopt.
std::optional<AugmentingResult> shortest_augmenting_path(const Graph& g, const Matching& m,
                                                         std::span<const Vertex> seeds, int depth_cap);

// Shortest odd alternating path (starting with a non-matching edge) from a
// source set to `target`, using only vertices of `region` (nullptr: all),
// with length <= cap.  Sources may be matched; their matching edge is never
// the first edge.
std::optional<AlternatingPath> shortest_odd_path(const Graph& g, const Matching& m,
                                                 std::span<const Vertex> sources, Vertex target,
                                                 const VertexMask* region, int cap);

// Augmenting path from any unmatched vertex via Edmonds' blossom search,
// roots tried in ascending order.  Not necessarily shortest.
std::optional<AlternatingPath> blossom_augment(const Graph& g, const Matching& m);

// Maximum matching by repeated blossom augmentation from `start`.
Matching maximum_matching(const Graph& g, const Matching& start);
Matching maximum_matching(const Graph& g);

}  // namespace augpath
