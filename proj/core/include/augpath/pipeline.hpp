#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "augpath/graph.hpp"

namespace augpath {

// One stage k of the staged construction: M_k is obtained from M_{k-1} by
// flipping augmenting paths of length <= 2k+1 until none remains.
struct StageTrace {
  int stage = 0;
  Rational eps_before;  // unmatched fraction entering the stage
  Rational eps;         // unmatched fraction of M_k
  int flips = 0;
  std::int64_t changed_edges = 0;  // edges whose status differs in M_{k-1}, M_k
  int max_len = 0;                 // longest flipped path, 0 without flips
  // Length of the shortest augmenting path when the stage starts, if it is
  // at most 2k+1; 0 otherwise.
  int entry_shortest = 0;
  Rational churn_partial_sum;  // sum over j <= k of (2j+3) eps_j
};

struct StageResult {
  Matching matching;
  StageTrace trace;
};

// Seeds are taken in ascending order; each unmatched seed is searched with
// bound 2k+1 and the path found is flipped at once.  Passes repeat until
// one makes no flip, which re-checks every seed.  Assumes m_prev has no
// augmenting path of length <= 2k-1.
StageResult build_stage(const Graph& g, const Matching& m_prev, int k);

struct PipelineOptions {
  int max_stage = 1 << 20;
  bool keep_matchings = false;
  // Called after every stage with the trace and M_k.
  std::function<void(const StageTrace&, const Matching&)> on_stage;
};

struct PipelineResult {
  Matching matching;
  std::vector<StageTrace> traces;
  std::vector<Matching> matchings;  // M_0, M_1, ... when kept
  // Status changes per edge, indexed like Graph::edges().
  std::vector<std::int32_t> edge_changes;
  // "perfect", "maximum" (no augmenting path remains) or "max_stage".
  std::string stop_reason;
};

// Runs stages 0, 1, ... from the empty matching.  A stage without flips is
// recorded as such; when one occurs the exact shortest augmenting length L
// is computed and the stages below (L-1)/2 are recorded as empty without
// rerunning their searches.
PipelineResult run_pipeline(const Graph& g, const PipelineOptions& options);
PipelineResult run_pipeline(const Graph& g, int max_stage);

struct DecayFit {
  double c_hat = 0.0;  // slope of (2k+1) against log^3(1/eps_k)
  double intercept = 0.0;
  double r2 = 0.0;
  std::vector<double> residuals;
  std::size_t points = 0;
};

// Fits over stages with eps_k > 0.  Throws InsufficientData with fewer
// than three such stages.
DecayFit decay_fit(const std::vector<StageTrace>& traces);

// CSV columns: stage,eps,flips,changed_edges,max_len,churn_partial_sum
void write_trace_csv(std::ostream& out, const std::vector<StageTrace>& traces);

}  // namespace augpath
