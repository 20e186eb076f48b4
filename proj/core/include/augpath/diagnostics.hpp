#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "augpath/alt_search.hpp"
#include "augpath/graph.hpp"

namespace augpath {

// Instrumentation of one frontier run: a matching m, seeds S (unmatched)
// and the sealed levels 0..H returned by grow_frontier.  "Moments" are
// level indices.  Toughness at n needs level n+1, so it is defined for
// n < H only.

enum class Phase : std::uint8_t { None, Dormant, Active };
const char* to_string(Phase phase);

// Classes of tough vertices: large family (TB), small and expanding (TE),
// small and not expanding (TG).
enum class ToughClass : std::uint8_t { Large, Expanding, Growing };
const char* to_string(ToughClass c);

struct FxEntry {
  int n_k = 0;
  int m_k = -1;  // -1 when no such moment occurs within the run
  VertexSet fx;  // FX_k
};

struct ToughRecord {
  Vertex x = kNoVertex;
  int level = 0;
  int first_tail_time = 0;  // min{k : x in T_k or S}
  int age = 0;
  VertexSet family;
  bool expanding = false;
  ToughClass cls = ToughClass::Growing;
  int e_count = 0;  // e_n(x)
  int f_count = 0;  // f_n(x)
  Phase phase = Phase::None;
  int counter = 0;  // c(n)
  std::size_t fx_size = 0;
};

// Every vertex of T_n or S adjacent to B_n and outside H~_{n+1}.
VertexSet tough_vertices(const Graph& g, const std::vector<FrontierState>& levels, int n);

// min{k : x in T_k or S}, or -1 if never.
int first_tail_time(const std::vector<FrontierState>& levels, Vertex x, int upto);

// Greatest fixpoint of pruning from X_n \ {x}: y survives while it has an
// odd and an even alternating path from x inside the survivors plus x,
// with total length at most 2a(x)+1.  Throws NotTough.
VertexSet compute_family(const Graph& g, const Matching& m, const std::vector<FrontierState>& levels,
                         Vertex x, int n);

struct ToughClassification {
  std::vector<ToughRecord> tough;  // TT, ascending by vertex
  VertexSet not_tough;             // TM: the rest of T_n and S
};

// Tough vertices at n with families; class Large when the family has at
// least `large_threshold` vertices, else Expanding or Growing.  Counters,
// phase and schedule fields are left at their defaults.
ToughClassification classify_tough(const Graph& g, const Matching& m, const std::vector<FrontierState>& levels,
                                   int n, double large_threshold);

struct FxSchedule {
  Vertex x = kNoVertex;
  int n0 = 0;
  std::vector<FxEntry> entries;
  std::vector<Phase> phase;  // per level; None before n0
  std::vector<int> counter;  // c(n) per level, -1 before n0
  // Levels at which x was tough and FX_{c(n)} is not inside F_n(x).
  std::vector<int> containment_failures;
  int tough_levels = 0;
};

// FX_0 = {} at n_0 (first tail time); m_k is the first m > n_k with at most
// d edges leaving FX_k + x that do not end in B_m \ FX_k; FX_{k+1} adds the
// matched pairs of B_{m_k} that end an alternating path from x of length at
// most 2k+2 whose other vertices lie in FX_k; n_{k+1} = m_k + 2k.
// Throws NeverTough when x is tough at no level.
FxSchedule family_schedule(const Graph& g, const Matching& m, const std::vector<FrontierState>& levels,
                           Vertex x);

struct DiagnosticsOptions {
  // c0 lower bound; required (HypothesisUnchecked otherwise).
  std::optional<double> c0;
  // Standing admissibility assumption; hypotheses are never flagged without it.
  bool admissible = false;
  // Families are computed only while ||X_n|| <= family_cap.
  std::size_t family_cap = 60;
  // Use "no augmenting path of length <= 2n+1" instead of 2n-1.
  bool strict_path_hypothesis = false;
  // Forbidden schedule the levels were grown with.
  const ForbiddenSchedule* schedule = nullptr;
  // Build FX schedules and f_n, J(n).
  bool track_schedules = true;
};

struct LevelRecord {
  int level = 0;
  std::size_t x_size = 0;
  std::size_t b_size = 0;
  double sum_e = 0.0;
  double sum_f = 0.0;
  double i_value = 0.0;  // (||X|| + ||B|| + sum_e / 2) / N
  double j_value = 0.0;  // (||X|| + ||B|| + sum_f / 2) / N
  bool families_complete = true;
  // Hypotheses at n: half, no short augmenting path, |E_k| <= d|S|,
  // non-forbidden exit fraction.
  bool hyp_half = false;
  bool hyp_no_short_path = false;
  bool hyp_budget = false;
  bool hyp_exit_fraction = false;
  bool flagged = false;
  // Growth check I(n+1) >= (1+delta) I(n); meaningful when `checked`.
  bool checked = false;
  bool growth_ok = true;
  double growth_ratio = 0.0;
  std::vector<ToughRecord> tough;
};

struct InvariantTrace {
  int d = 0;
  Vertex n_vertices = 0;
  double c0 = 0.0;
  double eps = 0.0;
  double c1 = 0.0;
  double c3 = 0.0;
  double delta = 0.0;
  double f_bound = 0.0;  // explicit bound on f_n
  std::int64_t block_k = 0;
  std::int64_t warmup_n0 = 0;
  int shortest_augmenting = 0;  // 0 when none within the run
  std::vector<LevelRecord> levels;
  std::vector<FxSchedule> schedules;

  // Structural checks over instrumented levels.
  std::int64_t families_checked = 0;
  std::int64_t disjointness_failures = 0;
  std::int64_t outside_b_failures = 0;
  std::int64_t empty_family_failures = 0;
  std::int64_t adjacency_failures = 0;  // not exactly one tough neighbor
  std::int64_t e_bound_failures = 0;
  std::int64_t fx_containment_failures = 0;
  std::int64_t flagged_levels = 0;
  std::int64_t growth_failures = 0;
  // Family-size lower bound ||FX_{c(n)}|| >= (c0^2/16d^4)(1+c0^3/128d^6)^c(n)
  // while tough and ||F|| < N/2; reported only.
  std::int64_t corollary_checked = 0;
  std::int64_t corollary_failures = 0;
};

// Constants of the growth argument.
double growth_delta(double c0, int d);
double c1_constant(double c0, int d);
double c3_constant(std::size_t unmatched, Vertex n);
double f_bound(double c0, int d, double eps, double c3);
std::int64_t block_length(double c0, int d, double f_bound_value);
std::int64_t warmup_length(double c0, int d, double eps);

// Runs all diagnostics on one frontier run.  Throws HypothesisUnchecked
// without a positive c0.
InvariantTrace invariant_trace(const Graph& g, const Matching& m, const std::vector<FrontierState>& levels,
                               const DiagnosticsOptions& options);

// Two even alternating paths p, q from the same x ending in the same matched
// edge from opposite directions (p ends v,w and q ends w,v).  Builds U, a
// subset of q containing v and w, and for every z in U an odd and an even
// alternating path from x to z inside U and p.
struct IntertwinedPair {
  Vertex z = kNoVertex;
  AlternatingPath odd;
  AlternatingPath even;
};

struct IntertwinedResult {
  Vertex x_prime = kNoVertex;
  VertexSet u;
  std::vector<IntertwinedPair> pairs;
  int max_total = 0;  // largest |odd| + |even| over U
  int bound = 0;      // |q| + 2|p| - 3
};

// Throws BadInput on a parity or endpoint mismatch or non-alternating input.
IntertwinedResult intertwined_paths_reduce(const Graph& g, const Matching& m, const AlternatingPath& p,
                                           const AlternatingPath& q);

}  // namespace augpath
