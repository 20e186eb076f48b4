#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "augpath/generators.hpp"
#include "augpath/graph.hpp"
#include "augpath/pipeline.hpp"

namespace augpath {

inline constexpr const char* kSweepSchema = "sweep-v1";

// One productive pipeline stage of one graph.  shortest_aug_len is the exact
// shortest augmenting length when the stage starts.
struct ExperimentRecord {
  std::string graph_id;
  Vertex n = 0;
  int d = 0;
  std::uint64_t seed = 0;
  double c0_lower = 0.0;
  Rational eps;
  int shortest_aug_len = 0;
  int stage_k = 0;
  std::int64_t wall_ms = 0;
  bool admissible = false;
  std::string admissibility_mode;
  std::int64_t odd_cut_size = 0;
  std::int64_t odd_cut_boundary = 0;
  VertexSet odd_cut_set;

  friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

struct SweepOptions {
  int jobs = 1;
  int max_stage = 1 << 20;
  bool record_timing = true;
  // Vertex counts up to these caps use exact enumeration.
  int exact_expansion_cap = 16;
  int exact_odd_cut_cap = 20;
  // Lanczos residual tolerance for the spectral c0 bound.
  double spectral_tol = 1e-2;
};

// Generates every graph, certifies c0 and odd-cut admissibility, runs the
// pipeline and records each stage with eps > 0 and at least one flip.
// Output is sorted by (n, d, graph_id, stage_k) whatever the job count.
std::vector<ExperimentRecord> sweep(const std::vector<GeneratorSpec>& specs, const SweepOptions& options);

// Records for one already generated graph; the pipeline run is copied to
// run_out when given.
std::vector<ExperimentRecord> sweep_graph(const Graph& g, const GeneratorSpec& spec, const SweepOptions& options,
                                          PipelineResult* run_out = nullptr);

// CSV with a "# schema: sweep-v1" comment line and the column header
// graph_id,n,d,seed,c0_lower,eps,shortest_aug_len,stage_k,wall_ms,
// admissible,admissibility_mode,odd_cut_size,odd_cut_boundary,odd_cut_set
void write_sweep_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);
// Throws ParseError on a schema or column mismatch.
std::vector<ExperimentRecord> read_sweep_csv(std::istream& in);

struct PolylogFit {
  double c_hat = 0.0;         // slope of L against log^3(1/eps)
  double intercept = 0.0;
  double r2 = 0.0;
  double exponent_hat = 0.0;  // slope of log L against log log(1/eps)
  double r2_loglog = 0.0;
  std::vector<double> residuals;
  std::size_t points = 0;
};

// Fits over admissible records only.  Throws InsufficientData with fewer
// than five distinct eps values.
PolylogFit fit_polylog(const std::vector<ExperimentRecord>& records);

}  // namespace augpath
