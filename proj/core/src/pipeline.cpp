#include "augpath/pipeline.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "alt_engine.hpp"
#include "augpath/alt_search.hpp"
#include "augpath/error.hpp"
#include "augpath/stats.hpp"

namespace augpath {

namespace {

Matching to_matching(const std::vector<Vertex>& mate) {
  Matching m(static_cast<Vertex>(mate.size()));
  for (Vertex v = 0; v < static_cast<Vertex>(mate.size()); ++v)
    if (mate[v] != kNoVertex && v < mate[v]) m.match(v, mate[v]);
  return m;
}

std::int64_t unmatched_count(const std::vector<Vertex>& mate) {
  std::int64_t c = 0;
  for (Vertex w : mate) c += w == kNoVertex;
  return c;
}

std::int64_t changed_edges(const std::vector<Vertex>& before, const std::vector<Vertex>& after) {
  std::int64_t c = 0;
  for (Vertex v = 0; v < static_cast<Vertex>(before.size()); ++v) {
    if (before[v] == after[v]) continue;
    if (before[v] != kNoVertex && v < before[v]) ++c;
    if (after[v] != kNoVertex && v < after[v]) ++c;
  }
  return c;
}

// Runs the passes of one stage on the engine's matching.
StageTrace run_stage(const Graph& g, detail::AltEngine& engine, int k, std::vector<std::int32_t>* edge_changes) {
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  const int bound = 2 * k + 1;
  const std::vector<Vertex> before = engine.mate();
  StageTrace trace;
  trace.stage = k;
  trace.eps_before = Rational(unmatched_count(before), n);

  std::vector<Vertex> seeds;
  bool progress = true;
  while (progress) {
    progress = false;
    seeds.clear();
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (engine.mate()[v] == kNoVertex) seeds.push_back(v);
    for (Vertex s : seeds) {
      if (engine.mate()[s] != kNoVertex) continue;
      const Vertex single[] = {s};
      auto path = engine.search(single, bound);
      if (!path) continue;
      const int len = static_cast<int>(path->size()) - 1;
      if (trace.flips == 0) trace.entry_shortest = len;
      trace.max_len = std::max(trace.max_len, len);
      ++trace.flips;
      if (edge_changes)
        for (std::size_t i = 0; i + 1 < path->size(); ++i)
          ++(*edge_changes)[g.edge_index((*path)[i], (*path)[i + 1])];
      engine.flip(*path);
      progress = true;
    }
  }
  trace.eps = Rational(unmatched_count(engine.mate()), n);
  trace.changed_edges = changed_edges(before, engine.mate());
  return trace;
}

}  // namespace

StageResult build_stage(const Graph& g, const Matching& m_prev, int k) {
  if (k < 0) throw Error(ErrorCode::InvalidParams, "stage must be non-negative");
  validate_matching(g, m_prev);
  detail::AltEngine engine(g);
  engine.set_matching(m_prev);
  engine.target_unmatched();
  StageTrace trace = run_stage(g, engine, k, nullptr);
  trace.churn_partial_sum = Rational((2 * k + 3) * trace.eps.num, trace.eps.den);
  return {to_matching(engine.mate()), trace};
}

PipelineResult run_pipeline(const Graph& g, const PipelineOptions& options) {
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  PipelineResult result;
  result.edge_changes.assign(g.edge_count(), 0);
  detail::AltEngine engine(g);
  engine.set_matching(Matching(g.vertex_count()));
  engine.target_unmatched();

  std::int64_t churn_num = 0;  // sum of (2j+3) * unmatched_j, over n
  auto emit = [&](StageTrace trace) {
    churn_num += (2 * trace.stage + 3) * (trace.eps.num * (n / trace.eps.den));
    trace.churn_partial_sum = Rational(churn_num, n);
    Matching m = to_matching(engine.mate());
    if (options.on_stage) options.on_stage(trace, m);
    if (options.keep_matchings) result.matchings.push_back(m);
    result.traces.push_back(std::move(trace));
  };
  auto empty_stage = [&](int k) {
    StageTrace t;
    t.stage = k;
    t.eps_before = t.eps = Rational(unmatched_count(engine.mate()), n);
    return t;
  };

  int k = 0;
  result.stop_reason = "max_stage";
  while (k <= options.max_stage) {
    if (unmatched_count(engine.mate()) == 0) {
      result.stop_reason = "perfect";
      break;
    }
    StageTrace trace = run_stage(g, engine, k, &result.edge_changes);
    if (trace.flips > 0) {
      if (trace.entry_shortest != 2 * k + 1)
        throw std::logic_error("stage " + std::to_string(k) + " found a path of length " +
                               std::to_string(trace.entry_shortest));
      emit(std::move(trace));
      ++k;
      continue;
    }
    emit(std::move(trace));
    // Nothing of length <= 2k+1 remains; find the next productive stage.
    const Matching current = to_matching(engine.mate());
    const auto witness = blossom_augment(g, current);
    if (!witness) {
      result.stop_reason = "maximum";
      break;
    }
    std::vector<Vertex> seeds;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (engine.mate()[v] == kNoVertex) seeds.push_back(v);
    const auto shortest = engine.shortest(seeds, witness->length(), 2 * k + 3);
    if (!shortest) throw std::logic_error("exact search missed an augmenting path found by blossom");
    const int target = (static_cast<int>(shortest->size()) - 2) / 2;
    for (++k; k < target && k <= options.max_stage; ++k) emit(empty_stage(k));
  }
  result.matching = to_matching(engine.mate());
  return result;
}

PipelineResult run_pipeline(const Graph& g, int max_stage) {
  PipelineOptions options;
  options.max_stage = max_stage;
  return run_pipeline(g, options);
}

DecayFit decay_fit(const std::vector<StageTrace>& traces) {
  std::vector<double> x, y;
  for (const StageTrace& t : traces) {
    if (t.eps.num == 0) continue;
    const double l = std::log(1.0 / t.eps.to_double());
    x.push_back(l * l * l);
    y.push_back(2.0 * t.stage + 1.0);
  }
  if (x.size() < 3) throw Error(ErrorCode::InsufficientData, "decay fit needs three stages with eps > 0");
  const LinearFit fit = least_squares(x, y);
  return {fit.slope, fit.intercept, fit.r2, fit.residuals, fit.points};
}

void write_trace_csv(std::ostream& out, const std::vector<StageTrace>& traces) {
  out << "stage,eps,flips,changed_edges,max_len,churn_partial_sum\n";
  const auto old = out.precision(17);
  for (const StageTrace& t : traces)
    out << t.stage << ',' << t.eps.to_double() << ',' << t.flips << ',' << t.changed_edges << ',' << t.max_len
        << ',' << t.churn_partial_sum.to_double() << '\n';
  out.precision(old);
}

}  // namespace augpath
