#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "augpath/alt_search.hpp"
#include "augpath/cuts.hpp"
#include "augpath/diagnostics.hpp"
#include "augpath/error.hpp"
#include "augpath/experiments.hpp"
#include "augpath/generators.hpp"
#include "augpath/io.hpp"
#include "augpath/pipeline.hpp"
#include "augpath/structure.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;
using namespace augpath;

namespace {

json to_json(const OddCutCertificate& c) {
  return {{"subset", c.subset}, {"size", c.size}, {"boundary", c.boundary}, {"exact", c.exact}};
}

json rational_json(const Rational& r) { return {{"num", r.num}, {"den", r.den}, {"value", r.to_double()}}; }

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidParams, "cannot write " + path);
  return out;
}

GeneratorSpec spec_from_json(const json& j) {
  GeneratorSpec s;
  s.kind = parse_generator_kind(j.at("kind").get<std::string>());
  s.n = j.value("n", 0);
  s.d = j.value("d", 0);
  s.seed = j.value("seed", std::uint64_t{0});
  if (j.contains("params")) s.params = j.at("params").get<std::vector<std::int64_t>>();
  return s;
}

// A spec object may carry "seeds": [..] or "seed_count": k (seeds 1..k)
// instead of a single "seed".
std::vector<GeneratorSpec> load_specs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidParams, "cannot read " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_array()) throw Error(ErrorCode::ParseError, "spec file must be a JSON array");
  std::vector<GeneratorSpec> out;
  for (const json& item : doc) {
    GeneratorSpec base = spec_from_json(item);
    std::vector<std::uint64_t> seeds;
    if (item.contains("seeds")) seeds = item.at("seeds").get<std::vector<std::uint64_t>>();
    if (item.contains("seed_count"))
      for (std::uint64_t s = 1; s <= item.at("seed_count").get<std::uint64_t>(); ++s) seeds.push_back(s);
    if (seeds.empty()) seeds.push_back(base.seed);
    for (std::uint64_t s : seeds) {
      base.seed = s;
      out.push_back(base);
    }
  }
  return out;
}

json expansion_json(const ExpansionReport& r) {
  json j;
  j["c0_exact"] = r.c0_exact ? rational_json(*r.c0_exact) : json(nullptr);
  j["exact_argmin"] = r.exact_argmin;
  j["c0_spectral_lower"] = r.c0_spectral_lower;
  j["lambda2"] = r.lambda2;
  j["residual"] = r.residual;
  j["iterations"] = r.iterations;
  j["method"] = r.method;
  return j;
}

double certified_c0(const Graph& g) {
  if (g.vertex_count() <= kExactExpansionCap) return exact_expansion(g).value.to_double();
  return spectral_expansion_lower(g, 1e-2).c0_spectral_lower;
}

json diag_json(const Graph& g, const Matching& m, std::size_t family_cap, double c0, bool admissible) {
  const VertexSet seeds = m.unmatched_vertices();
  const int cap = g.vertex_count() % 2 ? g.vertex_count() - 2 : g.vertex_count() - 1;
  const auto shortest = shortest_augmenting_path(g, m, seeds, std::max(1, cap));
  FrontierOptions fopt;
  fopt.max_level = shortest ? (shortest->length + 1) / 2 + 1 : g.vertex_count() / 2 + 1;
  const auto levels = grow_frontier(g, m, seeds, ForbiddenSchedule{}, fopt);
  DiagnosticsOptions dopt;
  dopt.c0 = c0;
  dopt.admissible = admissible;
  dopt.family_cap = family_cap;
  const InvariantTrace tr = invariant_trace(g, m, levels, dopt);

  json run;
  run["unmatched"] = seeds.size();
  run["constants"] = {{"c0", tr.c0}, {"eps", tr.eps},           {"c1", tr.c1},       {"c3", tr.c3},
                      {"delta", tr.delta}, {"f_bound", tr.f_bound}, {"K", tr.block_k}, {"n0", tr.warmup_n0}};
  run["shortest_augmenting"] = tr.shortest_augmenting;
  json lv = json::array();
  for (const LevelRecord& r : tr.levels) {
    json tough = json::array();
    for (const ToughRecord& t : r.tough)
      tough.push_back({{"x", t.x},
                       {"age", t.age},
                       {"family_size", t.family.size()},
                       {"class", to_string(t.cls)},
                       {"phase", to_string(t.phase)},
                       {"e", t.e_count},
                       {"f", t.f_count}});
    lv.push_back({{"level", r.level},
                  {"X", r.x_size},
                  {"B", r.b_size},
                  {"I", r.i_value},
                  {"J", r.j_value},
                  {"families_complete", r.families_complete},
                  {"flagged", r.flagged},
                  {"growth_checked", r.checked},
                  {"growth_ok", r.growth_ok},
                  {"tough", tough}});
  }
  run["levels"] = lv;
  run["checks"] = {{"families", tr.families_checked},
                   {"overlaps", tr.disjointness_failures},
                   {"outside_b", tr.outside_b_failures},
                   {"empty_families", tr.empty_family_failures},
                   {"tough_neighbor_violations", tr.adjacency_failures},
                   {"e_bound_violations", tr.e_bound_failures},
                   {"fx_containment_failures", tr.fx_containment_failures},
                   {"flagged_levels", tr.flagged_levels},
                   {"growth_failures", tr.growth_failures},
                   {"corollary_checked", tr.corollary_checked},
                   {"corollary_failures", tr.corollary_failures}};
  return run;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Short augmenting paths in regular expanders"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph in edge-list format");
  std::string kind = "random_regular", out_path;
  Vertex n = 0;
  int d = 0;
  std::uint64_t seed = 0;
  std::vector<std::int64_t> params;
  gen->add_option("--kind", kind, "random_regular|finite_cayley|circulant|prism_clique_chain|cycle|complete");
  gen->add_option("--n", n, "Vertex count");
  gen->add_option("--d", d, "Degree");
  gen->add_option("--seed", seed, "Seed for random kinds");
  gen->add_option("--params", params, "Kind-specific integers");
  gen->add_option("--out", out_path, "Output file (stdout if omitted)");

  // expansion
  auto* expansion = app.add_subcommand("expansion", "Expansion constant report");
  std::string in_path;
  bool exact_only = false, spectral_only = false;
  double tol = 1e-8;
  expansion->add_option("--in", in_path)->required();
  expansion->add_flag("--exact", exact_only, "Brute force only");
  expansion->add_flag("--spectral", spectral_only, "Lanczos bound only");
  expansion->add_option("--tol", tol, "Lanczos residual tolerance");

  // oddcut
  auto* oddcut = app.add_subcommand("oddcut", "Minimum odd cut and admissibility");
  int cap = kExactOddCutCap;
  oddcut->add_option("--in", in_path)->required();
  oddcut->add_option("--cap", cap, "Exact enumeration cap");

  // augscan
  auto* augscan = app.add_subcommand("augscan", "Shortest augmenting path from the unmatched vertices");
  std::string matching_path;
  int len_cap = 0;
  augscan->add_option("--in", in_path)->required();
  augscan->add_option("--matching", matching_path)->required();
  augscan->add_option("--cap", len_cap, "Odd length cap")->required();

  // match
  auto* match = app.add_subcommand("match", "Run the staged matching pipeline");
  int max_stage = 1 << 20;
  std::string trace_path, matching_out;
  match->add_option("--in", in_path)->required();
  match->add_option("--max-stage", max_stage);
  match->add_option("--trace", trace_path, "Trace CSV output");
  match->add_option("--matching-out", matching_out, "Final matching output");

  // diag
  auto* diag = app.add_subcommand("diag", "Frontier diagnostics: tough vertices, families, invariants");
  std::size_t family_cap = 60;
  diag->add_option("--in", in_path)->required();
  diag->add_option("--matching", matching_path, "Matching to instrument (default: every pipeline stage)");
  diag->add_option("--trace", trace_path, "JSON output (stdout if omitted)");
  diag->add_option("--family-cap", family_cap, "Largest X_n for which families are computed");

  // structure
  auto* structure = app.add_subcommand("structure", "Min cut, odd cut, clique matching, Tutte deficiency");
  structure->add_option("--in", in_path)->required();

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Run the scaling sweep");
  std::string spec_path;
  int jobs = 1;
  bool omit_timing = false;
  sweep_cmd->add_option("--spec", spec_path, "JSON array of generator specs")->required();
  sweep_cmd->add_option("--out", out_path, "CSV output")->required();
  sweep_cmd->add_option("--jobs", jobs, "Worker threads");
  sweep_cmd->add_flag("--omit-timing", omit_timing, "Write wall_ms as 0 for byte-stable output");

  // fit
  auto* fit = app.add_subcommand("fit", "Fit L against log^3(1/eps)");
  fit->add_option("--in", in_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      GeneratorSpec spec{parse_generator_kind(kind), n, d, seed, params};
      const Graph g = generate(spec);
      if (out_path.empty())
        write_graph(std::cout, g);
      else
        save_graph(out_path, g);
    } else if (expansion->parsed()) {
      const Graph g = load_graph(in_path);
      ExpansionReport rep;
      if (exact_only) {
        const auto e = exact_expansion(g);
        rep.c0_exact = e.value;
        rep.exact_argmin = e.argmin;
        rep.method = "exact";
      } else if (spectral_only) {
        rep = spectral_expansion_lower(g, tol);
      } else {
        rep = expansion_report(g, tol);
      }
      print(expansion_json(rep));
    } else if (oddcut->parsed()) {
      const Graph g = load_graph(in_path);
      const AdmissibilityReport rep = is_admissible(g, certified_c0(g), cap);
      print({{"admissible", rep.admissible},
             {"mode", rep.mode},
             {"odd_cut", rep.odd_cut ? to_json(*rep.odd_cut) : json(nullptr)}});
    } else if (augscan->parsed()) {
      const Graph g = load_graph(in_path);
      const Matching m = load_matching(matching_path, g);
      const auto r = shortest_augmenting_path(g, m, m.unmatched_vertices(), len_cap);
      json j{{"found", r.has_value()}};
      j["length"] = r ? json(r->length) : json(nullptr);
      j["path"] = r ? json(r->path.vertices) : json(nullptr);
      print(j);
    } else if (match->parsed()) {
      const Graph g = load_graph(in_path);
      const PipelineResult r = run_pipeline(g, max_stage);
      if (!trace_path.empty()) {
        auto out = open_out(trace_path);
        write_trace_csv(out, r.traces);
      }
      if (!matching_out.empty()) {
        auto out = open_out(matching_out);
        write_matching(out, r.matching);
      }
      print({{"stages", r.traces.size()},
             {"matched_edges", r.matching.edge_count()},
             {"perfect", r.matching.is_perfect()},
             {"eps", rational_json(unmatched_fraction(g, r.matching))},
             {"stop_reason", r.stop_reason}});
    } else if (diag->parsed()) {
      const Graph g = load_graph(in_path);
      const double c0 = certified_c0(g);
      const bool admissible = c0 > 0 && is_admissible(g, c0).admissible;
      json runs = json::array();
      if (!matching_path.empty()) {
        runs.push_back(diag_json(g, load_matching(matching_path, g), family_cap, c0, admissible));
      } else {
        PipelineOptions popt;
        popt.keep_matchings = true;
        const PipelineResult r = run_pipeline(g, popt);
        std::set<std::vector<Edge>> seen;
        for (std::size_t k = 0; k < r.matchings.size(); ++k) {
          const Matching& m = r.matchings[k];
          if (m.is_perfect() || !seen.insert(m.pairs()).second) continue;
          json run = diag_json(g, m, family_cap, c0, admissible);
          run["stage"] = k;
          runs.push_back(std::move(run));
        }
      }
      const json doc{{"c0", c0}, {"admissible", admissible}, {"runs", runs}};
      if (trace_path.empty()) {
        print(doc);
      } else {
        auto out = open_out(trace_path);
        out << doc.dump(2) << '\n';
      }
    } else if (structure->parsed()) {
      const Graph g = load_graph(in_path);
      const MinCut mc = min_cut(g);
      const auto odd = g.vertex_count() <= kExactOddCutCap ? min_odd_cut(g) : min_odd_cut_heuristic(g);
      const auto cm = clique_matching(g);
      const TutteScan ts = tutte_scan(g);
      json j;
      j["min_cut"] = {{"size", mc.value}, {"side", mc.side}};
      j["min_odd_cut"] = odd ? to_json(*odd) : json(nullptr);
      json cmj = nullptr;
      if (cm) {
        json pairs = json::array();
        for (const Edge& e : cm->pairs()) pairs.push_back({e.u, e.v});
        cmj = pairs;
      }
      j["clique_matching"] = cmj;
      j["tutte_deficiency"] = ts.best.deficiency;
      j["tutte_witness"] = ts.best.y;
      j["tutte_exhaustive"] = ts.exhaustive;
      print(j);
    } else if (sweep_cmd->parsed()) {
      SweepOptions opt;
      opt.jobs = jobs;
      opt.record_timing = !omit_timing;
      const auto records = sweep(load_specs(spec_path), opt);
      auto out = open_out(out_path);
      write_sweep_csv(out, records);
    } else if (fit->parsed()) {
      std::ifstream in(in_path);
      if (!in) throw Error(ErrorCode::InvalidParams, "cannot read " + in_path);
      const PolylogFit f = fit_polylog(read_sweep_csv(in));
      print({{"C_hat", f.c_hat},
             {"exponent_hat", f.exponent_hat},
             {"r2", f.r2},
             {"r2_loglog", f.r2_loglog},
             {"intercept", f.intercept},
             {"points", f.points}});
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
