#include "augpath/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <istream>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "augpath/cuts.hpp"
#include "augpath/error.hpp"
#include "augpath/pipeline.hpp"
#include "augpath/stats.hpp"

namespace augpath {

namespace {

constexpr const char* kColumns =
    "graph_id,n,d,seed,c0_lower,eps,shortest_aug_len,stage_k,wall_ms,admissible,admissibility_mode,"
    "odd_cut_size,odd_cut_boundary,odd_cut_set";

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(line);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(s), 1);
  return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

}  // namespace

std::vector<ExperimentRecord> sweep_graph(const Graph& g, const GeneratorSpec& spec, const SweepOptions& options,
                                          PipelineResult* run_out) {
  const auto start = std::chrono::steady_clock::now();
  const Vertex n = g.vertex_count();

  ExperimentRecord base;
  base.graph_id = graph_id(spec);
  base.n = n;
  base.d = g.degree();
  base.seed = spec.seed;

  AdmissibilityReport adm;
  if (n <= options.exact_expansion_cap) {
    const Rational c0 = exact_expansion(g, options.exact_expansion_cap).value;
    base.c0_lower = c0.to_double();
    adm = is_admissible(g, c0, options.exact_odd_cut_cap);
  } else {
    base.c0_lower = spectral_expansion_lower(g, options.spectral_tol).c0_spectral_lower;
    adm = is_admissible(g, base.c0_lower, options.exact_odd_cut_cap);
  }
  base.admissible = adm.admissible;
  base.admissibility_mode = adm.mode;
  if (adm.odd_cut) {
    base.odd_cut_size = adm.odd_cut->size;
    base.odd_cut_boundary = adm.odd_cut->boundary;
    base.odd_cut_set = adm.odd_cut->subset;
  }

  const PipelineResult run = run_pipeline(g, options.max_stage);
  const auto elapsed = std::chrono::steady_clock::now() - start;
  base.wall_ms =
      options.record_timing ? std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() : 0;

  std::vector<ExperimentRecord> out;
  for (const StageTrace& t : run.traces) {
    if (t.eps_before.num == 0 || t.flips == 0) continue;
    ExperimentRecord r = base;
    r.eps = t.eps_before;
    r.shortest_aug_len = t.entry_shortest;
    r.stage_k = t.stage;
    if (r.shortest_aug_len > 2 * r.stage_k + 1) throw std::logic_error("recorded length exceeds 2k+1");
    out.push_back(std::move(r));
  }
  if (run_out != nullptr) *run_out = run;
  return out;
}

std::vector<ExperimentRecord> sweep(const std::vector<GeneratorSpec>& specs, const SweepOptions& options) {
  std::vector<std::vector<ExperimentRecord>> results(specs.size());
  std::vector<std::exception_ptr> errors(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      try {
        results[i] = sweep_graph(generate(specs[i]), specs[i], options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(specs.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<ExperimentRecord> out;
  for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
  std::stable_sort(out.begin(), out.end(), [](const ExperimentRecord& a, const ExperimentRecord& b) {
    return std::tie(a.n, a.d, a.graph_id, a.stage_k) < std::tie(b.n, b.d, b.graph_id, b.stage_k);
  });
  return out;
}

void write_sweep_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
  out << "# schema: " << kSweepSchema << '\n' << kColumns << '\n';
  std::ostringstream c0;
  for (const auto& r : records) {
    c0.str("");
    c0.precision(17);
    c0 << r.c0_lower;
    out << r.graph_id << ',' << r.n << ',' << r.d << ',' << r.seed << ',' << c0.str() << ',' << r.eps.to_string()
        << ',' << r.shortest_aug_len << ',' << r.stage_k << ',' << r.wall_ms << ',' << (r.admissible ? 1 : 0)
        << ',' << r.admissibility_mode << ',' << r.odd_cut_size << ',' << r.odd_cut_boundary << ',';
    for (std::size_t i = 0; i < r.odd_cut_set.size(); ++i) out << (i ? " " : "") << r.odd_cut_set[i];
    out << '\n';
  }
}

std::vector<ExperimentRecord> read_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != std::string("# schema: ") + kSweepSchema)
    throw Error(ErrorCode::ParseError, "missing '# schema: " + std::string(kSweepSchema) + "' line");
  if (!std::getline(in, line) || line != kColumns) throw Error(ErrorCode::ParseError, "unexpected CSV header");
  std::vector<ExperimentRecord> out;
  int line_no = 2;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 14) throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 14 fields");
    try {
      ExperimentRecord r;
      r.graph_id = f[0];
      r.n = static_cast<Vertex>(std::stol(f[1]));
      r.d = std::stoi(f[2]);
      r.seed = std::stoull(f[3]);
      r.c0_lower = std::stod(f[4]);
      r.eps = parse_rational(f[5]);
      r.shortest_aug_len = std::stoi(f[6]);
      r.stage_k = std::stoi(f[7]);
      r.wall_ms = std::stoll(f[8]);
      r.admissible = f[9] == "1";
      r.admissibility_mode = f[10];
      r.odd_cut_size = std::stoll(f[11]);
      r.odd_cut_boundary = std::stoll(f[12]);
      std::istringstream set(f[13]);
      for (Vertex v; set >> v;) r.odd_cut_set.push_back(v);
      out.push_back(std::move(r));
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

PolylogFit fit_polylog(const std::vector<ExperimentRecord>& records) {
  std::vector<const ExperimentRecord*> used;
  for (const auto& r : records)
    if (r.admissible && r.eps.num > 0) used.push_back(&r);
  for (const auto* r : used)
    if (!r->admissible) throw std::logic_error("inadmissible record entered the fit");

  std::set<std::pair<std::int64_t, std::int64_t>> distinct;
  for (const auto* r : used) distinct.insert({r->eps.num, r->eps.den});
  if (distinct.size() < 5)
    throw Error(ErrorCode::InsufficientData, "need at least five distinct eps values, have " +
                                                 std::to_string(distinct.size()));

  std::vector<double> x, y, lx, ly;
  for (const auto* r : used) {
    const double inv = std::log(1.0 / r->eps.to_double());
    x.push_back(inv * inv * inv);
    y.push_back(r->shortest_aug_len);
    if (inv > 0.0) {
      lx.push_back(std::log(inv));
      ly.push_back(std::log(static_cast<double>(r->shortest_aug_len)));
    }
  }
  const LinearFit lin = least_squares(x, y);
  const LinearFit log = least_squares(lx, ly);
  PolylogFit fit;
  fit.c_hat = lin.slope;
  fit.intercept = lin.intercept;
  fit.r2 = lin.r2;
  fit.residuals = lin.residuals;
  fit.points = lin.points;
  fit.exponent_hat = log.slope;
  fit.r2_loglog = log.r2;
  return fit;
}

}  // namespace augpath
