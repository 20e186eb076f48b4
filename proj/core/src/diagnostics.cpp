#include "augpath/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "alt_engine.hpp"
#include "augpath/error.hpp"

namespace augpath {

const char* to_string(Phase phase) {
  switch (phase) {
    case Phase::None: return "none";
    case Phase::Dormant: return "dormant";
    case Phase::Active: return "active";
  }
  return "?";
}

const char* to_string(ToughClass c) {
  switch (c) {
    case ToughClass::Large: return "TB";
    case ToughClass::Expanding: return "TE";
    case ToughClass::Growing: return "TG";
  }
  return "?";
}

namespace {

bool tail_or_seed(const FrontierState& st, Vertex v) {
  return st.labels[v] == Label::Tail || st.labels[v] == Label::Seed;
}

void check_level(const std::vector<FrontierState>& levels, int n) {
  if (n < 0 || n + 1 >= static_cast<int>(levels.size()))
    throw Error(ErrorCode::InvalidParams, "toughness at level " + std::to_string(n) + " needs level " +
                                              std::to_string(n + 1));
}

bool is_tough(const Graph& g, const std::vector<FrontierState>& levels, int n, Vertex x) {
  const auto& st = levels[n];
  if (!tail_or_seed(st, x) || levels[n + 1].head_tilde(x)) return false;
  for (Vertex w : g.neighbors(x))
    if (st.is_both(w)) return true;
  return false;
}

bool is_expanding(const Graph& g, const FrontierState& st, const VertexSet& family) {
  const VertexMask in_f = to_mask(st.labels.size(), family);
  for (Vertex v : family)
    for (Vertex w : g.neighbors(v))
      if (!in_f[w] && st.is_both(w)) return true;
  return false;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet family_unchecked(const Graph& g, const Matching& m, const FrontierState& st, Vertex x, int age) {
  const auto nz = static_cast<std::size_t>(g.vertex_count());
  VertexMask region = st.in_x;
  region[x] = 1;
  detail::AltEngine engine(g);
  engine.set_matching(m);
  const Vertex src[1] = {x};
  const int budget = 2 * age;  // L_odd(y) + L_odd(mate y) <= 2a

  auto odd_length = [&](Vertex target, int cap) -> int {
    if (cap < 1) return -1;
    engine.set_region(&region);
    engine.target_single(target);
    auto path = engine.shortest(src, cap);
    return path ? static_cast<int>(path->size()) - 1 : -1;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex y = 0; y < static_cast<Vertex>(nz); ++y) {
      if (!region[y] || y == x) continue;
      const Vertex w = m.mate_or_none(y);
      bool keep = w != kNoVertex && region[w] && w != x;
      if (keep) {
        const int lo = odd_length(y, budget - 1);
        keep = lo > 0 && odd_length(w, budget - lo) > 0;
      }
      if (!keep) {
        region[y] = 0;
        changed = true;
      }
    }
  }
  region[x] = 0;
  return to_set(region);
}

using FamilyLookup = std::function<const VertexSet*(int n)>;

FxSchedule schedule_impl(const Graph& g, const Matching& m, const std::vector<FrontierState>& levels, Vertex x,
                         const FamilyLookup& family_at) {
  const int last = static_cast<int>(levels.size()) - 1;
  const int d = g.max_degree();
  FxSchedule out;
  out.x = x;
  std::vector<int> tough_at;
  for (int n = 0; n < last; ++n)
    if (is_tough(g, levels, n, x)) tough_at.push_back(n);
  if (tough_at.empty()) throw Error(ErrorCode::NeverTough, "vertex " + std::to_string(x) + " is never tough");
  out.n0 = first_tail_time(levels, x, last);
  out.tough_levels = static_cast<int>(tough_at.size());

  const auto nz = static_cast<std::size_t>(g.vertex_count());
  detail::AltEngine engine(g);
  engine.set_matching(m);
  const Vertex src[1] = {x};

  FxEntry cur{out.n0, -1, {}};
  for (int k = 0;; ++k) {
    VertexMask in_w = to_mask(nz, cur.fx);
    in_w[x] = 1;
    for (int mm = cur.n_k + 1; mm <= last; ++mm) {
      const auto& st = levels[mm];
      int leaving = 0;
      for (Vertex a = 0; a < static_cast<Vertex>(nz); ++a) {
        if (!in_w[a]) continue;
        for (Vertex b : g.neighbors(a))
          if (!in_w[b] && !st.is_both(b)) ++leaving;
      }
      if (leaving <= d) {
        cur.m_k = mm;
        break;
      }
    }
    out.entries.push_back(cur);
    if (cur.m_k < 0) break;

    const auto& st = levels[cur.m_k];
    VertexSet next = cur.fx;
    VertexMask region = in_w;
    for (Vertex v : st.b) {
      if (in_w[v]) continue;
      const Vertex w = m.mate_or_none(v);
      if (w == kNoVertex || in_w[w] || w < v) continue;
      bool reach = false;
      for (Vertex end : {v, w}) {
        region[end] = 1;
        engine.set_region(&region);
        engine.target_single(end);
        reach = engine.search(src, 2 * k + 1).has_value();
        region[end] = 0;
        if (reach) break;
      }
      if (reach) {
        next.push_back(v);
        next.push_back(w);
      }
    }
    std::sort(next.begin(), next.end());
    const int n_next = cur.m_k + 2 * k;
    if (n_next > last) break;
    cur = FxEntry{n_next, -1, std::move(next)};
  }

  out.phase.assign(levels.size(), Phase::None);
  out.counter.assign(levels.size(), -1);
  for (int n = out.n0; n <= last; ++n) {
    std::size_t i = 0;
    while (i + 1 < out.entries.size() && out.entries[i + 1].n_k <= n) ++i;
    const auto& e = out.entries[i];
    out.counter[n] = static_cast<int>(i);
    out.phase[n] = (e.m_k < 0 || n < e.m_k) ? Phase::Dormant : Phase::Active;
  }

  for (int n : tough_at) {
    const VertexSet* family = family_at(n);
    if (family == nullptr) continue;
    const auto& fx = out.entries[static_cast<std::size_t>(out.counter[n])].fx;
    if (!is_subset(fx, *family)) out.containment_failures.push_back(n);
  }
  return out;
}

}  // namespace

VertexSet tough_vertices(const Graph& g, const std::vector<FrontierState>& levels, int n) {
  check_level(levels, n);
  VertexSet out;
  for (Vertex v : levels[n].x)
    if (is_tough(g, levels, n, v)) out.push_back(v);
  return out;
}

int first_tail_time(const std::vector<FrontierState>& levels, Vertex x, int upto) {
  for (int k = 0; k <= upto && k < static_cast<int>(levels.size()); ++k)
    if (tail_or_seed(levels[k], x)) return k;
  return -1;
}

VertexSet compute_family(const Graph& g, const Matching& m, const std::vector<FrontierState>& levels, Vertex x,
                         int n) {
  check_level(levels, n);
  if (x < 0 || x >= g.vertex_count()) throw Error(ErrorCode::IndexOutOfRange, "vertex out of range");
  if (!is_tough(g, levels, n, x))
    throw Error(ErrorCode::NotTough, "vertex " + std::to_string(x) + " is not tough at " + std::to_string(n));
  const int age = n - first_tail_time(levels, x, n);
  return family_unchecked(g, m, levels[n], x, age);
}

ToughClassification classify_tough(const Graph& g, const Matching& m, const std::vector<FrontierState>& levels,
                                   int n, double large_threshold) {
  check_level(levels, n);
  ToughClassification out;
  const auto& st = levels[n];
  for (Vertex x : st.x) {
    if (!tail_or_seed(st, x)) continue;
    if (!is_tough(g, levels, n, x)) {
      out.not_tough.push_back(x);
      continue;
    }
    ToughRecord r;
    r.x = x;
    r.level = n;
    r.first_tail_time = first_tail_time(levels, x, n);
    r.age = n - r.first_tail_time;
    r.family = family_unchecked(g, m, st, x, r.age);
    r.expanding = is_expanding(g, st, r.family);
    if (static_cast<double>(r.family.size()) >= large_threshold)
      r.cls = ToughClass::Large;
    else
      r.cls = r.expanding ? ToughClass::Expanding : ToughClass::Growing;
    out.tough.push_back(std::move(r));
  }
  return out;
}

FxSchedule family_schedule(const Graph& g, const Matching& m, const std::vector<FrontierState>& levels,
                           Vertex x) {
  std::map<int, VertexSet> cache;
  return schedule_impl(g, m, levels, x, [&](int n) -> const VertexSet* {
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_family(g, m, levels, x, n)).first;
    return &it->second;
  });
}

double growth_delta(double c0, int d) {
  const double dd = d;
  return c0 * c0 * c0 / (128.0 * dd * dd * dd * (dd + 1) * (dd + 1) * (dd + 1));
}

double c1_constant(double c0, int d) { return 4.0 * d * (d + 1) / c0; }

double c3_constant(std::size_t unmatched, Vertex n) {
  (void)n;
  return unmatched == 2 ? 1.0 : 2.0;
}

double f_bound(double c0, int d, double eps, double c3) {
  const double d4 = std::pow(static_cast<double>(d), 4);
  const double d6 = std::pow(static_cast<double>(d), 6);
  const double num = std::log(8.0 * c3 * d4 / (eps * c0 * c0));
  const double den = std::log1p(c0 * c0 * c0 / (128.0 * d6));
  const double r = num / den;
  return r * r;
}

std::int64_t block_length(double c0, int d, double f_bound_value) {
  const double dd = d + 1.0;
  const double k = std::floor(24.0 * dd * dd * f_bound_value / c0) + 1.0;
  return std::max<std::int64_t>(2 * (d + 1) + 1, static_cast<std::int64_t>(k));
}

std::int64_t warmup_length(double c0, int d, double eps) {
  const double r = std::log(1.0 / eps) / -std::log1p(-c0 / (4.0 * (d + 1)));
  return 2 * static_cast<std::int64_t>(std::ceil(r));
}

InvariantTrace invariant_trace(const Graph& g, const Matching& m, const std::vector<FrontierState>& levels,
                               const DiagnosticsOptions& options) {
  if (!options.c0 || !(*options.c0 > 0.0))
    throw Error(ErrorCode::HypothesisUnchecked, "a positive c0 certificate is required");
  if (levels.empty()) throw Error(ErrorCode::InvalidParams, "no frontier levels");

  InvariantTrace tr;
  tr.d = g.degree();
  tr.n_vertices = g.vertex_count();
  tr.c0 = *options.c0;
  const double big_n = tr.n_vertices;
  const VertexSet& seeds = levels[0].seeds;
  const std::size_t s_count = seeds.size();
  tr.eps = static_cast<double>(s_count) / big_n;
  tr.c1 = c1_constant(tr.c0, tr.d);
  tr.c3 = c3_constant(s_count, tr.n_vertices);
  tr.delta = growth_delta(tr.c0, tr.d);
  if (s_count > 0) {
    tr.f_bound = f_bound(tr.c0, tr.d, tr.eps, tr.c3);
    tr.block_k = block_length(tr.c0, tr.d, tr.f_bound);
    tr.warmup_n0 = warmup_length(tr.c0, tr.d, tr.eps);
  }

  const int last = static_cast<int>(levels.size()) - 1;
  {
    detail::AltEngine engine(g);
    engine.set_matching(m);
    engine.target_unmatched();
    if (auto p = engine.shortest(seeds, 2 * last + 3)) tr.shortest_augmenting = static_cast<int>(p->size()) - 1;
  }

  // Families per (level, vertex), for levels with ||X_n|| <= cap.
  std::vector<std::map<Vertex, VertexSet>> families(levels.size());
  std::vector<std::map<Vertex, bool>> expanding(levels.size());
  std::vector<VertexSet> tough(levels.size());
  std::vector<bool> computed(levels.size(), false);
  for (int n = 0; n < last; ++n) {
    tough[n] = tough_vertices(g, levels, n);
    const auto& st = levels[n];
    if (st.x.size() > options.family_cap) continue;
    computed[n] = true;
    const VertexMask tough_mask = to_mask(st.labels.size(), tough[n]);
    for (Vertex x : tough[n]) {
      const int age = n - first_tail_time(levels, x, n);
      VertexSet f = family_unchecked(g, m, st, x, age);
      expanding[n][x] = is_expanding(g, st, f);
      ++tr.families_checked;
      if (f.empty()) ++tr.empty_family_failures;
      for (Vertex v : f)
        if (!st.is_both(v)) {
          ++tr.outside_b_failures;
          break;
        }
      VertexSet adjacent;
      const VertexMask in_f = to_mask(st.labels.size(), f);
      for (Vertex v : f)
        for (Vertex w : g.neighbors(v))
          if (!in_f[w] && tough_mask[w]) adjacent.push_back(w);
      std::sort(adjacent.begin(), adjacent.end());
      adjacent.erase(std::unique(adjacent.begin(), adjacent.end()), adjacent.end());
      if (!f.empty() && !(adjacent.size() == 1 && adjacent[0] == x)) ++tr.adjacency_failures;
      families[n].emplace(x, std::move(f));
    }
    for (auto a = families[n].begin(); a != families[n].end(); ++a)
      for (auto b = std::next(a); b != families[n].end(); ++b) {
        VertexSet common;
        std::set_intersection(a->second.begin(), a->second.end(), b->second.begin(), b->second.end(),
                              std::back_inserter(common));
        if (!common.empty()) ++tr.disjointness_failures;
      }
  }

  // FX schedules, phases and f counts.
  std::map<Vertex, std::size_t> schedule_of;
  if (options.track_schedules) {
    VertexSet ever;
    for (int n = 0; n < last; ++n) ever.insert(ever.end(), tough[n].begin(), tough[n].end());
    std::sort(ever.begin(), ever.end());
    ever.erase(std::unique(ever.begin(), ever.end()), ever.end());
    for (Vertex x : ever) {
      auto lookup = [&](int n) -> const VertexSet* {
        auto it = families[n].find(x);
        return it == families[n].end() ? nullptr : &it->second;
      };
      schedule_of[x] = tr.schedules.size();
      tr.schedules.push_back(schedule_impl(g, m, levels, x, lookup));
      tr.fx_containment_failures += static_cast<std::int64_t>(tr.schedules.back().containment_failures.size());
    }
  }

  const double f_threshold = s_count > 0 ? tr.c3 * big_n / static_cast<double>(s_count) : 0.0;
  const double cor_base = tr.c0 * tr.c0 / (16.0 * std::pow(static_cast<double>(tr.d), 4));
  const double cor_rate = 1.0 + tr.c0 * tr.c0 * tr.c0 / (128.0 * std::pow(static_cast<double>(tr.d), 6));

  std::map<Vertex, int> e_count, f_count;
  bool complete = true;
  for (int n = 0; n <= last; ++n) {
    const auto& st = levels[n];
    LevelRecord rec;
    rec.level = n;
    rec.x_size = st.x.size();
    rec.b_size = st.b.size();
    rec.families_complete = complete;
    for (const auto& [x, c] : e_count) rec.sum_e += c;
    for (const auto& [x, c] : f_count) rec.sum_f += c;
    for (const auto& [x, c] : e_count)
      if (c > tr.c1 * tr.c1) ++tr.e_bound_failures;
    rec.i_value = (static_cast<double>(rec.x_size + rec.b_size) + rec.sum_e / 2.0) / big_n;
    rec.j_value = (static_cast<double>(rec.x_size + rec.b_size) + rec.sum_f / 2.0) / big_n;

    if (n < last) {
      for (Vertex x : tough[n]) {
        ToughRecord r;
        r.x = x;
        r.level = n;
        r.first_tail_time = first_tail_time(levels, x, n);
        r.age = n - r.first_tail_time;
        r.e_count = e_count[x];
        r.f_count = f_count[x];
        auto fit = families[n].find(x);
        if (fit != families[n].end()) {
          r.family = fit->second;
          r.expanding = expanding[n][x];
          if (static_cast<double>(r.family.size()) >= tr.c1)
            r.cls = ToughClass::Large;
          else
            r.cls = r.expanding ? ToughClass::Expanding : ToughClass::Growing;
        }
        auto sit = schedule_of.find(x);
        if (sit != schedule_of.end()) {
          const auto& sch = tr.schedules[sit->second];
          r.phase = sch.phase[n];
          r.counter = sch.counter[n];
          if (r.counter >= 0) r.fx_size = sch.entries[static_cast<std::size_t>(r.counter)].fx.size();
          if (fit != families[n].end() && 2 * r.family.size() < static_cast<std::size_t>(tr.n_vertices) &&
              r.counter >= 0) {
            ++tr.corollary_checked;
            if (static_cast<double>(r.fx_size) < cor_base * std::pow(cor_rate, r.counter))
              ++tr.corollary_failures;
          }
        }
        rec.tough.push_back(std::move(r));
      }
      // Counters for moment n feed e_{n+1}, f_{n+1}.
      if (!computed[n]) complete = false;
      for (Vertex x : tough[n]) {
        auto fit = families[n].find(x);
        if (fit == families[n].end()) continue;
        const double size = static_cast<double>(fit->second.size());
        if (size > 0 && size < tr.c1 && expanding[n][x]) ++e_count[x];
        auto sit = schedule_of.find(x);
        if (sit != schedule_of.end() && size < f_threshold && tr.schedules[sit->second].phase[n] == Phase::Active)
          ++f_count[x];
      }

      rec.hyp_half = 2 * rec.x_size <= static_cast<std::size_t>(tr.n_vertices);
      const int limit = options.strict_path_hypothesis ? 2 * n + 1 : 2 * n - 1;
      rec.hyp_no_short_path = tr.shortest_augmenting == 0 || tr.shortest_augmenting > limit;
      rec.hyp_budget = options.schedule == nullptr || options.schedule->within_budget(tr.d, s_count, n + 1);
      const auto allowed_exits = st.exit_edges - st.forbidden_exit_edges;
      rec.hyp_exit_fraction = allowed_exits * (tr.d + 1) >= st.exit_edges;
      rec.flagged = options.admissible && s_count > 0 && rec.hyp_half && rec.hyp_no_short_path &&
                    rec.hyp_budget && rec.hyp_exit_fraction;
    }
    tr.levels.push_back(std::move(rec));
  }

  for (int n = 0; n < last; ++n) {
    auto& rec = tr.levels[n];
    if (!rec.flagged) continue;
    ++tr.flagged_levels;
    const auto& next = tr.levels[n + 1];
    if (!next.families_complete) continue;
    rec.checked = true;
    rec.growth_ratio = rec.i_value > 0 ? next.i_value / rec.i_value : 0.0;
    rec.growth_ok = next.i_value >= (1.0 + tr.delta) * rec.i_value;
    if (!rec.growth_ok) ++tr.growth_failures;
  }
  return tr;
}

}  // namespace augpath
