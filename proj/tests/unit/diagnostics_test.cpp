#include <algorithm>
#include <optional>

#include "augpath/alt_search.hpp"
#include "augpath/diagnostics.hpp"
#include "augpath/error.hpp"
#include "augpath/generators.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace augpath;
using namespace augpath::testing;

namespace {

struct FrontierRun {
  Graph g;
  Matching m;
  VertexSet seeds;
  std::vector<FrontierState> levels;
};

FrontierRun make_run(const Graph& g, const Matching& m) {
  FrontierRun r{g, m, m.unmatched_vertices(), {}};
  FrontierOptions opt;
  opt.max_level = g.vertex_count() / 2 + 1;
  r.levels = grow_frontier(g, m, r.seeds, ForbiddenSchedule{}, opt);
  return r;
}

// First (seed, level) on random 3-regular n=40 graphs with partial matchings
// where some vertex is tough.
struct ToughFixture {
  FrontierRun run;
  int level = 0;
  VertexSet tough;
};

const ToughFixture& first_tough() {
  static const ToughFixture fx = [] {
    for (std::uint64_t seed = 1; seed < 500; ++seed) {
      const Graph g = random_regular(40, 3, seed);
      SplitMix64 rng(seed);
      FrontierRun run = make_run(g, random_partial_matching(g, rng, 0.2));
      if (run.seeds.empty()) continue;
      for (int n = 0; n + 1 < static_cast<int>(run.levels.size()); ++n) {
        VertexSet t = tough_vertices(g, run.levels, n);
        if (!t.empty()) return ToughFixture{std::move(run), n, std::move(t)};
      }
    }
    throw std::runtime_error("no tough fixture found");
  }();
  return fx;
}

}  // namespace

TEST(ToughVertices, NoneWithoutB) {
  const Graph g = path_graph(6);
  const FrontierRun r = make_run(g, matching_of(g, {{1, 2}, {3, 4}}));
  for (int n = 0; n + 1 < static_cast<int>(r.levels.size()); ++n) {
    if (r.levels[n].b.empty()) {
      EXPECT_TRUE(tough_vertices(g, r.levels, n).empty());
      EXPECT_TRUE(classify_tough(g, r.m, r.levels, n, 1.0).tough.empty());
    }
  }
}

TEST(ToughVertices, MatchesDefinitionByOracle) {
  const ToughFixture& fx = first_tough();
  const FrontierRun& r = fx.run;
  const int n = fx.level;
  const auto reach = oracle_alternating_reach(r.g, r.m, r.seeds, 2 * n + 1, &r.levels[n + 1].in_x);
  VertexSet expected;
  for (Vertex x = 0; x < r.g.vertex_count(); ++x) {
    const Label l = r.levels[n].labels[x];
    if (l != Label::Tail && l != Label::Seed) continue;
    bool near_b = false;
    for (Vertex y : r.g.neighbors(x)) near_b |= r.levels[n].is_both(y);
    if (near_b && reach.odd[x] < 0) expected.push_back(x);
  }
  EXPECT_EQ(fx.tough, expected);
  // A vertex of T_n next to B_n that does have a short odd path is not tough.
  for (Vertex x = 0; x < r.g.vertex_count(); ++x)
    if (r.levels[n].is_tail(x) && reach.odd[x] >= 0)
      EXPECT_FALSE(std::binary_search(fx.tough.begin(), fx.tough.end(), x));
}

TEST(ComputeFamily, StructureOnFirstTough) {
  const ToughFixture& fx = first_tough();
  const FrontierRun& r = fx.run;
  const int n = fx.level;
  std::vector<VertexSet> families;
  for (Vertex x : fx.tough) {
    const VertexSet fam = compute_family(r.g, r.m, r.levels, x, n);
    EXPECT_FALSE(fam.empty());
    EXPECT_TRUE(std::includes(r.levels[n].b.begin(), r.levels[n].b.end(), fam.begin(), fam.end()));
    // The family contains a B_n neighbor of x.
    bool has_neighbor = false;
    for (Vertex y : r.g.neighbors(x)) has_neighbor |= std::binary_search(fam.begin(), fam.end(), y);
    EXPECT_TRUE(has_neighbor);
    families.push_back(fam);
  }
  for (std::size_t i = 0; i < families.size(); ++i)
    for (std::size_t j = i + 1; j < families.size(); ++j) {
      VertexSet both;
      std::set_intersection(families[i].begin(), families[i].end(), families[j].begin(), families[j].end(),
                            std::back_inserter(both));
      EXPECT_TRUE(both.empty());
    }
}

TEST(ComputeFamily, NotToughRejected) {
  const ToughFixture& fx = first_tough();
  const FrontierRun& r = fx.run;
  for (Vertex x = 0; x < r.g.vertex_count(); ++x)
    if (!std::binary_search(fx.tough.begin(), fx.tough.end(), x)) {
      EXPECT_THROW_CODE(compute_family(r.g, r.m, r.levels, x, fx.level), NotTough);
      break;
    }
}

TEST(FamilySchedule, StartsEmptyAndContained) {
  const ToughFixture& fx = first_tough();
  const FrontierRun& r = fx.run;
  for (Vertex x : fx.tough) {
    const FxSchedule s = family_schedule(r.g, r.m, r.levels, x);
    ASSERT_FALSE(s.entries.empty());
    EXPECT_TRUE(s.entries[0].fx.empty());
    EXPECT_EQ(s.n0, first_tail_time(r.levels, x, static_cast<int>(r.levels.size()) - 1));
    EXPECT_TRUE(s.containment_failures.empty());
    EXPECT_GT(s.tough_levels, 0);
    for (std::size_t k = 1; k < s.entries.size(); ++k) {
      EXPECT_TRUE(std::includes(s.entries[k].fx.begin(), s.entries[k].fx.end(), s.entries[k - 1].fx.begin(),
                                s.entries[k - 1].fx.end()));
      EXPECT_EQ(s.entries[k].n_k, s.entries[k - 1].m_k + 2 * static_cast<int>(k - 1));
    }
  }
}

TEST(FamilySchedule, NeverToughRejected) {
  const Graph g = path_graph(6);
  const FrontierRun r = make_run(g, matching_of(g, {{1, 2}, {3, 4}}));
  EXPECT_THROW_CODE(family_schedule(g, r.m, r.levels, 0), NeverTough);
}

TEST(InvariantTrace, RequiresCertificate) {
  const Graph g = random_regular(20, 3, 1);
  SplitMix64 rng(1);
  const FrontierRun r = make_run(g, random_partial_matching(g, rng, 0.3));
  EXPECT_THROW_CODE(invariant_trace(g, r.m, r.levels, DiagnosticsOptions{}), HypothesisUnchecked);
}

TEST(InvariantTrace, MeasureIdentities) {
  int plain = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = random_regular(40, 3, seed);
    SplitMix64 rng(seed);
    const FrontierRun r = make_run(g, random_partial_matching(g, rng, 0.2));
    if (r.seeds.empty()) continue;
    DiagnosticsOptions opt;
    opt.c0 = 0.5;
    const InvariantTrace tr = invariant_trace(g, r.m, r.levels, opt);
    bool any_tough = false;
    for (const LevelRecord& rec : tr.levels) any_tough |= !rec.tough.empty();
    for (const LevelRecord& rec : tr.levels) {
      const double base = static_cast<double>(rec.x_size + rec.b_size) / 40.0;
      EXPECT_NEAR(rec.i_value, base + rec.sum_e / 80.0, 1e-12);
      EXPECT_NEAR(rec.j_value, base + rec.sum_f / 80.0, 1e-12);
      if (!any_tough) {
        EXPECT_EQ(rec.sum_e, 0.0);
        EXPECT_EQ(rec.sum_f, 0.0);
        EXPECT_DOUBLE_EQ(rec.i_value, rec.j_value);
      }
    }
    plain += !any_tough;
  }
  EXPECT_GT(plain, 0);
}

TEST(InvariantTrace, HalfHypothesisGatesFlag) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = random_regular(40, 3, seed);
    SplitMix64 rng(seed);
    const FrontierRun r = make_run(g, random_partial_matching(g, rng, 0.2));
    if (r.seeds.empty()) continue;
    DiagnosticsOptions opt;
    opt.c0 = 0.5;
    opt.admissible = true;
    const InvariantTrace tr = invariant_trace(g, r.m, r.levels, opt);
    EXPECT_EQ(tr.disjointness_failures, 0);
    EXPECT_EQ(tr.outside_b_failures, 0);
    EXPECT_EQ(tr.empty_family_failures, 0);
    EXPECT_EQ(tr.adjacency_failures, 0);
    EXPECT_EQ(tr.e_bound_failures, 0);
    EXPECT_EQ(tr.fx_containment_failures, 0);
    for (const LevelRecord& rec : tr.levels) {
      if (2 * rec.x_size > static_cast<std::size_t>(g.vertex_count())) EXPECT_FALSE(rec.flagged);
      if (rec.flagged) EXPECT_TRUE(rec.hyp_half && rec.hyp_no_short_path && rec.hyp_budget && rec.hyp_exit_fraction);
    }
  }
}

TEST(Constants, Formulas) {
  EXPECT_DOUBLE_EQ(c1_constant(0.5, 3), 4.0 * 3 * 4 / 0.5);
  EXPECT_DOUBLE_EQ(growth_delta(1.0, 3), 1.0 / (128.0 * 27 * 64));
  EXPECT_EQ(c3_constant(2, 100), 1.0);
  EXPECT_EQ(c3_constant(4, 100), 2.0);
}

TEST(Intertwined, DisjointCase) {
  // p = 0-1-2-3-4 and q = 0-5-6-4-3 share only x = 0 and the edge 3-4.
  std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 5}, {5, 6}, {4, 6}};
  const Graph g = Graph::simple(7, e);
  const Matching m = matching_of(g, {{1, 2}, {3, 4}, {5, 6}});
  const AlternatingPath p{{0, 1, 2, 3, 4}};
  const AlternatingPath q{{0, 5, 6, 4, 3}};
  const IntertwinedResult r = intertwined_paths_reduce(g, m, p, q);
  EXPECT_EQ(r.x_prime, 0);
  EXPECT_EQ(r.u, (VertexSet{3, 4, 5, 6}));
  EXPECT_EQ(r.bound, 4 + 2 * 4 - 3);
  EXPECT_LE(r.max_total, r.bound);
  EXPECT_EQ(r.pairs.size(), 4u);
}

TEST(Intertwined, SharedGoodAndBadDoubleEdges) {
  // q re-uses the matched edge 1-2 of p in p's direction (good), then
  // crosses to the end of p.
  std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 7}, {7, 8}, {6, 8}};
  const Graph g = Graph::simple(9, e);
  const Matching m = matching_of(g, {{1, 2}, {3, 4}, {5, 6}, {7, 8}});
  const AlternatingPath p{{0, 1, 2, 3, 4, 5, 6}};
  const AlternatingPath q{{0, 1, 2, 7, 8, 6, 5}};
  const IntertwinedResult r = intertwined_paths_reduce(g, m, p, q);
  EXPECT_EQ(r.x_prime, 2);
  EXPECT_EQ(r.u, (VertexSet{5, 6, 7, 8}));
  EXPECT_LE(r.max_total, r.bound);
  VertexMask allowed(9, 0);
  for (Vertex v : p.vertices) allowed[v] = 1;
  for (Vertex v : r.u) allowed[v] = 1;
  const std::vector<Vertex> x{0};
  const auto reach = oracle_alternating_reach(g, m, x, 20, &allowed);
  for (const auto& pair : r.pairs) {
    EXPECT_GE(reach.odd[pair.z], 0);
    EXPECT_GE(reach.even[pair.z], 0);
    EXPECT_TRUE(is_alternating(g, m, pair.odd));
    EXPECT_TRUE(is_alternating(g, m, pair.even));
  }
}

TEST(Intertwined, BadInput) {
  std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 5}, {5, 6}, {4, 6}};
  const Graph g = Graph::simple(7, e);
  const Matching m = matching_of(g, {{1, 2}, {3, 4}, {5, 6}});
  const AlternatingPath q{{0, 5, 6, 4, 3}};
  EXPECT_THROW_CODE(intertwined_paths_reduce(g, m, AlternatingPath{{0, 1, 2, 3}}, q), BadInput);
  EXPECT_THROW_CODE(intertwined_paths_reduce(g, m, AlternatingPath{{0, 1, 2, 3, 4}}, AlternatingPath{{0, 5, 6}}),
                    BadInput);
}
