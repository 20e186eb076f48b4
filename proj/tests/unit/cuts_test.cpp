#include <numeric>

#include "augpath/cuts.hpp"
#include "augpath/error.hpp"
#include "augpath/generators.hpp"
#include "augpath/structure.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace augpath;
using namespace augpath::testing;

namespace {

Graph two_k4() {
  std::vector<Edge> e;
  for (Vertex base : {0, 4})
    for (Vertex i = 0; i < 4; ++i)
      for (Vertex j = i + 1; j < 4; ++j) e.push_back({base + i, base + j});
  return build_graph(8, e);
}

}  // namespace

TEST(EdgeBoundary, Examples) {
  const std::vector<Vertex> single{0};
  EXPECT_EQ(edge_boundary(complete_graph(4), single), 3);
  const std::vector<Vertex> arc{0, 1, 2};
  EXPECT_EQ(edge_boundary(cycle_graph(6), arc), 2);
  // Outer 5-cycle of the Petersen fixture.
  const std::vector<Vertex> five{0, 1, 2, 3, 4};
  EXPECT_EQ(edge_boundary(petersen_graph(), five), 5);
}

TEST(EdgeBoundary, ComplementSymmetric) {
  const Graph g = random_regular(12, 3, 9);
  SplitMix64 rng(5);
  for (int t = 0; t < 50; ++t) {
    VertexMask h(12, 0);
    for (auto& b : h) b = rng.below(2);
    VertexMask c(12, 0);
    for (int i = 0; i < 12; ++i) c[i] = !h[i];
    EXPECT_EQ(edge_boundary(g, h), edge_boundary(g, c));
  }
}

TEST(ExactExpansion, Examples) {
  EXPECT_EQ(exact_expansion(complete_graph(4)).value, Rational(4, 1));
  const auto c6 = exact_expansion(cycle_graph(6));
  EXPECT_EQ(c6.value, Rational(4, 3));
  EXPECT_EQ(c6.argmin, (VertexSet{0, 1, 2}));
  EXPECT_EQ(exact_expansion(two_k4()).value, Rational(0, 1));
  EXPECT_THROW_CODE(exact_expansion(random_regular(30, 3, 1)), TooLarge);
}

TEST(SpectralExpansion, Examples) {
  const auto k4 = spectral_expansion_lower(complete_graph(4));
  EXPECT_NEAR(k4.lambda2, -1.0, 1e-6);
  EXPECT_NEAR(k4.c0_spectral_lower, 4.0, 1e-6);
  const auto c6 = spectral_expansion_lower(cycle_graph(6));
  EXPECT_NEAR(c6.lambda2, 1.0, 1e-6);
  EXPECT_GT(c6.c0_spectral_lower, 0.0);
  EXPECT_LT(c6.c0_spectral_lower, 4.0 / 3.0);
  EXPECT_THROW_CODE(spectral_expansion_lower(two_k4()), NotConnected);
}

TEST(SpectralExpansion, NeverExceedsExact) {
  for (const auto& f : small_regular_fixtures()) {
    const auto rep = expansion_report(f.graph);
    ASSERT_TRUE(rep.c0_exact.has_value());
    EXPECT_LE(rep.c0_spectral_lower, rep.c0_exact->to_double() + 1e-9) << f.name;
  }
}

TEST(MinOddCut, Examples) {
  const auto pet = min_odd_cut(petersen_graph());
  ASSERT_TRUE(pet);
  EXPECT_EQ(pet->boundary, 5);
  const auto prism = min_odd_cut(prism_graph());
  ASSERT_TRUE(prism);
  EXPECT_EQ(prism->boundary, 3);
  EXPECT_EQ(prism->size, 3);
  EXPECT_EQ(edge_boundary(prism_graph(), prism->subset), 3);
  // No odd H with 3 <= |H| <= n-3 exists on four vertices.
  EXPECT_FALSE(min_odd_cut(complete_graph(4)).has_value());
}

TEST(MinOddCut, BelowPathUpperBound) {
  for (const auto& f : small_regular_fixtures()) {
    const auto cut = min_odd_cut(f.graph);
    if (!cut) continue;
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    const Graph& g = f.graph;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      for (Vertex a : g.neighbors(v))
        for (Vertex b : g.neighbors(v)) {
          if (a >= b) continue;
          std::vector<Vertex> h{v, a, b};
          std::sort(h.begin(), h.end());
          best = std::min(best, edge_boundary(g, h));
        }
    EXPECT_LE(cut->boundary, best) << f.name;
  }
}

TEST(MinOddCut, HeuristicIsUpperBound) {
  for (const auto& f : small_regular_fixtures()) {
    const auto exact = min_odd_cut(f.graph);
    const auto heur = min_odd_cut_heuristic(f.graph);
    if (!exact) continue;
    ASSERT_TRUE(heur) << f.name;
    EXPECT_GE(heur->boundary, exact->boundary) << f.name;
    EXPECT_EQ(edge_boundary(f.graph, heur->subset), heur->boundary);
    EXPECT_FALSE(heur->exact);
  }
}

TEST(Admissibility, Examples) {
  const Graph pet = petersen_graph();
  const auto p = is_admissible(pet, exact_expansion(pet).value);
  EXPECT_TRUE(p.admissible);
  EXPECT_EQ(p.mode, "exact");
  const Graph prism = prism_graph();
  const auto q = is_admissible(prism, exact_expansion(prism).value);
  EXPECT_FALSE(q.admissible);
  ASSERT_TRUE(q.odd_cut);
  EXPECT_EQ(q.odd_cut->boundary, 3);
  const Graph c6 = cycle_graph(6);
  EXPECT_FALSE(is_admissible(c6, exact_expansion(c6).value).admissible);
}

// For odd d each K_d is an odd set with boundary d.  For even d the cliques
// are even and no K_d witness exists.
TEST(Admissibility, OddDegreeCliqueChainsNeverAdmissible) {
  for (int d : {3, 5, 7})
    for (int k : {2, 4, 6}) {
      const Graph g = prism_clique_chain(k, d);
      const auto rep = is_admissible(g, 0.1);
      EXPECT_FALSE(rep.admissible) << k << "x" << d;
      ASSERT_TRUE(rep.odd_cut);
      EXPECT_LE(rep.odd_cut->boundary, d);
      const auto dec = clique_decomposition(g);
      ASSERT_TRUE(dec);
      EXPECT_EQ(edge_boundary(g, dec->cliques[0]), d);
    }
}

TEST(BestCutFamily, Examples) {
  const Graph prism = prism_graph();
  const auto dec = clique_decomposition(prism);
  ASSERT_TRUE(dec);
  EXPECT_TRUE(best_cut_family_check(prism, dec->cliques).ok);
  const Graph c8 = cycle_graph(8);
  EXPECT_TRUE(best_cut_family_check(c8, {{0, 1, 2, 3}, {2, 3, 4, 5}}).ok);
  EXPECT_TRUE(best_cut_family_check(c8, {{0, 1, 2, 3}, {0, 1, 2, 3}}).ok);
}

TEST(BestCutFamily, RejectsNonMinimumInput) {
  EXPECT_THROW_CODE(best_cut_family_check(cycle_graph(8), {{0, 2}}), NotBestCut);
}
