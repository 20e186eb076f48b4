#include <algorithm>
#include <numeric>

#include "augpath/alt_search.hpp"
#include "augpath/error.hpp"
#include "augpath/generators.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace augpath;
using namespace augpath::testing;

namespace {

const std::vector<Vertex> kSeed0{0};

}  // namespace

TEST(ShortestAugmenting, K4) {
  const Graph g = complete_graph(4);
  const std::vector<Vertex> s{2};
  const auto r = shortest_augmenting_path(g, matching_of(g, {{0, 1}}), s, 5);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->length, 1);
  EXPECT_EQ(r->path.vertices, (std::vector<Vertex>{2, 3}));
}

TEST(ShortestAugmenting, PathOfFour) {
  const Graph g = path_graph(4);
  const auto r = shortest_augmenting_path(g, matching_of(g, {{1, 2}}), kSeed0, 5);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->length, 3);
  EXPECT_FALSE(shortest_augmenting_path(g, matching_of(g, {{1, 2}}), kSeed0, 1));
}

TEST(ShortestAugmenting, PetersenMatchesOracle) {
  const Graph g = petersen_graph();
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    SplitMix64 rng(seed);
    const Matching m = random_partial_matching(g, rng, 0.4);
    for (Vertex s : m.unmatched_vertices()) {
      const std::vector<Vertex> seeds{s};
      const auto got = shortest_augmenting_path(g, m, seeds, 9);
      const auto want = oracle_enumerate_augmenting(g, m, seeds, 9);
      ASSERT_EQ(got.has_value(), want.has_value());
      if (got) {
        EXPECT_EQ(got->length, *want);
        EXPECT_TRUE(is_augmenting(g, m, got->path));
      }
    }
  }
}

TEST(ShortestAugmenting, Errors) {
  const Graph g = complete_graph(4);
  const Matching m = matching_of(g, {{0, 1}});
  EXPECT_THROW_CODE(shortest_augmenting_path(g, m, kSeed0, 5), SeedMatched);
  const std::vector<Vertex> bad{9};
  EXPECT_THROW_CODE(shortest_augmenting_path(g, m, bad, 5), IndexOutOfRange);
}

TEST(ShortestAugmenting, RelabelingInvariant) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = random_regular(12, 3, seed);
    SplitMix64 rng(seed * 31);
    const Matching m = random_partial_matching(g, rng, 0.5);
    std::vector<Vertex> perm(12);
    std::iota(perm.begin(), perm.end(), 0);
    for (Vertex i = 11; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.push_back(Edge{perm[e.u], perm[e.v]}.normalized());
    const Graph h = build_graph(12, edges);
    Matching mh(12);
    for (const Edge& e : m.pairs()) mh.match(perm[e.u], perm[e.v]);
    const auto s = m.unmatched_vertices();
    std::vector<Vertex> sh;
    for (Vertex v : s) sh.push_back(perm[v]);
    std::sort(sh.begin(), sh.end());
    const auto a = shortest_augmenting_path(g, m, s, 11);
    const auto b = shortest_augmenting_path(h, mh, sh, 11);
    ASSERT_EQ(a.has_value(), b.has_value());
    if (a) EXPECT_EQ(a->length, b->length);
  }
}

TEST(Oracle, TrivialCases) {
  const Graph g = complete_graph(4);
  EXPECT_FALSE(oracle_enumerate_augmenting(g, matching_of(g, {{0, 1}, {2, 3}}), {}, 7));
  EXPECT_FALSE(oracle_enumerate_augmenting(g, matching_of(g, {{0, 1}}), {}, 7));
}

TEST(Frontier, PathExample) {
  const Graph g = path_graph(6);
  const Matching m = matching_of(g, {{1, 2}, {3, 4}});
  const auto levels = grow_frontier(g, m, kSeed0, ForbiddenSchedule{}, 3);
  ASSERT_GE(levels.size(), 3u);
  EXPECT_EQ(levels[0].x, VertexSet{0});
  EXPECT_EQ(levels[1].x, (VertexSet{0, 1, 2}));
  EXPECT_EQ(levels[1].h, VertexSet{1});
  EXPECT_EQ(levels[1].t, VertexSet{2});
  EXPECT_EQ(levels[2].x, (VertexSet{0, 1, 2, 3, 4}));
}

TEST(Frontier, ForbiddenExitBlocksGrowth) {
  const Graph g = path_graph(6);
  const Matching m = matching_of(g, {{1, 2}, {3, 4}});
  ForbiddenSchedule sched;
  sched.set_level(0, {{0, 1}});
  const auto levels = grow_frontier(g, m, kSeed0, sched, 2);
  ASSERT_GE(levels.size(), 2u);
  EXPECT_EQ(levels[1].x, VertexSet{0});
}

TEST(Frontier, MatchesOracleAndMonotone) {
  for (const auto& f : small_regular_fixtures()) {
    SplitMix64 rng(f.graph.vertex_count() * 7 + 1);
    const Matching m = random_partial_matching(f.graph, rng, 0.5);
    const auto seeds = m.unmatched_vertices();
    if (seeds.empty()) continue;
    FrontierOptions opt;
    opt.max_level = 6;
    const auto levels = grow_frontier(f.graph, m, seeds, ForbiddenSchedule{}, opt);
    for (std::size_t k = 0; k < levels.size(); ++k) {
      EXPECT_EQ(levels[k].in_x, oracle_frontier(f.graph, m, seeds, 2 * static_cast<int>(k))) << f.name << " " << k;
      if (k > 0) {
        EXPECT_TRUE(std::includes(levels[k].x.begin(), levels[k].x.end(), levels[k - 1].x.begin(),
                                  levels[k - 1].x.end()));
        EXPECT_TRUE(std::includes(levels[k].b.begin(), levels[k].b.end(), levels[k - 1].b.begin(),
                                  levels[k - 1].b.end()));
      }
      if (!levels[k].seed_in_head) EXPECT_EQ(levels[k].h.size(), levels[k].t.size()) << f.name << " " << k;
    }
  }
}

TEST(Blossom, Examples) {
  const Graph g = complete_graph(4);
  const auto p = blossom_augment(g, matching_of(g, {{0, 1}}));
  ASSERT_TRUE(p);
  EXPECT_EQ(std::min(p->front(), p->back()), 2);
  EXPECT_EQ(std::max(p->front(), p->back()), 3);
  EXPECT_FALSE(blossom_augment(g, matching_of(g, {{0, 1}, {2, 3}})));
}

TEST(Blossom, ExistenceAgreesWithOracle) {
  constexpr int kCap = 15;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Graph g = random_regular(50, 3, seed);
    SplitMix64 rng(seed + 1000);
    const Matching m = random_partial_matching(g, rng, 0.15);
    const auto b = blossom_augment(g, m);
    const auto o = oracle_enumerate_augmenting(g, m, m.unmatched_vertices(), kCap);
    if (o) ASSERT_TRUE(b) << seed;
    if (b) {
      EXPECT_TRUE(is_augmenting(g, m, *b));
      if (!o) EXPECT_GT(b->length(), kCap) << seed;
    }
  }
}

TEST(Blossom, MaximumMatchingSizeMatchesOracle) {
  for (const auto& f : small_regular_fixtures())
    EXPECT_EQ(maximum_matching(f.graph).edge_count(), oracle_maximum_matching_size(f.graph)) << f.name;
}
