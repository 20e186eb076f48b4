#include <sstream>

#include "augpath/error.hpp"
#include "augpath/generators.hpp"
#include "augpath/io.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace augpath;
using namespace augpath::testing;

TEST(BuildGraph, CompleteGraphOnFour) {
  std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  const Graph g = build_graph(4, e);
  EXPECT_EQ(g.degree(), 3);
  EXPECT_EQ(g.edge_count(), 6u);
  EXPECT_EQ(g, complete_graph(4));
}

TEST(BuildGraph, CycleOnSix) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 6; ++i) e.push_back({i, (i + 1) % 6});
  const Graph g = build_graph(6, e);
  EXPECT_EQ(g.degree(), 2);
  EXPECT_EQ(g, cycle_graph(6));
}

TEST(BuildGraph, Rejections) {
  std::vector<Edge> irregular{{0, 1}, {1, 2}};
  EXPECT_THROW_CODE(build_graph(4, irregular), NotRegular);
  std::vector<Edge> loop{{0, 0}, {1, 2}};
  EXPECT_THROW_CODE(build_graph(3, loop), NonSimple);
  std::vector<Edge> repeated{{0, 1}, {1, 0}};
  EXPECT_THROW_CODE(build_graph(2, repeated), NonSimple);
  std::vector<Edge> range{{0, 5}};
  EXPECT_THROW_CODE(build_graph(2, range), IndexOutOfRange);
}

TEST(BuildGraph, NeighborsSortedAndEdgeIndex) {
  const Graph g = petersen_graph();
  const auto edges = g.edges();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto nb = g.neighbors(v);
    EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    EXPECT_EQ(g.edge_index(edges[i].u, edges[i].v), static_cast<std::int64_t>(i));
    EXPECT_EQ(g.edge_index(edges[i].v, edges[i].u), static_cast<std::int64_t>(i));
  }
  EXPECT_EQ(g.edge_index(0, 0), -1);
}

TEST(FlipAugmenting, PathOfFour) {
  const Graph g = path_graph(4);
  const Matching m = matching_of(g, {{1, 2}});
  const Matching out = flip_augmenting(g, m, AlternatingPath{{0, 1, 2, 3}});
  EXPECT_EQ(out.pairs(), (std::vector<Edge>{{0, 1}, {2, 3}}));
}

TEST(FlipAugmenting, SingleEdgeInK4) {
  const Graph g = complete_graph(4);
  const Matching out = flip_augmenting(g, matching_of(g, {{0, 1}}), AlternatingPath{{2, 3}});
  EXPECT_EQ(out.pairs(), (std::vector<Edge>{{0, 1}, {2, 3}}));
}

TEST(FlipAugmenting, CycleOfSix) {
  const Graph g = cycle_graph(6);
  const Matching out = flip_augmenting(g, matching_of(g, {{1, 2}, {3, 4}}), AlternatingPath{{0, 1, 2, 3, 4, 5}});
  EXPECT_EQ(out.pairs(), (std::vector<Edge>{{0, 1}, {2, 3}, {4, 5}}));
}

TEST(FlipAugmenting, InvolutionAndGrowth) {
  const Graph g = cycle_graph(6);
  const Matching m = matching_of(g, {{1, 2}, {3, 4}});
  const AlternatingPath p{{0, 1, 2, 3, 4, 5}};
  const Matching once = flip_augmenting(g, m, p);
  EXPECT_EQ(once.matched_vertex_count(), m.matched_vertex_count() + 2);
  for (Vertex v = 0; v < 6; ++v)
    if (m.is_matched(v)) EXPECT_TRUE(once.is_matched(v));
  EXPECT_EQ(symmetric_difference(once, p), m);
}

TEST(FlipAugmenting, RejectsNonAugmenting) {
  const Graph g = path_graph(4);
  const Matching m = matching_of(g, {{1, 2}});
  EXPECT_THROW_CODE(flip_augmenting(g, m, AlternatingPath{{0, 1, 2}}), NotAugmenting);
  EXPECT_THROW_CODE(flip_augmenting(g, m, AlternatingPath{{0, 2}}), NotAugmenting);
}

TEST(UnmatchedFraction, Examples) {
  const Graph k4 = complete_graph(4);
  EXPECT_EQ(unmatched_fraction(k4, matching_of(k4, {{0, 1}})), Rational(1, 2));
  EXPECT_EQ(unmatched_fraction(k4, matching_of(k4, {{0, 1}, {2, 3}})), Rational(0, 1));
  const Graph c6 = cycle_graph(6);
  EXPECT_EQ(unmatched_fraction(c6, matching_of(c6, {{1, 2}})), Rational(2, 3));
}

TEST(MatchingValidation, RejectsNonEdgesAndOverlaps) {
  const Graph g = cycle_graph(6);
  std::vector<Edge> non_edge{{0, 3}};
  EXPECT_THROW_CODE(Matching::from_pairs(g, non_edge), InvalidMatching);
  std::vector<Edge> overlap{{0, 1}, {1, 2}};
  EXPECT_THROW_CODE(Matching::from_pairs(g, overlap), InvalidMatching);
}

TEST(Rational, LowestTermsAndOrder) {
  EXPECT_EQ(Rational(6, 8), Rational(3, 4));
  EXPECT_EQ(Rational(3, 4).to_string(), "3/4");
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(1, 6) + Rational(1, 3), Rational(1, 2));
}

TEST(GraphIo, RoundTripIsByteExact) {
  for (const auto& f : small_regular_fixtures()) {
    const std::string text = to_edge_list(f.graph);
    std::istringstream in(text);
    const Graph back = read_graph(in);
    EXPECT_EQ(back, f.graph) << f.name;
    EXPECT_EQ(to_edge_list(back), text) << f.name;
  }
}

TEST(GraphIo, CommentsAndErrors) {
  std::istringstream ok("# triangle\n3 3 2\n0 1\n# inline\n0 2\n1 2\n");
  EXPECT_EQ(read_graph(ok), cycle_graph(3));
  std::istringstream short_file("3 3 2\n0 1\n");
  EXPECT_THROW_CODE(read_graph(short_file), ParseError);
  std::istringstream junk("3 x 2\n");
  EXPECT_THROW_CODE(read_graph(junk), ParseError);
}

TEST(MatchingIo, RoundTrip) {
  const Graph g = petersen_graph();
  SplitMix64 rng(3);
  const Matching m = random_partial_matching(g, rng, 0.3);
  std::ostringstream out;
  write_matching(out, m);
  std::istringstream in(out.str());
  EXPECT_EQ(read_matching(in, g), m);
}
