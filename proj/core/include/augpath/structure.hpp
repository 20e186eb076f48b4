#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "augpath/graph.hpp"

namespace augpath {

inline constexpr int kTutteExhaustiveCap = 14;
inline constexpr int kMinCutCap = 4096;

struct TutteWitness {
  VertexSet y;
  std::int64_t odd_components = 0;
  // odd_components - |Y|; positive certifies that no perfect matching exists.
  std::int64_t deficiency = 0;
};

struct TutteScan {
  TutteWitness best;  // maximum deficiency found
  bool exhaustive = true;
};

std::int64_t count_odd_components(const Graph& g, const VertexMask& removed);

// Exhaustive over all Y when n <= subset_cap (ties: lexicographically
// smallest Y); otherwise a heuristic scan over the empty set, single vertices
// and open neighborhoods, flagged non-exhaustive.  force_exhaustive makes the
// cap a hard limit (TooLarge above it).
TutteScan tutte_scan(const Graph& g, int subset_cap = kTutteExhaustiveCap, bool force_exhaustive = false);

struct CliqueDecomposition {
  std::vector<VertexSet> cliques;  // sorted by smallest member
  std::vector<Vertex> external;    // per vertex, the neighbor outside its clique
};

// Succeeds when every vertex lies in exactly one d-clique, the cliques
// partition V and each vertex has exactly one edge leaving its clique.
std::optional<CliqueDecomposition> clique_decomposition(const Graph& g);

// The external edges of the decomposition, a perfect matching.
std::optional<Matching> clique_matching(const Graph& g);

struct MinCut {
  std::int64_t value = 0;
  VertexSet side;  // proper nonempty side attaining value
};

// Global minimum edge cut by Stoer-Wagner.  Throws TooLarge above cap.
MinCut min_cut(const Graph& g, int cap = kMinCutCap);

}  // namespace augpath
