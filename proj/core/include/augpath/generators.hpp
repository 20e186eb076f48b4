#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "augpath/graph.hpp"

namespace augpath {

// SplitMix64 (Steele, Lea, Flood 2014).  Fixed so recorded fixtures stay
// reproducible across platforms and standard-library versions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) by rejection of the biased low range.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      const std::uint64_t x = next();
      if (x >= threshold) return x % bound;
    }
  }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

enum class GeneratorKind { RandomRegular, FiniteCayley, Circulant, PrismCliqueChain, Cycle, Complete };

std::string to_string(GeneratorKind kind);
GeneratorKind parse_generator_kind(const std::string& name);

// params by kind:
//   finite_cayley       residues of the (symmetric) generator set
//   circulant           offsets; the set {±s} is used
//   prism_clique_chain  optional clique count k (default n / d)
//   others              unused
struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::RandomRegular;
  Vertex n = 0;
  int d = 0;
  std::uint64_t seed = 0;
  std::vector<std::int64_t> params;
};

inline constexpr int kDefaultRejectionBudget = 10000;

// Simple d-regular graph from the pairing model.  Points are paired one
// uniformly chosen pair at a time; a pair that would create a loop or a
// repeated edge is redrawn, and the whole attempt restarts only when no
// valid pair remains.  Throws InvalidParams when n*d is odd or d >= n and
// RejectionBudgetExceeded after `budget` restarts.
Graph random_regular(Vertex n, int d, std::uint64_t seed, int budget = kDefaultRejectionBudget);

// Cayley graph of Z_n.  Throws AsymmetricGenerators unless the set is
// closed under negation mod n.
Graph finite_cayley(Vertex n, const std::vector<std::int64_t>& generators);

// Cayley graph of Z_n with generator set {±s : s in offsets}.
Graph circulant(Vertex n, const std::vector<std::int64_t>& offsets);

// k disjoint copies of K_d; every vertex gets exactly one edge to another
// clique.  Cliques sit on a ring and exchange floor((d-1)/2) (odd d) or d/2
// (even d) edges with each ring neighbor; for odd d the remaining vertex of
// clique 2t is joined to that of clique 2t+1, so k must be even.  Throws
// InfeasibleParams otherwise or when d < 3 or k < 2.
Graph prism_clique_chain(int k, int d);

Graph cycle_graph(Vertex n);
Graph complete_graph(Vertex n);

Graph generate(const GeneratorSpec& spec);

// Stable identifier, e.g. "random_regular-n1024-d3-s7".
std::string graph_id(const GeneratorSpec& spec);

}  // namespace augpath
