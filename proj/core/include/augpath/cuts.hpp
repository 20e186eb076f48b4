#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "augpath/graph.hpp"

namespace augpath {

// Measure conventions: for a vertex set A, |A| = ||A|| / n; for an edge set,
// |E| = ||E|| / n.  A graph is a c0-expander when
//   ||E(H, H^c)|| >= c0 * ||H|| * ||H^c|| / n   for every H.

std::int64_t edge_boundary(const Graph& g, std::span<const Vertex> h);
std::int64_t edge_boundary(const Graph& g, const VertexMask& h);

inline constexpr int kExactExpansionCap = 20;
inline constexpr int kExactOddCutCap = 22;

struct ExactExpansion {
  Rational value;
  VertexSet argmin;  // lexicographically smallest minimizer
};

// min over nonempty proper H of n * ||E(H,H^c)|| / (||H|| * ||H^c||).
// Throws TooLarge when n > cap.
ExactExpansion exact_expansion(const Graph& g, int cap = kExactExpansionCap);

struct ExpansionReport {
  std::optional<Rational> c0_exact;
  VertexSet exact_argmin;
  double c0_spectral_lower = 0.0;
  // Upper estimate of the second adjacency eigenvalue (Ritz value plus
  // residual bound).
  double lambda2 = 0.0;
  double residual = 0.0;
  int iterations = 0;
  std::string method;
};

// Lanczos on the adjacency operator restricted to the complement of the
// constant vector.  With lambda2 the second eigenvalue,
//   ||E(H,H^c)|| >= (d - lambda2) * ||H|| * ||H^c|| / n,
// so d - lambda2 is a lower bound on c0.  The reported lambda2 is the top
// Ritz value plus its residual norm, which bounds the distance to the
// nearest eigenvalue; the bound is taken to refer to the top eigenvalue once
// the Ritz value has converged.  Throws NotConnected and NoConvergence.
ExpansionReport spectral_expansion_lower(const Graph& g, double tol = 1e-8, int max_iter = 300);

// Both: spectral report plus c0_exact when n <= exact_cap.
ExpansionReport expansion_report(const Graph& g, double tol = 1e-8, int exact_cap = kExactExpansionCap);

struct OddCutCertificate {
  VertexSet subset;
  std::int64_t size = 0;
  std::int64_t boundary = 0;
  bool exact = true;
};

// Minimum boundary over odd H with 3 <= |H| <= n-3; nullopt when no such H
// exists (n < 6).  Ties go to the lexicographically smallest H.  Throws
// TooLarge when n > cap.
std::optional<OddCutCertificate> min_odd_cut(const Graph& g, int cap = kExactOddCutCap);

// Upper bound by greedy growth: from each start vertex repeatedly add the
// outside vertex with most edges into the set, and record every odd prefix.
// starts == 0 means every vertex; growth is limited to max_size vertices.
std::optional<OddCutCertificate> min_odd_cut_heuristic(const Graph& g, int starts = 0, int max_size = 64);

struct AdmissibilityReport {
  bool admissible = false;
  // "exact" when the odd-cut minimum was enumerated, else "heuristic" (the
  // graph is then only not refuted).
  std::string mode;
  // Smallest odd cut found; the violating certificate when it is <= d.
  std::optional<OddCutCertificate> odd_cut;
};

AdmissibilityReport is_admissible(const Graph& g, const Rational& c0, int exact_cap = kExactOddCutCap);
AdmissibilityReport is_admissible(const Graph& g, double c0, int exact_cap = kExactOddCutCap);

struct BestCutCheck {
  bool ok = true;
  // On failure: indices of the offending pair, the derived operation
  // ("A\\B", "B\\A", "A|B", "A&B") and the derived set.
  std::size_t first = 0;
  std::size_t second = 0;
  std::string operation;
  VertexSet witness;
  std::int64_t min_cut = 0;
};

// For every pair (A, B), each of A\B, B\A, A|B, A&B must be empty, all of V,
// or a minimum cut.  Throws NotBestCut when an input set is not itself a
// minimum cut.
BestCutCheck best_cut_family_check(const Graph& g, const std::vector<VertexSet>& cuts);

// Lexicographic order on sorted vertex sets given as bitmasks (n <= 64).
bool mask_lex_less(std::uint64_t a, std::uint64_t b);

}  // namespace augpath
