#include "augpath/cuts.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

#include "augpath/error.hpp"
#include "augpath/generators.hpp"
#include "augpath/structure.hpp"

namespace augpath {

std::int64_t edge_boundary(const Graph& g, const VertexMask& h) {
  std::int64_t count = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!h[v]) continue;
    for (Vertex w : g.neighbors(v))
      if (!h[w]) ++count;
  }
  return count;
}

std::int64_t edge_boundary(const Graph& g, std::span<const Vertex> h) {
  for (Vertex v : h)
    if (v < 0 || v >= g.vertex_count()) throw Error(ErrorCode::IndexOutOfRange, "vertex out of range");
  return edge_boundary(g, to_mask(static_cast<std::size_t>(g.vertex_count()), h));
}

bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  const std::uint64_t diff = a ^ b;
  const std::uint64_t low = diff & (~diff + 1);
  if (a & low) {
    // A has the smaller element at the first difference unless B ran out.
    const std::uint64_t above = ~((low << 1) - 1);
    return (b & above) != 0;
  }
  const std::uint64_t above = ~((low << 1) - 1);
  return (a & above) == 0;
}

namespace {

VertexSet mask_to_set(std::uint64_t mask) {
  VertexSet out;
  while (mask) {
    out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

// Walks every subset of V in Gray-code order, keeping the boundary size
// current with O(d) work per step.  visit(mask, size, boundary).
template <typename Visit>
void for_each_subset(const Graph& g, Visit&& visit) {
  const Vertex n = g.vertex_count();
  std::vector<std::uint8_t> in(static_cast<std::size_t>(n), 0);
  std::uint64_t mask = 0;
  std::int64_t size = 0;
  std::int64_t boundary = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    const int v = std::countr_zero(i);
    int inside = 0;
    for (Vertex w : g.neighbors(v)) inside += in[w];
    const int outside = g.degree_of(v) - inside;
    if (in[v]) {
      in[v] = 0;
      --size;
      boundary += inside - outside;
    } else {
      in[v] = 1;
      ++size;
      boundary += outside - inside;
    }
    mask ^= std::uint64_t{1} << v;
    visit(mask, size, boundary);
  }
}

void require_cap(const Graph& g, int cap, const char* what) {
  if (g.vertex_count() > cap || g.vertex_count() > 62)
    throw Error(ErrorCode::TooLarge, std::string(what) + ": n=" + std::to_string(g.vertex_count()) +
                                         " exceeds cap " + std::to_string(std::min(cap, 62)));
}

}  // namespace

ExactExpansion exact_expansion(const Graph& g, int cap) {
  require_cap(g, cap, "exact_expansion");
  const std::int64_t n = g.vertex_count();
  if (n < 2) throw Error(ErrorCode::InvalidParams, "expansion needs at least two vertices");
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::int64_t best_b = -1, best_s = 1;
  std::uint64_t best_mask = 0;
  for_each_subset(g, [&](std::uint64_t mask, std::int64_t s, std::int64_t b) {
    if (mask == full) return;
    if (best_b < 0) {
      best_b = b, best_s = s, best_mask = mask;
      return;
    }
    // b / (s (n-s)) versus best_b / (best_s (n-best_s)).
    const std::int64_t lhs = b * best_s * (n - best_s);
    const std::int64_t rhs = best_b * s * (n - s);
    if (lhs < rhs || (lhs == rhs && mask_lex_less(mask, best_mask))) {
      best_b = b, best_s = s, best_mask = mask;
    }
  });
  return {Rational(n * best_b, best_s * (n - best_s)), mask_to_set(best_mask)};
}

ExpansionReport spectral_expansion_lower(const Graph& g, double tol, int max_iter) {
  const Vertex n = g.vertex_count();
  const int d = g.degree();
  if (!g.is_connected()) throw Error(ErrorCode::NotConnected, "spectral bound needs a connected graph");
  ExpansionReport report;
  report.method = "lanczos";
  if (n == 1) {
    report.c0_spectral_lower = 0.0;
    return report;
  }

  using Vec = Eigen::VectorXd;
  auto deflate = [&](Vec& x) { x.array() -= x.sum() / n; };
  auto apply = [&](const Vec& x, Vec& y) {
    for (Vertex v = 0; v < n; ++v) {
      double s = 0.0;
      for (Vertex w : g.neighbors(v)) s += x[w];
      y[v] = s;
    }
  };

  const int steps = std::min<int>(max_iter, n - 1);
  std::vector<Vec> basis;
  std::vector<double> alpha, beta;
  SplitMix64 rng(0x5eed5eedULL);
  Vec q(n);
  for (Vertex v = 0; v < n; ++v) q[v] = rng.unit() - 0.5;
  deflate(q);
  q.normalize();
  basis.push_back(q);

  Vec w(n);
  double theta = 0.0, residual = 0.0;
  bool converged = false;
  for (int j = 0; j < steps; ++j) {
    apply(basis[j], w);
    alpha.push_back(basis[j].dot(w));
    // Full reorthogonalization (twice) against the basis and the constants.
    for (int pass = 0; pass < 2; ++pass) {
      deflate(w);
      for (const Vec& b : basis) w -= b.dot(w) * b;
    }
    const double b_next = w.norm();

    const int m = static_cast<int>(alpha.size());
    Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), m);
    Eigen::VectorXd sub = m > 1 ? Eigen::VectorXd(Eigen::Map<Eigen::VectorXd>(beta.data(), m - 1))
                                : Eigen::VectorXd();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    theta = solver.eigenvalues()[m - 1];
    residual = std::abs(b_next * solver.eigenvectors()(m - 1, m - 1));
    report.iterations = j + 1;
    if (b_next < 1e-10 || residual < tol) {
      converged = true;
      if (b_next < 1e-10) residual = 0.0;
      break;
    }
    beta.push_back(b_next);
    basis.push_back(w / b_next);
  }
  if (!converged && report.iterations < n - 1)
    throw Error(ErrorCode::NoConvergence, "Ritz residual " + std::to_string(residual) + " after " +
                                              std::to_string(report.iterations) + " steps");
  report.lambda2 = theta + residual;
  report.residual = residual;
  report.c0_spectral_lower = std::max(0.0, d - report.lambda2);
  return report;
}

ExpansionReport expansion_report(const Graph& g, double tol, int exact_cap) {
  ExpansionReport report = spectral_expansion_lower(g, tol);
  if (g.vertex_count() <= exact_cap) {
    auto exact = exact_expansion(g, exact_cap);
    report.c0_exact = exact.value;
    report.exact_argmin = std::move(exact.argmin);
    report.method = "exact+lanczos";
  }
  return report;
}

std::optional<OddCutCertificate> min_odd_cut(const Graph& g, int cap) {
  require_cap(g, cap, "min_odd_cut");
  const std::int64_t n = g.vertex_count();
  if (n < 6) return std::nullopt;
  std::int64_t best_b = -1, best_s = 0;
  std::uint64_t best_mask = 0;
  for_each_subset(g, [&](std::uint64_t mask, std::int64_t s, std::int64_t b) {
    if (s % 2 == 0 || s < 3 || s > n - 3) return;
    if (best_b < 0 || b < best_b || (b == best_b && mask_lex_less(mask, best_mask))) {
      best_b = b, best_s = s, best_mask = mask;
    }
  });
  return OddCutCertificate{mask_to_set(best_mask), best_s, best_b, true};
}

std::optional<OddCutCertificate> min_odd_cut_heuristic(const Graph& g, int starts, int max_size) {
  const Vertex n = g.vertex_count();
  if (n < 6) return std::nullopt;
  const Vertex limit = std::min<Vertex>(n - 3, std::max(3, max_size));
  const Vertex start_count = starts <= 0 ? n : std::min<Vertex>(n, starts);
  // Evenly spaced starts when sampling.
  const double stride = static_cast<double>(n) / start_count;

  std::optional<OddCutCertificate> best;
  std::vector<int> into(static_cast<std::size_t>(n), 0);
  std::vector<std::uint8_t> in(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> members, frontier;
  for (Vertex s = 0; s < start_count; ++s) {
    const auto start = static_cast<Vertex>(std::floor(s * stride));
    members.clear();
    frontier.clear();
    std::int64_t boundary = 0;
    auto add = [&](Vertex v) {
      boundary += g.degree_of(v) - 2 * into[v];
      in[v] = 1;
      members.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (!in[w] && into[w]++ == 0) frontier.push_back(w);
    };
    add(start);
    while (static_cast<Vertex>(members.size()) < limit) {
      Vertex pick = kNoVertex;
      for (Vertex w : frontier)
        if (!in[w] && (pick == kNoVertex || into[w] > into[pick] || (into[w] == into[pick] && w < pick)))
          pick = w;
      if (pick == kNoVertex) break;
      add(pick);
      const auto size = static_cast<std::int64_t>(members.size());
      if (size % 2 == 1 && size >= 3 && (!best || boundary < best->boundary)) {
        VertexSet set(members.begin(), members.end());
        std::sort(set.begin(), set.end());
        best = OddCutCertificate{std::move(set), size, boundary, false};
      }
    }
    for (Vertex v : members) in[v] = 0;
    for (Vertex v : members)
      for (Vertex w : g.neighbors(v)) into[w] = 0;
  }
  return best;
}

namespace {

AdmissibilityReport admissibility(const Graph& g, bool c0_positive, int exact_cap) {
  AdmissibilityReport report;
  const int d = g.degree();
  if (g.vertex_count() <= exact_cap) {
    report.mode = "exact";
    report.odd_cut = min_odd_cut(g, exact_cap);
  } else {
    report.mode = "heuristic";
    report.odd_cut = min_odd_cut_heuristic(g);
  }
  report.admissible = c0_positive && (!report.odd_cut || report.odd_cut->boundary >= d + 1);
  return report;
}

}  // namespace

AdmissibilityReport is_admissible(const Graph& g, double c0, int exact_cap) {
  return admissibility(g, c0 > 0.0, exact_cap);
}

AdmissibilityReport is_admissible(const Graph& g, const Rational& c0, int exact_cap) {
  return admissibility(g, c0.num > 0, exact_cap);
}

BestCutCheck best_cut_family_check(const Graph& g, const std::vector<VertexSet>& cuts) {
  const Vertex n = g.vertex_count();
  BestCutCheck result;
  result.min_cut = min_cut(g).value;
  std::vector<VertexMask> masks;
  for (const VertexSet& c : cuts) {
    VertexMask m(static_cast<std::size_t>(n), 0);
    for (Vertex v : c) {
      if (v < 0 || v >= n) throw Error(ErrorCode::IndexOutOfRange, "cut vertex out of range");
      m[v] = 1;
    }
    const auto size = std::count(m.begin(), m.end(), 1);
    if (size == 0 || size == n || edge_boundary(g, m) != result.min_cut)
      throw Error(ErrorCode::NotBestCut, "input set is not a minimum cut");
    masks.push_back(std::move(m));
  }
  auto qualifies = [&](const VertexMask& m) {
    const auto size = std::count(m.begin(), m.end(), 1);
    return size == 0 || size == n || edge_boundary(g, m) == result.min_cut;
  };
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = i + 1; j < masks.size(); ++j) {
      const auto& a = masks[i];
      const auto& b = masks[j];
      VertexMask diff_ab(a.size()), diff_ba(a.size()), uni(a.size()), inter(a.size());
      for (std::size_t v = 0; v < a.size(); ++v) {
        diff_ab[v] = a[v] && !b[v];
        diff_ba[v] = b[v] && !a[v];
        uni[v] = a[v] || b[v];
        inter[v] = a[v] && b[v];
      }
      const std::pair<const char*, const VertexMask*> derived[] = {
          {"A\\B", &diff_ab}, {"B\\A", &diff_ba}, {"A|B", &uni}, {"A&B", &inter}};
      for (const auto& [name, mask] : derived)
        if (!qualifies(*mask)) {
          result.ok = false;
          result.first = i;
          result.second = j;
          result.operation = name;
          result.witness = to_set(*mask);
          return result;
        }
    }
  return result;
}

}  // namespace augpath
