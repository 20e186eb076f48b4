#include "augpath/structure.hpp"

#include <algorithm>
#include <bit>
#include <queue>

#include "augpath/cuts.hpp"
#include "augpath/error.hpp"

namespace augpath {

std::int64_t count_odd_components(const Graph& g, const VertexMask& removed) {
  const Vertex n = g.vertex_count();
  std::vector<std::uint8_t> seen(removed.begin(), removed.end());
  std::vector<Vertex> stack;
  std::int64_t odd = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    stack.assign(1, s);
    std::int64_t size = 0;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      ++size;
      for (Vertex w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    odd += size % 2;
  }
  return odd;
}

namespace {

TutteWitness evaluate(const Graph& g, const VertexMask& y) {
  TutteWitness w;
  w.y = to_set(y);
  w.odd_components = count_odd_components(g, y);
  w.deficiency = w.odd_components - static_cast<std::int64_t>(w.y.size());
  return w;
}

}  // namespace

TutteScan tutte_scan(const Graph& g, int subset_cap, bool force_exhaustive) {
  const Vertex n = g.vertex_count();
  TutteScan scan;
  if (n <= subset_cap && n <= 30) {
    VertexMask y(static_cast<std::size_t>(n), 0);
    bool have = false;
    std::uint64_t best_mask = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      for (Vertex v = 0; v < n; ++v) y[v] = (mask >> v) & 1;
      const std::int64_t odd = count_odd_components(g, y);
      const std::int64_t def = odd - std::popcount(mask);
      if (!have || def > scan.best.deficiency ||
          (def == scan.best.deficiency && mask_lex_less(mask, best_mask))) {
        have = true;
        best_mask = mask;
        scan.best.deficiency = def;
        scan.best.odd_components = odd;
      }
    }
    for (Vertex v = 0; v < n; ++v) y[v] = (best_mask >> v) & 1;
    scan.best.y = to_set(y);
    return scan;
  }
  if (force_exhaustive)
    throw Error(ErrorCode::TooLarge, "tutte_scan: n=" + std::to_string(n) + " exceeds cap");
  scan.exhaustive = false;
  VertexMask y(static_cast<std::size_t>(n), 0);
  scan.best = evaluate(g, y);
  auto consider = [&](const VertexMask& cand) {
    TutteWitness w = evaluate(g, cand);
    if (w.deficiency > scan.best.deficiency) scan.best = std::move(w);
  };
  for (Vertex v = 0; v < n; ++v) {
    y[v] = 1;
    consider(y);
    y[v] = 0;
    for (Vertex w : g.neighbors(v)) y[w] = 1;
    consider(y);
    for (Vertex w : g.neighbors(v)) y[w] = 0;
  }
  return scan;
}

std::optional<CliqueDecomposition> clique_decomposition(const Graph& g) {
  if (!g.is_regular()) return std::nullopt;
  const Vertex n = g.vertex_count();
  const int d = g.degree();
  if (d < 1 || n % d != 0) return std::nullopt;
  std::vector<VertexSet> clique_of(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    // A d-clique through v is v plus N(v) minus one neighbor.
    auto nb = g.neighbors(v);
    int found = 0;
    for (std::size_t drop = 0; drop < nb.size(); ++drop) {
      VertexSet cand{v};
      for (std::size_t i = 0; i < nb.size(); ++i)
        if (i != drop) cand.push_back(nb[i]);
      bool clique = true;
      for (std::size_t a = 1; a < cand.size() && clique; ++a)
        for (std::size_t b = a + 1; b < cand.size() && clique; ++b) clique = g.has_edge(cand[a], cand[b]);
      if (!clique) continue;
      if (++found > 1) return std::nullopt;
      std::sort(cand.begin(), cand.end());
      clique_of[v] = std::move(cand);
    }
    if (found != 1) return std::nullopt;
  }
  CliqueDecomposition out;
  out.external.assign(static_cast<std::size_t>(n), kNoVertex);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : clique_of[v])
      if (clique_of[u] != clique_of[v]) return std::nullopt;
    if (clique_of[v].front() == v) out.cliques.push_back(clique_of[v]);
    for (Vertex w : g.neighbors(v)) {
      if (std::binary_search(clique_of[v].begin(), clique_of[v].end(), w)) continue;
      if (out.external[v] != kNoVertex) return std::nullopt;
      out.external[v] = w;
    }
    if (out.external[v] == kNoVertex) return std::nullopt;
  }
  return out;
}

std::optional<Matching> clique_matching(const Graph& g) {
  auto dec = clique_decomposition(g);
  if (!dec) return std::nullopt;
  Matching m(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const Vertex w = dec->external[v];
    if (dec->external[w] != v) throw std::logic_error("external edges do not pair up");
    if (v < w) m.match(v, w);
  }
  if (!m.is_perfect()) throw std::logic_error("clique matching is not perfect");
  return m;
}

MinCut min_cut(const Graph& g, int cap) {
  const Vertex n = g.vertex_count();
  if (n > cap) throw Error(ErrorCode::TooLarge, "min_cut: n=" + std::to_string(n) + " exceeds cap");
  if (n < 2) throw Error(ErrorCode::InvalidParams, "min_cut needs at least two vertices");

  // Dense weights between merged super-vertices.
  std::vector<std::vector<std::int32_t>> w(static_cast<std::size_t>(n),
                                           std::vector<std::int32_t>(static_cast<std::size_t>(n), 0));
  for (const Edge& e : g.edges()) w[e.u][e.v] = w[e.v][e.u] = 1;
  std::vector<std::vector<Vertex>> members(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) members[v] = {v};
  std::vector<Vertex> alive(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) alive[v] = v;

  MinCut best;
  best.value = -1;
  std::vector<std::int64_t> key(static_cast<std::size_t>(n));
  std::vector<std::uint8_t> added(static_cast<std::size_t>(n));
  while (alive.size() > 1) {
    for (Vertex v : alive) key[v] = 0, added[v] = 0;
    std::priority_queue<std::pair<std::int64_t, Vertex>> heap;
    for (Vertex v : alive) heap.push({0, -v});
    Vertex prev = kNoVertex, last = kNoVertex;
    std::int64_t last_key = 0;
    for (std::size_t step = 0; step < alive.size(); ++step) {
      Vertex v = kNoVertex;
      while (true) {
        auto [k, negv] = heap.top();
        heap.pop();
        if (!added[-negv] && k == key[-negv]) {
          v = -negv;
          break;
        }
      }
      added[v] = 1;
      prev = last;
      last = v;
      last_key = key[v];
      for (Vertex u : alive)
        if (!added[u] && w[v][u] > 0) {
          key[u] += w[v][u];
          heap.push({key[u], -u});
        }
    }
    if (best.value < 0 || last_key < best.value) {
      best.value = last_key;
      best.side = members[last];
    }
    // Merge last into prev.
    for (Vertex u : alive) {
      w[prev][u] += w[last][u];
      w[u][prev] = w[prev][u];
    }
    w[prev][prev] = 0;
    members[prev].insert(members[prev].end(), members[last].begin(), members[last].end());
    alive.erase(std::find(alive.begin(), alive.end(), last));
  }
  std::sort(best.side.begin(), best.side.end());
  return best;
}

}  // namespace augpath
