#include "augpath/generators.hpp"

#include <algorithm>
#include <set>

#include "augpath/error.hpp"

namespace augpath {

std::string to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::RandomRegular: return "random_regular";
    case GeneratorKind::FiniteCayley: return "finite_cayley";
    case GeneratorKind::Circulant: return "circulant";
    case GeneratorKind::PrismCliqueChain: return "prism_clique_chain";
    case GeneratorKind::Cycle: return "cycle";
    case GeneratorKind::Complete: return "complete";
  }
  return "unknown";
}

GeneratorKind parse_generator_kind(const std::string& name) {
  for (auto kind : {GeneratorKind::RandomRegular, GeneratorKind::FiniteCayley, GeneratorKind::Circulant,
                    GeneratorKind::PrismCliqueChain, GeneratorKind::Cycle, GeneratorKind::Complete})
    if (to_string(kind) == name) return kind;
  throw Error(ErrorCode::InvalidParams, "unknown generator kind '" + name + "'");
}

namespace {

bool adjacent(const std::vector<std::vector<Vertex>>& adj, Vertex a, Vertex b) {
  return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end();
}

// One pass of the pairing process; returns false when it gets stuck.
bool try_pairing(Vertex n, int d, SplitMix64& rng, std::vector<Edge>& edges) {
  std::vector<Vertex> points;
  points.reserve(static_cast<std::size_t>(n) * d);
  for (Vertex v = 0; v < n; ++v)
    for (int i = 0; i < d; ++i) points.push_back(v);
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  edges.clear();

  auto suitable = [&](std::size_t i, std::size_t j) {
    return i != j && points[i] != points[j] && !adjacent(adj, points[i], points[j]);
  };

  while (!points.empty()) {
    const std::size_t count = points.size();
    std::size_t i = 0, j = 0;
    bool found = false;
    // A fixed number of blind draws, then an exhaustive check for dead ends.
    for (std::size_t tries = 0; tries < 64 + 4 * count && !found; ++tries) {
      i = rng.below(count);
      j = rng.below(count);
      found = suitable(i, j);
    }
    if (!found) {
      std::vector<std::pair<std::size_t, std::size_t>> valid;
      for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = a + 1; b < count; ++b)
          if (suitable(a, b)) valid.emplace_back(a, b);
      if (valid.empty()) return false;
      std::tie(i, j) = valid[rng.below(valid.size())];
    }
    const Vertex a = points[i];
    const Vertex b = points[j];
    adj[a].push_back(b);
    adj[b].push_back(a);
    edges.push_back(Edge{a, b}.normalized());
    if (i < j) std::swap(i, j);
    points[i] = points.back();
    points.pop_back();
    points[j] = points.back();
    points.pop_back();
  }
  return true;
}

}  // namespace

Graph random_regular(Vertex n, int d, std::uint64_t seed, int budget) {
  if (n <= 0 || d <= 0) throw Error(ErrorCode::InvalidParams, "n and d must be positive");
  if ((static_cast<std::int64_t>(n) * d) % 2 != 0) throw Error(ErrorCode::InvalidParams, "n*d must be even");
  if (d >= n) throw Error(ErrorCode::InvalidParams, "d must be smaller than n");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (int attempt = 0; attempt < budget; ++attempt) {
    if (try_pairing(n, d, rng, edges)) {
      std::sort(edges.begin(), edges.end());
      return Graph::regular(n, edges);
    }
  }
  throw Error(ErrorCode::RejectionBudgetExceeded,
              "no simple pairing after " + std::to_string(budget) + " restarts");
}

Graph finite_cayley(Vertex n, const std::vector<std::int64_t>& generators) {
  if (n <= 1) throw Error(ErrorCode::InvalidParams, "group order must be at least 2");
  std::set<std::int64_t> set;
  for (std::int64_t s : generators) {
    const std::int64_t r = ((s % n) + n) % n;
    if (r == 0) throw Error(ErrorCode::InvalidParams, "generator set contains the identity");
    if (!set.insert(r).second) throw Error(ErrorCode::InvalidParams, "repeated generator " + std::to_string(s));
  }
  for (std::int64_t r : set)
    if (!set.count((n - r) % n))
      throw Error(ErrorCode::AsymmetricGenerators,
                  "inverse of " + std::to_string(r) + " mod " + std::to_string(n) + " missing");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    for (std::int64_t r : set) {
      const auto w = static_cast<Vertex>((v + r) % n);
      if (v < w) edges.push_back({v, w});
    }
  std::sort(edges.begin(), edges.end());
  return Graph::regular(n, edges);
}

Graph circulant(Vertex n, const std::vector<std::int64_t>& offsets) {
  if (n <= 1) throw Error(ErrorCode::InvalidParams, "group order must be at least 2");
  std::set<std::int64_t> set;
  for (std::int64_t s : offsets) {
    const std::int64_t r = ((s % n) + n) % n;
    if (r == 0) throw Error(ErrorCode::InvalidParams, "offset is 0 mod n");
    set.insert(r);
    set.insert((n - r) % n);
  }
  return finite_cayley(n, {set.begin(), set.end()});
}

Graph prism_clique_chain(int k, int d) {
  if (d < 3) throw Error(ErrorCode::InfeasibleParams, "clique size d must be at least 3");
  if (k < 2) throw Error(ErrorCode::InfeasibleParams, "need at least two cliques");
  if (d % 2 == 1 && k % 2 == 1)
    throw Error(ErrorCode::InfeasibleParams, "odd d needs an even number of cliques");
  const int ring = d % 2 == 0 ? d / 2 : (d - 1) / 2;
  const auto n = static_cast<Vertex>(k) * d;
  auto id = [d](int clique, int local) { return static_cast<Vertex>(clique * d + local); };

  std::vector<Edge> edges;
  for (int c = 0; c < k; ++c) {
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b) edges.push_back({id(c, a), id(c, b)});
    // Right ports 0..ring-1 of c meet left ports ring..2*ring-1 of c+1.
    const int next = (c + 1) % k;
    for (int j = 0; j < ring; ++j) edges.push_back(Edge{id(c, j), id(next, ring + j)}.normalized());
    if (d % 2 == 1 && c % 2 == 0) edges.push_back({id(c, d - 1), id(c + 1, d - 1)});
  }
  std::sort(edges.begin(), edges.end());
  return Graph::regular(n, edges);
}

Graph cycle_graph(Vertex n) {
  if (n < 3) throw Error(ErrorCode::InvalidParams, "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back(Edge{v, static_cast<Vertex>((v + 1) % n)}.normalized());
  std::sort(edges.begin(), edges.end());
  return Graph::regular(n, edges);
}

Graph complete_graph(Vertex n) {
  if (n < 2) throw Error(ErrorCode::InvalidParams, "complete graph needs at least 2 vertices");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::regular(n, edges);
}

Graph generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::RandomRegular: return random_regular(spec.n, spec.d, spec.seed);
    case GeneratorKind::FiniteCayley: return finite_cayley(spec.n, spec.params);
    case GeneratorKind::Circulant: return circulant(spec.n, spec.params);
    case GeneratorKind::PrismCliqueChain: {
      if (!spec.params.empty()) return prism_clique_chain(static_cast<int>(spec.params[0]), spec.d);
      if (spec.d <= 0 || spec.n % spec.d != 0)
        throw Error(ErrorCode::InfeasibleParams, "n must be a multiple of d");
      return prism_clique_chain(spec.n / spec.d, spec.d);
    }
    case GeneratorKind::Cycle: return cycle_graph(spec.n);
    case GeneratorKind::Complete: return complete_graph(spec.n);
  }
  throw Error(ErrorCode::InvalidParams, "unknown generator kind");
}

std::string graph_id(const GeneratorSpec& spec) {
  std::string id = to_string(spec.kind) + "-n" + std::to_string(spec.n) + "-d" + std::to_string(spec.d);
  for (std::int64_t p : spec.params) id += "-p" + std::to_string(p);
  if (spec.kind == GeneratorKind::RandomRegular) id += "-s" + std::to_string(spec.seed);
  return id;
}

}  // namespace augpath
