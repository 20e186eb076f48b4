#include "augpath/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "augpath/error.hpp"

namespace augpath {

VertexMask to_mask(std::size_t n, std::span<const Vertex> set) {
  VertexMask mask(n, 0);
  for (Vertex v : set) mask[static_cast<std::size_t>(v)] = 1;
  return mask;
}

VertexSet to_set(const VertexMask& mask) {
  VertexSet out;
  for (std::size_t v = 0; v < mask.size(); ++v)
    if (mask[v]) out.push_back(static_cast<Vertex>(v));
  return out;
}

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (d == 0) throw Error(ErrorCode::InvalidParams, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

__extension__ typedef __int128 wide_int;

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const wide_int lhs = static_cast<wide_int>(a.num) * b.den;
  const wide_int rhs = static_cast<wide_int>(b.num) * a.den;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational operator+(const Rational& a, const Rational& b) {
  const std::int64_t g = std::gcd(a.den, b.den);
  const std::int64_t den = a.den / g * b.den;
  return Rational(a.num * (den / a.den) + b.num * (den / b.den), den);
}

Graph Graph::simple(Vertex n, std::span<const Edge> edges) {
  if (n <= 0) throw Error(ErrorCode::InvalidParams, "vertex count must be positive");
  std::vector<std::int32_t> deg(static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw Error(ErrorCode::IndexOutOfRange,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range");
    if (e.u == e.v) throw Error(ErrorCode::NonSimple, "self-loop at " + std::to_string(e.u));
    ++deg[e.u];
    ++deg[e.v];
  }

  Graph g;
  g.n_ = n;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adj_.assign(static_cast<std::size_t>(g.offsets_[n]), 0);
  std::vector<std::int32_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges) {
    g.adj_[fill[e.u]++] = e.v;
    g.adj_[fill[e.v]++] = e.u;
  }
  for (Vertex v = 0; v < n; ++v) {
    auto first = g.adj_.begin() + g.offsets_[v];
    auto last = g.adj_.begin() + g.offsets_[v + 1];
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last)
      throw Error(ErrorCode::NonSimple, "parallel edge at vertex " + std::to_string(v));
  }

  g.regular_ = true;
  for (Vertex v = 1; v < n; ++v)
    if (deg[v] != deg[0]) g.regular_ = false;

  g.forward_offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    const auto forward = nb.end() - std::upper_bound(nb.begin(), nb.end(), v);
    g.forward_offsets_[v + 1] = g.forward_offsets_[v] + forward;
  }
  return g;
}

Graph Graph::regular(Vertex n, std::span<const Edge> edges) {
  Graph g = simple(n, edges);
  if (!g.is_regular()) {
    std::ostringstream msg;
    msg << "degrees differ (vertex 0 has " << g.degree_of(0) << ")";
    throw Error(ErrorCode::NotRegular, msg.str());
  }
  return g;
}

Graph build_graph(Vertex n, std::span<const Edge> edges) { return Graph::regular(n, edges); }

int Graph::degree() const {
  if (!regular_) throw Error(ErrorCode::NotRegular, "graph is not regular");
  return n_ == 0 ? 0 : degree_of(0);
}

int Graph::max_degree() const {
  int d = 0;
  for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree_of(v));
  return d;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.push_back({u, v});
  return out;
}

std::int64_t Graph::edge_index(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return -1;
  auto first_forward = std::upper_bound(nb.begin(), nb.end(), u);
  return forward_offsets_[u] + (it - first_forward);
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(n_), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  Vertex count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n_;
}

Matching Matching::from_pairs(const Graph& g, std::span<const Edge> pairs) {
  Matching m(g.vertex_count());
  for (const Edge& e : pairs) {
    if (e.u < 0 || e.v < 0 || e.u >= g.vertex_count() || e.v >= g.vertex_count())
      throw Error(ErrorCode::IndexOutOfRange, "matched pair out of range");
    if (!g.has_edge(e.u, e.v))
      throw Error(ErrorCode::InvalidMatching, "pair (" + std::to_string(e.u) + "," +
                                                  std::to_string(e.v) + ") is not an edge");
    if (m.is_matched(e.u) || m.is_matched(e.v))
      throw Error(ErrorCode::InvalidMatching, "vertex covered twice by pair (" +
                                                  std::to_string(e.u) + "," +
                                                  std::to_string(e.v) + ")");
    m.match(e.u, e.v);
  }
  return m;
}

void Matching::match(Vertex u, Vertex v) {
  mate_[u] = v;
  mate_[v] = u;
}

void Matching::unmatch(Vertex v) {
  const Vertex w = mate_[v];
  mate_[v] = kNoVertex;
  if (w != kNoVertex) mate_[w] = kNoVertex;
}

std::size_t Matching::matched_vertex_count() const {
  return static_cast<std::size_t>(
      std::count_if(mate_.begin(), mate_.end(), [](Vertex w) { return w != kNoVertex; }));
}

VertexSet Matching::unmatched_vertices() const {
  VertexSet out;
  for (Vertex v = 0; v < size(); ++v)
    if (mate_[v] == kNoVertex) out.push_back(v);
  return out;
}

std::vector<Edge> Matching::pairs() const {
  std::vector<Edge> out;
  for (Vertex v = 0; v < size(); ++v)
    if (mate_[v] != kNoVertex && v < mate_[v]) out.push_back({v, mate_[v]});
  return out;
}

void validate_matching(const Graph& g, const Matching& m) {
  if (m.size() != g.vertex_count())
    throw Error(ErrorCode::InvalidMatching, "matching size differs from vertex count");
  for (Vertex v = 0; v < m.size(); ++v) {
    const Vertex w = m.mate_or_none(v);
    if (w == kNoVertex) continue;
    if (w < 0 || w >= m.size() || w == v || m.mate_or_none(w) != v)
      throw Error(ErrorCode::InvalidMatching, "mate map is not involutive at " + std::to_string(v));
    if (!g.has_edge(v, w))
      throw Error(ErrorCode::InvalidMatching, "matched pair is not an edge at " + std::to_string(v));
  }
}

bool is_alternating(const Graph& g, const Matching& m, const AlternatingPath& p) {
  const auto& vs = p.vertices;
  if (vs.empty()) return false;
  std::vector<Vertex> sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (Vertex v : vs)
    if (v < 0 || v >= g.vertex_count()) return false;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    if (!g.has_edge(vs[i], vs[i + 1])) return false;
    const bool matched = m.mate_or_none(vs[i]) == vs[i + 1];
    // Edge i joins positions i and i+1; it is a matching edge iff i is odd.
    if (matched != (i % 2 == 1)) return false;
  }
  return true;
}

bool is_augmenting(const Graph& g, const Matching& m, const AlternatingPath& p) {
  return p.is_odd() && is_alternating(g, m, p) && !m.is_matched(p.front()) &&
         !m.is_matched(p.back());
}

Matching symmetric_difference(const Matching& m, const AlternatingPath& p) {
  Matching out = m;
  const auto& vs = p.vertices;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    const Vertex a = vs[i];
    const Vertex b = vs[i + 1];
    if (out.mate_or_none(a) == b) out.unmatch(a);
  }
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    const Vertex a = vs[i];
    const Vertex b = vs[i + 1];
    if (m.mate_or_none(a) == b) continue;
    if (out.is_matched(a) || out.is_matched(b))
      throw Error(ErrorCode::InvalidMatching, "symmetric difference is not a matching");
    out.match(a, b);
  }
  return out;
}

Matching flip_augmenting(const Graph& g, const Matching& m, const AlternatingPath& p) {
  if (!is_augmenting(g, m, p)) throw Error(ErrorCode::NotAugmenting, "path is not augmenting");
  return symmetric_difference(m, p);
}

Rational unmatched_fraction(const Graph& g, const Matching& m) {
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  return Rational(n - static_cast<std::int64_t>(m.matched_vertex_count()), n);
}

}  // namespace augpath
