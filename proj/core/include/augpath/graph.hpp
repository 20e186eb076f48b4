#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace augpath {

using Vertex = std::int32_t;
inline constexpr Vertex kNoVertex = -1;

// Sorted list of distinct vertices.
using VertexSet = std::vector<Vertex>;
// Dense membership flags indexed by vertex.
using VertexMask = std::vector<std::uint8_t>;

VertexMask to_mask(std::size_t n, std::span<const Vertex> set);
VertexSet to_set(const VertexMask& mask);

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  // Same edge with the smaller endpoint first.
  Edge normalized() const { return u <= v ? *this : Edge{v, u}; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Exact non-negative fraction, always stored in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
};

Rational operator+(const Rational& a, const Rational& b);

// Immutable simple undirected graph in compressed adjacency form.  Every
// neighbor list is sorted ascending, which fixes the iteration order of all
// searches built on top of it.
class Graph {
 public:
  Graph() = default;

  // Accepts any simple graph; used for auxiliary fixtures (paths, stars).
  static Graph simple(Vertex n, std::span<const Edge> edges);
  // Simple and d-regular, the input class of every expansion check.
  static Graph regular(Vertex n, std::span<const Edge> edges);

  Vertex vertex_count() const { return n_; }
  std::size_t edge_count() const { return adj_.size() / 2; }

  bool is_regular() const { return regular_; }
  // Uniform degree d.  Throws NotRegular for irregular graphs.
  int degree() const;
  int degree_of(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  int max_degree() const;

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  bool has_edge(Vertex u, Vertex v) const;

  // Each edge once, as (u, v) with u < v, in ascending order.
  std::vector<Edge> edges() const;

  // Index of edge {u, v} in edges(), or -1.
  std::int64_t edge_index(Vertex u, Vertex v) const;

  bool is_connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Vertex n_ = 0;
  bool regular_ = true;
  std::vector<std::int32_t> offsets_{0};
  std::vector<Vertex> adj_;
  // Prefix counts of forward edges (v < w) per vertex, for edge_index().
  std::vector<std::int64_t> forward_offsets_{0};
};

// Validated construction of the regular input graphs.
Graph build_graph(Vertex n, std::span<const Edge> edges);

class Matching {
 public:
  Matching() = default;
  explicit Matching(Vertex n) : mate_(static_cast<std::size_t>(n), kNoVertex) {}

  // Validates that the pairs are disjoint edges of g.
  static Matching from_pairs(const Graph& g, std::span<const Edge> pairs);

  Vertex size() const { return static_cast<Vertex>(mate_.size()); }

  std::optional<Vertex> mate(Vertex v) const {
    return mate_[v] == kNoVertex ? std::nullopt : std::optional<Vertex>(mate_[v]);
  }
  // kNoVertex when v is unmatched.
  Vertex mate_or_none(Vertex v) const { return mate_[v]; }
  bool is_matched(Vertex v) const { return mate_[v] != kNoVertex; }

  void match(Vertex u, Vertex v);
  void unmatch(Vertex v);

  std::size_t matched_vertex_count() const;
  std::size_t edge_count() const { return matched_vertex_count() / 2; }
  bool is_perfect() const { return matched_vertex_count() == mate_.size(); }

  VertexSet unmatched_vertices() const;
  // Matched pairs (u, v) with u < v, ascending.
  std::vector<Edge> pairs() const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<Vertex> mate_;
};

// Throws InvalidMatching unless m is involutive and uses only edges of g.
void validate_matching(const Graph& g, const Matching& m);

// An alternating path v0..vl.  Edge (v0, v1) is a non-matching edge and the
// edges alternate from there, so the matched edges are (v_{2i-1}, v_{2i}).
struct AlternatingPath {
  std::vector<Vertex> vertices;

  int length() const { return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1; }
  bool is_odd() const { return length() % 2 == 1; }
  bool is_even() const { return length() % 2 == 0; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }

  friend bool operator==(const AlternatingPath&, const AlternatingPath&) = default;
};

// Simple path in g whose edges alternate non-matching / matching starting
// with a non-matching edge.
bool is_alternating(const Graph& g, const Matching& m, const AlternatingPath& p);
// Alternating, odd, and both endpoints unmatched.
bool is_augmenting(const Graph& g, const Matching& m, const AlternatingPath& p);

// m xor E(p).  Throws InvalidMatching if the result is not a matching.  This
// is the raw operation; flip_augmenting() is the validated one.
Matching symmetric_difference(const Matching& m, const AlternatingPath& p);

// Throws NotAugmenting unless p is augmenting for m in g.
Matching flip_augmenting(const Graph& g, const Matching& m, const AlternatingPath& p);

// |{v : v unmatched}| / n.
Rational unmatched_fraction(const Graph& g, const Matching& m);

}  // namespace augpath
