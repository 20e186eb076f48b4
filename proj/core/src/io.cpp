#include "augpath/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "augpath/error.hpp"

namespace augpath {

namespace {

// Strips comments and yields whitespace-separated integers.
class TokenReader {
 public:
  explicit TokenReader(std::istream& in) : in_(in) {}

  bool next(std::int64_t& value) {
    while (true) {
      if (line_ >> value) return true;
      if (!line_.eof()) throw Error(ErrorCode::ParseError, "non-numeric token on line " + std::to_string(line_no_));
      std::string raw;
      if (!std::getline(in_, raw)) return false;
      ++line_no_;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      line_.clear();
      line_.str(raw);
    }
  }

  std::int64_t require(const char* what) {
    std::int64_t v = 0;
    if (!next(v)) throw Error(ErrorCode::ParseError, std::string("unexpected end of input reading ") + what);
    return v;
  }

 private:
  std::istream& in_;
  std::istringstream line_;
  int line_no_ = 0;
};

}  // namespace

Graph read_graph(std::istream& in) {
  TokenReader tokens(in);
  const std::int64_t n = tokens.require("n");
  const std::int64_t m = tokens.require("m");
  const std::int64_t d = tokens.require("d");
  if (n <= 0 || m < 0 || d < 0) throw Error(ErrorCode::ParseError, "bad header");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) {
    const auto u = tokens.require("edge endpoint");
    const auto v = tokens.require("edge endpoint");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  std::int64_t extra = 0;
  if (tokens.next(extra)) throw Error(ErrorCode::ParseError, "trailing data after edge list");
  Graph g = Graph::simple(static_cast<Vertex>(n), edges);
  if (d > 0) {
    if (!g.is_regular()) throw Error(ErrorCode::NotRegular, "header declares d but graph is irregular");
    if (g.degree() != d)
      throw Error(ErrorCode::ParseError, "header degree " + std::to_string(d) + " does not match edges");
  }
  return g;
}

void write_graph(std::ostream& out, const Graph& g) {
  const int d = g.is_regular() ? g.degree() : 0;
  out << g.vertex_count() << ' ' << g.edge_count() << ' ' << d << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return read_graph(in);
}

void save_graph(const std::string& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  write_graph(out, g);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

Matching read_matching(std::istream& in, const Graph& g) {
  TokenReader tokens(in);
  std::vector<Edge> pairs;
  std::int64_t u = 0;
  while (tokens.next(u)) {
    const auto v = tokens.require("matched partner");
    pairs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return Matching::from_pairs(g, pairs);
}

void write_matching(std::ostream& out, const Matching& m) {
  for (const Edge& e : m.pairs()) out << e.u << ' ' << e.v << '\n';
}

Matching load_matching(const std::string& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return read_matching(in, g);
}

}  // namespace augpath
