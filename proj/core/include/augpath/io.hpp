#pragma once

#include <iosfwd>
#include <string>

#include "augpath/graph.hpp"

namespace augpath {

// Edge-list interchange format:
//
//   # comment lines start with '#'
//   n m d
//   u v        (m lines, u < v)
//
// Whitespace-separated decimal, LF line endings.  write_graph() emits the
// canonical form (edges ascending, no comments), so canonical files round
// trip byte for byte.  d is 0 for graphs that are not regular.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
Graph load_graph(const std::string& path);
void save_graph(const std::string& path, const Graph& g);
std::string to_edge_list(const Graph& g);

// Matching file: one matched pair `u v` per line, '#' comments allowed.
Matching read_matching(std::istream& in, const Graph& g);
void write_matching(std::ostream& out, const Matching& m);
Matching load_matching(const std::string& path, const Graph& g);

}  // namespace augpath
