#pragma once

#include <gtest/gtest.h>

#include <initializer_list>
#include <vector>

#include "augpath/graph.hpp"

namespace augpath::testing {

inline Matching matching_of(const Graph& g, std::initializer_list<Edge> pairs) {
  const std::vector<Edge> v(pairs);
  return Matching::from_pairs(g, v);
}

inline Graph path_graph(Vertex n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph::simple(n, e);
}

#define EXPECT_THROW_CODE(stmt, expected)                              \
  do {                                                                 \
    try {                                                              \
      stmt;                                                            \
      ADD_FAILURE() << "no exception from " #stmt;                     \
    } catch (const ::augpath::Error& e) {                              \
      EXPECT_EQ(e.code(), ::augpath::ErrorCode::expected) << e.what(); \
    }                                                                  \
  } while (0)

}  // namespace augpath::testing
