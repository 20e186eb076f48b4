#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "augpath/diagnostics.hpp"
#include "augpath/error.hpp"

namespace augpath {

namespace {

AlternatingPath concat(const std::vector<Vertex>& head, const std::vector<Vertex>& tail) {
  AlternatingPath p{head};
  p.vertices.insert(p.vertices.end(), tail.begin(), tail.end());
  return p;
}

}  // namespace

IntertwinedResult intertwined_paths_reduce(const Graph& g, const Matching& m, const AlternatingPath& p,
                                           const AlternatingPath& q) {
  const auto& pv = p.vertices;
  const auto& qv = q.vertices;
  if (pv.empty() || qv.empty() || pv.front() != qv.front())
    throw Error(ErrorCode::BadInput, "paths must start at the same vertex");
  const int lp = p.length();
  const int lq = q.length();
  if (lp < 2 || lq < 2 || lp % 2 != 0 || lq % 2 != 0)
    throw Error(ErrorCode::BadInput, "both paths must have even positive length");
  if (!is_alternating(g, m, p) || !is_alternating(g, m, q))
    throw Error(ErrorCode::BadInput, "paths must be alternating");
  const Vertex v = pv[lp - 1];
  const Vertex w = pv[lp];
  if (qv[lq - 1] != w || qv[lq] != v)
    throw Error(ErrorCode::BadInput, "paths must end in the same matched edge from opposite directions");

  std::unordered_map<Vertex, int> pos_p;
  for (int i = 0; i <= lp; ++i) pos_p[pv[i]] = i;
  auto at_p = [&](Vertex z) {
    auto it = pos_p.find(z);
    return it == pos_p.end() ? -1 : it->second;
  };

  // Matched edges of q are e_j = (q_{2j-1}, q_{2j}), j = 1..l.
  const int l = lq / 2;
  std::vector<char> dbl(l + 1, 0), good(l + 1, 0);
  std::vector<int> pkey(l + 1, -1);
  for (int j = 1; j <= l; ++j) {
    const int a = at_p(qv[2 * j - 1]);
    const int b = at_p(qv[2 * j]);
    if (a >= 0 && b >= 0 && (a - b == 1 || b - a == 1)) {
      dbl[j] = 1;
      good[j] = a < b;
      pkey[j] = std::min(a, b);
    }
  }
  // Z(e_j): the double edge e_k, k >= j, visited first by p.
  std::vector<int> z(l + 2, 0);
  for (int j = l; j >= 1; --j) {
    z[j] = (j < l) ? z[j + 1] : 0;
    if (dbl[j] && (z[j] == 0 || pkey[j] < pkey[z[j]])) z[j] = j;
  }
  int f = 0;
  for (int j = 1; j <= l; ++j)
    if (z[j] == j && good[j]) f = j;

  IntertwinedResult out;
  out.x_prime = qv[2 * f];
  out.bound = lq + 2 * lp - 3;
  const int xp = at_p(out.x_prime);
  const std::vector<Vertex> p2(pv.begin(), pv.begin() + xp + 1);  // p'' from x to x'
  VertexMask allowed(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex u : pv) allowed[u] = 1;
  for (int i = 2 * f + 1; i <= lq; ++i) {
    out.u.push_back(qv[i]);
    allowed[qv[i]] = 1;
  }
  std::sort(out.u.begin(), out.u.end());

  for (int j = f + 1; j <= l; ++j) {
    const int k = z[j];
    if (k == 0 || good[k]) throw std::logic_error("Z(e) is not a bad double edge");
    // Via q': p'' then q from x' forward.
    const std::vector<Vertex> fwd_odd(qv.begin() + 2 * f + 1, qv.begin() + 2 * j);
    const std::vector<Vertex> fwd_even(qv.begin() + 2 * f + 1, qv.begin() + 2 * j + 1);
    AlternatingPath a_odd = concat(p2, fwd_odd);    // ends at q_{2j-1}
    AlternatingPath a_even = concat(p2, fwd_even);  // ends at q_{2j}
    // Via p: p up to Z(e_j), traversed q_{2k} -> q_{2k-1}, then q backwards.
    const int enter = at_p(qv[2 * k - 1]);
    AlternatingPath b_to_2j, b_to_2j1;
    if (k == j) {
      b_to_2j.vertices.assign(pv.begin(), pv.begin() + at_p(qv[2 * j]) + 1);
      b_to_2j1.vertices.assign(pv.begin(), pv.begin() + enter + 1);
    } else {
      std::vector<Vertex> base(pv.begin(), pv.begin() + enter + 1);
      for (int i = 2 * k - 2; i >= 2 * j; --i) base.push_back(qv[i]);
      b_to_2j.vertices = base;
      base.push_back(qv[2 * j - 1]);
      b_to_2j1.vertices = std::move(base);
    }
    IntertwinedPair first{qv[2 * j - 1], std::move(a_odd), std::move(b_to_2j1)};
    IntertwinedPair second{qv[2 * j], std::move(b_to_2j), std::move(a_even)};
    for (IntertwinedPair* pair : {&first, &second}) {
      for (const AlternatingPath* path : {&pair->odd, &pair->even}) {
        if (!is_alternating(g, m, *path) || path->back() != pair->z)
          throw std::logic_error("constructed path is not alternating");
        for (Vertex u : path->vertices)
          if (!allowed[u]) throw std::logic_error("constructed path leaves U and p");
      }
      if (!pair->odd.is_odd() || !pair->even.is_even()) throw std::logic_error("path parities do not differ");
      out.max_total = std::max(out.max_total, pair->odd.length() + pair->even.length());
      out.pairs.push_back(std::move(*pair));
    }
  }
  return out;
}

}  // namespace augpath
