#pragma once

// Brute-force reference implementations used as test oracles. They share
// nothing with the library beyond the Graph and EmbeddedGraph containers.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "barnette/embed.hpp"
#include "barnette/graph.hpp"

namespace oracle {

using barnette::EmbeddedGraph;
using barnette::Graph;
using barnette::Vertex;

// Lengths of all simple cycles (as a set) by subset DP: for each start s,
// reach[mask][v] says some s..v path uses exactly `mask`, all vertices >= s.
inline std::set<int> cycle_lengths(const Graph& g) {
  const int n = g.order();
  std::set<int> out;
  std::vector<std::uint32_t> nb(n, 0);
  for (int u = 0; u < n; ++u)
    for (int w : g.neighbors(u)) nb[u] |= 1U << w;
  for (int s = 0; s < n; ++s) {
    const std::uint32_t full = 1U << n;
    std::vector<std::uint32_t> reach(full, 0);  // bit v set: path s..v over mask
    reach[1U << s] = 1U << s;
    for (std::uint32_t mask = 1U << s; mask < full; ++mask) {
      if (!(mask >> s & 1U) || (mask & ((1U << s) - 1)) != 0 || reach[mask] == 0) continue;
      for (int v = 0; v < n; ++v) {
        if (!(reach[mask] >> v & 1U)) continue;
        const int len = std::popcount(mask);
        if (len >= 3 && (nb[v] >> s & 1U)) out.insert(len);
        std::uint32_t next = nb[v] & ~mask & ~((1U << s) - 1);
        while (next) {
          const int w = std::countr_zero(next);
          next &= next - 1;
          reach[mask | 1U << w] |= 1U << w;
        }
      }
    }
  }
  return out;
}

inline bool all_cycles_multiple_of_four(const Graph& g) {
  for (int len : cycle_lengths(g))
    if (len % 4 != 0) return false;
  return true;
}

// Hamilton cycles counted by filtering every permutation that starts at 0.
// Each undirected cycle shows up twice.
inline long hamilton_count(const Graph& g) {
  const int n = g.order();
  if (n < 3) return 0;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long count = 0;
  do {
    bool ok = g.adjacent(perm[n - 1], perm[0]);
    for (int i = 0; ok && i + 1 < n; ++i) ok = g.adjacent(perm[i], perm[i + 1]);
    count += ok;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return count / 2;
}

// Connected and |E| = |V| - 1 on the vertices with `side[v] == k`.
inline bool induces_tree(const Graph& g, const std::vector<int>& side, int k) {
  std::vector<int> members;
  for (int v = 0; v < g.order(); ++v)
    if (side[v] == k) members.push_back(v);
  if (members.empty()) return false;
  int edges = 0;
  for (int v : members)
    for (int w : g.neighbors(v))
      if (side[w] == k && v < w) ++edges;
  if (edges != static_cast<int>(members.size()) - 1) return false;
  std::vector<bool> seen(g.order(), false);
  std::vector<int> stack{members[0]};
  seen[members[0]] = true;
  int reached = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++reached;
    for (int w : g.neighbors(v))
      if (side[w] == k && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return reached == static_cast<int>(members.size());
}

// Faces of a rotation system, traced with successor (u,v) -> (v, next(v,u)),
// where next is the clockwise successor. Each face is its dart list.
inline std::vector<std::vector<std::pair<int, int>>> faces(const EmbeddedGraph& g) {
  std::map<std::pair<int, int>, bool> used;
  std::vector<std::vector<std::pair<int, int>>> out;
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.rotation(u)) {
      if (used[{u, v}]) continue;
      auto& face = out.emplace_back();
      int a = u, b = v;
      while (!used[{a, b}]) {
        used[{a, b}] = true;
        face.push_back({a, b});
        const auto& rot = g.rotation(b);
        const auto at = std::find(rot.begin(), rot.end(), a) - rot.begin();
        const int c = rot[(at + 1) % rot.size()];
        a = b;
        b = c;
      }
    }
  return out;
}

// Whether the duals of the primal edges between the two sides form a single
// Hamilton cycle of the dual.
inline bool cut_is_dual_hamilton(const EmbeddedGraph& g, const std::vector<int>& side) {
  const auto fs = faces(g);
  std::map<std::pair<int, int>, int> face_of;
  for (int f = 0; f < static_cast<int>(fs.size()); ++f)
    for (auto d : fs[f]) face_of[d] = f;
  const int m = static_cast<int>(fs.size());
  std::vector<std::vector<int>> adj(m);
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.rotation(u))
      if (u < v && side[u] != side[v]) {
        const int f1 = face_of[{u, v}], f2 = face_of[{v, u}];
        adj[f1].push_back(f2);
        adj[f2].push_back(f1);
      }
  for (const auto& a : adj)
    if (a.size() != 2) return false;
  std::vector<bool> seen(m, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 0;
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    ++reached;
    for (int h : adj[f])
      if (!seen[h]) {
        seen[h] = true;
        stack.push_back(h);
      }
  }
  return reached == m;
}

inline bool faces_are_triangles(const EmbeddedGraph& g) {
  for (const auto& f : faces(g))
    if (f.size() != 3) return false;
  return true;
}

// Splits x: x keeps r_i..r_j, a new vertex gets r_j..r_i, and the two are
// joined. Returns nullopt if neither orientation at r_i, r_j gives a
// triangulation (it never happens for valid inputs).
inline std::optional<EmbeddedGraph> split_vertex(const EmbeddedGraph& g, int x, int i, int j) {
  const int n = g.order();
  const int y = n;
  const auto& r = g.rotation(x);
  const int k = static_cast<int>(r.size());
  std::vector<int> keep, give;
  for (int t = i;; t = (t + 1) % k) {
    keep.push_back(r[t]);
    if (t == j) break;
  }
  for (int t = j;; t = (t + 1) % k) {
    give.push_back(r[t]);
    if (t == i) break;
  }
  for (int flip = 0; flip < 4; ++flip) {
    std::vector<std::vector<Vertex>> rot = g.rotations();
    rot.push_back({});
    rot[x] = keep;
    rot[x].push_back(y);
    rot[y] = give;
    rot[y].push_back(x);
    for (std::size_t t = 1; t + 1 < give.size(); ++t) {
      auto& rr = rot[give[t]];
      std::replace(rr.begin(), rr.end(), x, y);
    }
    for (int e = 0; e < 2; ++e) {
      const int u = e == 0 ? r[i] : r[j];
      auto& rr = rot[u];
      const auto at = std::find(rr.begin(), rr.end(), x) - rr.begin();
      const bool after = (flip >> e) & 1;
      rr.insert(rr.begin() + at + (after ? 1 : 0), y);
    }
    try {
      EmbeddedGraph h = EmbeddedGraph::build(rot);
      if (faces_are_triangles(h)) return h;
    } catch (const std::exception&) {
    }
  }
  return std::nullopt;
}

// Every plane triangulation on n vertices (n >= 4) up to isomorphism, grown
// from K4 by all vertex splits; dedup through the library's canonical code.
inline std::vector<EmbeddedGraph> all_triangulations(int n) {
  std::vector<EmbeddedGraph> level{EmbeddedGraph::build({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}})};
  for (int order = 5; order <= n; ++order) {
    std::map<std::vector<int>, EmbeddedGraph> next;
    for (const EmbeddedGraph& g : level)
      for (int x = 0; x < g.order(); ++x) {
        const int k = g.degree(x);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            auto h = split_vertex(g, x, i, j);
            if (h) next.emplace(barnette::canonical_code(*h), std::move(*h));
          }
      }
    level.clear();
    for (auto& [code, g] : next) level.push_back(std::move(g));
  }
  return level;
}

inline bool all_degrees_even(const EmbeddedGraph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) % 2 != 0) return false;
  return true;
}

// Recomputes the cut-pair definition for paths p, q and returns the two
// components of g minus their interiors (empty when any clause fails).
// `alpha[v]` gives the type of v.
inline std::vector<std::vector<int>> cut_pair_sides(const Graph& g, const std::vector<bool>& alpha,
                                                    const std::vector<int>& p, const std::vector<int>& q) {
  const int n = g.order();
  std::vector<int> on(n, 0);
  for (const auto* path : {&p, &q}) {
    if (path->size() < 2) return {};
    for (std::size_t i = 0; i < path->size(); ++i) {
      const int v = (*path)[i];
      if (on[v]++) return {};
      if (i + 1 < path->size() && !g.adjacent(v, (*path)[i + 1])) return {};
      const bool end = i == 0 || i + 1 == path->size();
      if (end ? g.degree(v) < 3 : g.degree(v) != 2) return {};
    }
    if (alpha[path->front()] == alpha[path->back()]) return {};
  }
  // Components after dropping inner vertices and length-one path edges.
  std::vector<bool> gone(n, false);
  for (const auto* path : {&p, &q})
    for (std::size_t i = 1; i + 1 < path->size(); ++i) gone[(*path)[i]] = true;
  auto cut_edge = [&](int u, int v) {
    for (const auto* path : {&p, &q})
      if (path->size() == 2 && ((path->front() == u && path->back() == v) || (path->front() == v && path->back() == u)))
        return true;
    return false;
  };
  std::vector<int> comp(n, -1);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (gone[s] || comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v))
        if (!gone[w] && comp[w] < 0 && !cut_edge(v, w)) {
          comp[w] = count;
          stack.push_back(w);
        }
    }
    ++count;
  }
  if (count != 2) return {};
  std::vector<std::vector<int>> sides(2);
  for (int v = 0; v < n; ++v)
    if (!gone[v]) sides[comp[v]].push_back(v);
  for (int c = 0; c < 2; ++c) {
    const int pe = comp[p.front()] == c ? p.front() : p.back();
    const int qe = comp[q.front()] == c ? q.front() : q.back();
    if (comp[pe] != c || comp[qe] != c) return {};
    if (comp[p.front()] == comp[p.back()] || comp[q.front()] == comp[q.back()]) return {};
    if (alpha[pe] != alpha[qe]) return {};
  }
  return sides;
}

}  // namespace oracle
