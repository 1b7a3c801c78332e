#include "barnette/structure.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "barnette/error.hpp"

namespace barnette {

namespace {

std::size_t ix(Vertex v) { return static_cast<std::size_t>(v); }

bool contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

bool subset_of(const VertexSet& a, const VertexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

}  // namespace

VertexSet TypedBipartition::alpha() const {
  VertexSet out;
  for (std::size_t v = 0; v < type_of.size(); ++v)
    if (type_of[v] == VertexType::Alpha) out.push_back(static_cast<Vertex>(v));
  return out;
}

VertexSet TypedBipartition::beta() const {
  VertexSet out;
  for (std::size_t v = 0; v < type_of.size(); ++v)
    if (type_of[v] == VertexType::Beta) out.push_back(static_cast<Vertex>(v));
  return out;
}

bool TypedBipartition::valid_for(const Graph& g) const {
  if (static_cast<int>(type_of.size()) != g.order()) return false;
  for (const Edge& e : g.edges())
    if ((*this)[e.u] == (*this)[e.v]) return false;
  return true;
}

TypedBipartition bipartition_typed(const Graph& g) {
  TypedBipartition bp;
  bp.type_of.assign(ix(g.order()), VertexType::Alpha);
  std::vector<bool> seen(ix(g.order()), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[ix(s)]) continue;
    seen[ix(s)] = true;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      const VertexType other = bp[u] == VertexType::Alpha ? VertexType::Beta : VertexType::Alpha;
      for (Vertex w : g.neighbors(u)) {
        if (!seen[ix(w)]) {
          seen[ix(w)] = true;
          bp.type_of[ix(w)] = other;
          queue.push_back(w);
        } else if (bp[w] == bp[u]) {
          throw Error(ErrorKind::NotBipartite, "odd cycle through edge " + std::to_string(u) + "-" + std::to_string(w));
        }
      }
    }
  }
  return bp;
}

std::vector<int> BlockDecomposition::blocks_of(Vertex v) const {
  std::vector<int> out;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (contains(blocks[b], v)) out.push_back(static_cast<int>(b));
  return out;
}

namespace {

struct BlockFinder {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<bool> cut;
  std::vector<Edge> stack;
  BlockDecomposition out;
  int time = 0;

  explicit BlockFinder(const Graph& graph)
      : g(graph), disc(ix(graph.order()), -1), low(ix(graph.order()), 0), cut(ix(graph.order()), false) {}

  void dfs(Vertex u, Vertex parent) {
    disc[ix(u)] = low[ix(u)] = time++;
    int children = 0;
    for (Vertex w : g.neighbors(u)) {
      if (disc[ix(w)] < 0) {
        stack.push_back({u, w});
        ++children;
        dfs(w, u);
        low[ix(u)] = std::min(low[ix(u)], low[ix(w)]);
        if (low[ix(w)] >= disc[ix(u)]) {
          if (parent >= 0 || children > 1) cut[ix(u)] = true;
          emit_block(Edge{u, w});
        }
      } else if (w != parent && disc[ix(w)] < disc[ix(u)]) {
        stack.push_back({u, w});
        low[ix(u)] = std::min(low[ix(u)], disc[ix(w)]);
      }
    }
  }

  void emit_block(Edge until) {
    std::vector<Edge> edges;
    VertexSet verts;
    while (true) {
      Edge e = stack.back();
      stack.pop_back();
      edges.push_back(e.normalized());
      verts.push_back(e.u);
      verts.push_back(e.v);
      if (e == until) break;
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::sort(edges.begin(), edges.end());
    out.blocks.push_back(std::move(verts));
    out.block_edges.push_back(std::move(edges));
  }
};

}  // namespace

BlockDecomposition blocks(const Graph& g) {
  BlockFinder f(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (f.disc[ix(v)] >= 0) continue;
    if (g.degree(v) == 0) {
      f.disc[ix(v)] = f.time++;
      f.out.blocks.push_back({v});
      f.out.block_edges.emplace_back();
      continue;
    }
    f.dfs(v, -1);
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (f.cut[ix(v)]) f.out.cut_vertices.push_back(v);
  return std::move(f.out);
}

bool is_two_connected(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  return blocks(g).blocks.size() == 1;
}

void for_each_simple_cycle(const Graph& g, std::size_t cap,
                           const std::function<bool(std::span<const Vertex>)>& visit) {
  std::size_t found = 0;
  bool stop = false;
  const BlockDecomposition bd = blocks(g);
  for (const VertexSet& block : bd.blocks) {
    if (block.size() < 3 || stop) continue;
    const Subgraph sub = induced_subgraph(g, block);
    const Graph& h = sub.graph;
    const int k = h.order();
    std::vector<Vertex> path;
    std::vector<bool> on(ix(k), false);
    std::vector<Vertex> mapped;
    std::function<void(Vertex, Vertex)> dfs = [&](Vertex s, Vertex u) {
      for (Vertex w : h.neighbors(u)) {
        if (stop) return;
        if (w == s) {
          if (path.size() >= 3 && path[1] < u) {
            if (++found > cap) throw Error(ErrorKind::CycleCapExceeded, "more than " + std::to_string(cap) + " cycles");
            mapped.clear();
            for (Vertex x : path) mapped.push_back(sub.to_parent[ix(x)]);
            if (!visit(mapped)) stop = true;
          }
        } else if (w > s && !on[ix(w)]) {
          on[ix(w)] = true;
          path.push_back(w);
          dfs(s, w);
          path.pop_back();
          on[ix(w)] = false;
        }
      }
    };
    for (Vertex s = 0; s < k && !stop; ++s) {
      path.assign(1, s);
      on[ix(s)] = true;
      dfs(s, s);
      on[ix(s)] = false;
    }
  }
}

std::optional<std::vector<Vertex>> find_non_multi4_cycle(const Graph& g, std::size_t cap) {
  // Fundamental cycles of a BFS forest: a cheap necessary condition that also
  // catches every odd cycle.
  const auto n = ix(g.order());
  std::vector<Vertex> parent(n, -1);
  std::vector<int> depth(n, -1);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (depth[ix(root)] >= 0) continue;
    depth[ix(root)] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u))
        if (depth[ix(w)] < 0) {
          depth[ix(w)] = depth[ix(u)] + 1;
          parent[ix(w)] = u;
          queue.push_back(w);
        }
    }
  }
  for (const Edge& e : g.edges()) {
    if (parent[ix(e.u)] == e.v || parent[ix(e.v)] == e.u) continue;
    std::vector<Vertex> left{e.u}, right{e.v};
    Vertex a = e.u, b = e.v;
    while (a != b) {
      if (depth[ix(a)] >= depth[ix(b)]) {
        a = parent[ix(a)];
        left.push_back(a);
      } else {
        b = parent[ix(b)];
        right.push_back(b);
      }
    }
    right.pop_back();
    left.insert(left.end(), right.rbegin(), right.rend());
    if (left.size() % 4 != 0) return left;
  }
  std::optional<std::vector<Vertex>> bad;
  for_each_simple_cycle(g, cap, [&](std::span<const Vertex> c) {
    if (c.size() % 4 != 0) {
      bad.emplace(c.begin(), c.end());
      return false;
    }
    return true;
  });
  return bad;
}

bool is_multi4(const Graph& g, std::size_t cap) { return !find_non_multi4_cycle(g, cap).has_value(); }

VertexSet PathRec::inner() const {
  if (vertices.size() <= 2) return {};
  VertexSet out(vertices.begin() + 1, vertices.end() - 1);
  std::sort(out.begin(), out.end());
  return out;
}

bool PathRec::contains(Vertex v) const { return std::find(vertices.begin(), vertices.end(), v) != vertices.end(); }

PathRec PathRec::reversed() const { return PathRec{{vertices.rbegin(), vertices.rend()}}; }

bool is_path(const Graph& g, const PathRec& p) {
  if (p.vertices.size() < 2) return false;
  std::set<Vertex> seen;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    const Vertex v = p.vertices[i];
    if (v < 0 || v >= g.order() || !seen.insert(v).second) return false;
    if (i > 0 && !g.adjacent(p.vertices[i - 1], v)) return false;
  }
  return true;
}

bool satisfies_cut_path_condition(const Graph& g, const TypedBipartition& bp, const PathRec& p) {
  if (!is_path(g, p)) return false;
  for (Vertex v : p.inner())
    if (g.degree(v) != 2) return false;
  return g.degree(p.front()) >= 3 && g.degree(p.back()) >= 3 && bp[p.front()] != bp[p.back()];
}

std::vector<PathRec> cut_paths(const Graph& g, const TypedBipartition& bp) {
  std::set<std::vector<Vertex>> found;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.degree(u) < 3) continue;
    for (Vertex first : g.neighbors(u)) {
      std::vector<Vertex> seq{u, first};
      Vertex prev = u, cur = first;
      bool ok = true;
      while (g.degree(cur) == 2) {
        const auto& nb = g.neighbors(cur);
        const Vertex nxt = nb[0] == prev ? nb[1] : nb[0];
        if (std::find(seq.begin(), seq.end(), nxt) != seq.end()) {
          ok = false;
          break;
        }
        seq.push_back(nxt);
        prev = cur;
        cur = nxt;
      }
      if (!ok || g.degree(cur) < 3 || bp[u] == bp[cur]) continue;
      if (seq.front() > seq.back()) std::reverse(seq.begin(), seq.end());
      found.insert(std::move(seq));
    }
  }
  std::vector<PathRec> out;
  for (const auto& s : found) out.push_back(PathRec{s});
  return out;
}

Reduced remove_interiors(const Graph& g, std::span<const PathRec> paths) {
  Reduced r{g, std::vector<bool>(ix(g.order()), true)};
  for (const PathRec& p : paths) {
    if (p.interior_is_edge()) {
      r.graph.remove_edge(p.front(), p.back());
      continue;
    }
    for (Vertex v : p.inner()) {
      r.present[ix(v)] = false;
      const auto nb = r.graph.neighbors(v);
      for (Vertex w : nb) r.graph.remove_edge(v, w);
    }
  }
  return r;
}

bool cpath_type_check(const Graph& g, const TypedBipartition& bp, const VertexSet& c, const PathRec& p) {
  if (!is_path(g, p)) throw Error(ErrorKind::NotCPath, "not a path");
  if (!contains(c, p.front()) || !contains(c, p.back()))
    throw Error(ErrorKind::NotCPath, "path ends must lie in C");
  for (Vertex v : p.inner())
    if (contains(c, v)) throw Error(ErrorKind::NotCPath, "path meets C at inner vertex " + std::to_string(v));
  if (p.interior_is_edge()) throw Error(ErrorKind::NotCPath, "an edge inside C is not a C-path");
  if (!is_two_connected(induced_subgraph(g, c).graph)) throw Error(ErrorKind::NotCPath, "C is not 2-connected");
  return bp[p.front()] == bp[p.back()];
}

namespace {

ChainDecomposition chain_of(const Graph& g, const PathRec& p) {
  const PathRec single[] = {p};
  const Reduced r = remove_interiors(g, single);
  const Subgraph sub = induced_subgraph(r.graph, from_mask(r.present));
  const BlockDecomposition bd = blocks(sub.graph);
  const Vertex x = sub.local(p.front());
  const Vertex y = sub.local(p.back());
  const auto bx = bd.blocks_of(x);
  const auto by = bd.blocks_of(y);
  if (bx.size() != 1 || by.size() != 1)
    throw Error(ErrorKind::InvalidInput, "path end is a cut vertex of G - Int P; G is not 2-connected");
  if (bx[0] == by[0])
    throw Error(ErrorKind::NotInFamilyH, "G - Int P keeps both ends in one block (cut-path ends of different types in a block)");

  // Block-cut tree search from x's block to y's block.
  const int nb = static_cast<int>(bd.blocks.size());
  std::vector<int> prev_block(ix(nb), -1);
  std::vector<Vertex> via(ix(nb), -1);
  std::vector<bool> seen(ix(nb), false);
  std::deque<int> queue{bx[0]};
  seen[ix(bx[0])] = true;
  while (!queue.empty()) {
    const int b = queue.front();
    queue.pop_front();
    for (Vertex c : bd.blocks[ix(b)]) {
      if (!std::binary_search(bd.cut_vertices.begin(), bd.cut_vertices.end(), c)) continue;
      for (int nb2 : bd.blocks_of(c))
        if (!seen[ix(nb2)]) {
          seen[ix(nb2)] = true;
          prev_block[ix(nb2)] = b;
          via[ix(nb2)] = c;
          queue.push_back(nb2);
        }
    }
  }
  std::vector<int> order{by[0]};
  std::vector<Vertex> cuts;
  while (order.back() != bx[0]) {
    cuts.push_back(via[ix(order.back())]);
    order.push_back(prev_block[ix(order.back())]);
  }
  std::reverse(order.begin(), order.end());
  std::reverse(cuts.begin(), cuts.end());
  if (static_cast<int>(order.size()) != nb)
    throw Error(ErrorKind::InvalidInput, "G - Int P has blocks off the x-y chain");

  ChainDecomposition ch;
  ch.x = p.front();
  ch.y = p.back();
  for (int b : order) {
    VertexSet mapped;
    for (Vertex v : bd.blocks[ix(b)]) mapped.push_back(sub.to_parent[ix(v)]);
    std::sort(mapped.begin(), mapped.end());
    ch.blocks.push_back(std::move(mapped));
  }
  for (Vertex c : cuts) ch.cut_vertices.push_back(sub.to_parent[ix(c)]);
  return ch;
}

std::vector<VertexSet> sides_after_removal(const Graph& g, const PathRec& p, const PathRec& q) {
  const PathRec both[] = {p, q};
  const Reduced r = remove_interiors(g, both);
  const Components comps = connected_components(r.graph, r.present);
  std::vector<VertexSet> out;
  for (int c = 0; c < comps.count; ++c) out.push_back(comps.members(c));
  return out;
}

}  // namespace

ChainDecomposition chain_decompose(const Graph& g, const TypedBipartition& bp, const PathRec& p) {
  if (!satisfies_cut_path_condition(g, bp, p))
    throw Error(ErrorKind::PathConditionViolated, "path must have degree-2 interior and degree>=3 ends of different types");
  if (!is_two_connected(g)) throw Error(ErrorKind::InvalidInput, "chain_decompose requires a 2-connected graph");
  return chain_of(g, p);
}

bool heavy_4cycle_check(const Graph& g, const TypedBipartition& /*bp*/) {
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex c = a + 1; c < g.order(); ++c) {
      std::vector<Vertex> common;
      std::set_intersection(g.neighbors(a).begin(), g.neighbors(a).end(), g.neighbors(c).begin(),
                            g.neighbors(c).end(), std::back_inserter(common));
      if (common.size() < 2) continue;
      const bool heavy_a = g.degree(a) >= 3, heavy_c = g.degree(c) >= 3;
      for (Vertex b : common)
        if (g.degree(b) >= 3 && (heavy_a || heavy_c)) return false;
    }
  return true;
}

bool verify_cut_pair(const Graph& g, const TypedBipartition& bp, const CutPair& cp) {
  if (!satisfies_cut_path_condition(g, bp, cp.p) || !satisfies_cut_path_condition(g, bp, cp.q)) return false;
  for (Vertex v : cp.p.vertices)
    if (cp.q.contains(v)) return false;
  const auto sides = sides_after_removal(g, cp.p, cp.q);
  if (sides.size() != 2) return false;
  for (const VertexSet& side : sides) {
    const bool p_front = contains(side, cp.p.front()), p_back = contains(side, cp.p.back());
    const bool q_front = contains(side, cp.q.front()), q_back = contains(side, cp.q.back());
    if (p_front == p_back || q_front == q_back) return false;
    const Vertex pe = p_front ? cp.p.front() : cp.p.back();
    const Vertex qe = q_front ? cp.q.front() : cp.q.back();
    if (bp[pe] != bp[qe]) return false;
  }
  const int c = contains(sides[0], cp.p.front()) ? 0 : 1;
  return sides[ix(c)] == cp.side_c && sides[ix(1 - c)] == cp.side_d;
}

namespace {

CutPair make_cut_pair(const Graph& g, const PathRec& p, const PathRec& q) {
  CutPair cp{p, q, {}, {}};
  auto sides = sides_after_removal(g, p, q);
  if (sides.size() == 2) {
    const int c = contains(sides[0], p.front()) ? 0 : 1;
    cp.side_c = std::move(sides[ix(c)]);
    cp.side_d = std::move(sides[ix(1 - c)]);
  }
  return cp;
}

}  // namespace

CutPair find_cut_pair(const Graph& g, const TypedBipartition& bp, const PathRec& p, const VertexSet& block) {
  ChainDecomposition ch = chain_decompose(g, bp, p);
  if (bp.is_beta(ch.x)) {
    std::reverse(ch.blocks.begin(), ch.blocks.end());
    std::reverse(ch.cut_vertices.begin(), ch.cut_vertices.end());
    std::swap(ch.x, ch.y);
  }
  // Now x is the alpha end and the chain runs from x to y.
  const auto it = std::find(ch.blocks.begin(), ch.blocks.end(), block);
  if (it == ch.blocks.end() || block.size() < 3)
    throw Error(ErrorKind::NoSuchBlock, "not a 2-connected block of G - Int P");
  const int target = static_cast<int>(it - ch.blocks.begin());
  const auto& cuts = ch.cut_vertices;
  const int n = static_cast<int>(cuts.size());
  const VertexType t = target >= 1 ? bp[cuts[ix(target - 1)]] : bp[cuts[0]];
  auto heavy = [&](int i) { return g.degree(cuts[ix(i)]) >= 3; };

  int from = -1, to = -1;  // Q runs along cuts[from..to]
  if (t == VertexType::Beta) {
    int k = -1;
    for (int i = 0; i < n && k < 0; ++i)
      if (heavy(i) && bp.is_beta(cuts[ix(i)])) k = i;
    int j = -1;
    for (int i = 0; i < k; ++i)
      if (heavy(i)) j = i;
    from = j;
    to = k;
  } else {
    int k = -1;
    for (int i = n - 1; i >= 0 && k < 0; --i)
      if (heavy(i) && bp.is_alpha(cuts[ix(i)])) k = i;
    int j = -1;
    for (int i = n - 1; i > k && k >= 0; --i)
      if (heavy(i)) j = i;
    from = k;
    to = j;
  }
  if (from < 0 || to < 0) throw Error(ErrorKind::InternalError, "chain scan found no partner path");
  PathRec q{{cuts.begin() + from, cuts.begin() + to + 1}};
  if (q.front() > q.back()) q = q.reversed();
  CutPair cp = make_cut_pair(g, p, q);
  if (!verify_cut_pair(g, bp, cp)) throw Error(ErrorKind::InternalError, "constructed pair does not cut G");
  if (!subset_of(block, cp.side_c) && !subset_of(block, cp.side_d))
    throw Error(ErrorKind::InternalError, "target block split by the constructed pair");
  return cp;
}

DeterminedSide minimal_determined_side(const Graph& g, const TypedBipartition& bp) {
  const std::vector<PathRec> paths = cut_paths(g, bp);
  if (paths.empty()) throw Error(ErrorKind::NoCutPath, "no path satisfies the cut-path condition");
  if (!is_two_connected(g)) throw Error(ErrorKind::InvalidInput, "minimal_determined_side requires a 2-connected graph");

  auto better = [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  };

  const ChainDecomposition ch = chain_of(g, paths[0]);
  CutPair first = find_cut_pair(g, bp, paths[0], ch.blocks.front());
  DeterminedSide cur{first, better(first.side_d, first.side_c) ? first.side_d : first.side_c};

  std::vector<DeterminedSide> candidates;
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      bool disjoint = true;
      for (Vertex v : paths[i].vertices) disjoint = disjoint && !paths[j].contains(v);
      if (!disjoint) continue;
      CutPair cp = make_cut_pair(g, paths[i], paths[j]);
      if (!verify_cut_pair(g, bp, cp)) continue;
      candidates.push_back({cp, cp.side_c});
      candidates.push_back({cp, cp.side_d});
    }

  while (true) {
    const DeterminedSide* best = nullptr;
    for (const auto& c : candidates)
      if (c.side.size() < cur.side.size() && subset_of(c.side, cur.side) && (!best || better(c.side, best->side)))
        best = &c;
    if (!best) break;
    cur = *best;
  }

  std::optional<VertexType> seen;
  for (Vertex v : cur.side) {
    if (g.degree(v) < 3) continue;
    if (seen && *seen != bp[v])
      throw Error(ErrorKind::InternalError, "minimal determined side has heavy vertices of both types");
    seen = bp[v];
  }
  return cur;
}

}  // namespace barnette
