#include "barnette/stein.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "barnette/error.hpp"

namespace barnette {

namespace {

std::size_t ix(Vertex v) { return static_cast<std::size_t>(v); }

std::pair<int, int> dual_edge(const DualGraph& d, const EmbeddedGraph& g, Vertex u, Vertex v) {
  return d.edge_faces[ix(g.edge_id(u, v))];
}

}  // namespace

std::vector<Edge> HamiltonCycle::edges() const {
  std::vector<Edge> out;
  const std::size_t k = vertices.size();
  for (std::size_t i = 0; i < k; ++i) out.push_back(Edge{vertices[i], vertices[(i + 1) % k]}.normalized());
  return out;
}

bool HamiltonCycle::uses(Vertex u, Vertex v) const {
  const std::size_t k = vertices.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex a = vertices[i], b = vertices[(i + 1) % k];
    if ((a == u && b == v) || (a == v && b == u)) return true;
  }
  return false;
}

std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle) {
  if (cycle.size() < 3) return cycle;
  auto low = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), low, cycle.end());
  if (cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

bool is_hamilton_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
  const int n = g.order();
  if (n < 3 || static_cast<int>(cycle.size()) != n) return false;
  std::vector<bool> seen(ix(n), false);
  for (Vertex v : cycle) {
    if (v < 0 || v >= n || seen[ix(v)]) return false;
    seen[ix(v)] = true;
  }
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (!g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  return true;
}

std::optional<HamiltonCycle> cycle_from_edges(const Graph& g, std::span<const Edge> edges) {
  const int n = g.order();
  if (n < 3 || static_cast<int>(edges.size()) != n) return std::nullopt;
  std::vector<std::vector<Vertex>> adj(ix(n));
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || !g.adjacent(e.u, e.v)) return std::nullopt;
    adj[ix(e.u)].push_back(e.v);
    adj[ix(e.v)].push_back(e.u);
  }
  for (const auto& a : adj)
    if (a.size() != 2 || a[0] == a[1]) return std::nullopt;
  std::vector<Vertex> order{0};
  Vertex prev = -1, cur = 0;
  while (true) {
    const auto& a = adj[ix(cur)];
    const Vertex next = a[0] != prev ? a[0] : a[1];
    if (next == 0) break;
    order.push_back(next);
    prev = cur;
    cur = next;
    if (static_cast<int>(order.size()) > n) return std::nullopt;
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return HamiltonCycle{canonical_cycle(std::move(order))};
}

Graph dual_graph(const DualGraph& d) {
  Graph out(d.vertex_count());
  for (auto [a, b] : d.edge_faces)
    if (a != b && !out.adjacent(a, b)) out.add_edge(a, b);
  return out;
}

HamiltonCycle stein_forward(const EmbeddedGraph& g, const TreePartition& p) {
  if (auto check = verify_tree_partition(g.graph(), p); !check.ok)
    throw Error(ErrorKind::NotTreePartition, check.reason);
  const DualGraph d = dual(g);
  const Graph dg = dual_graph(d);
  std::vector<bool> in_s = to_mask(g.order(), p.s);
  std::vector<Edge> cut;
  for (std::size_t e = 0; e < d.primal_edges.size(); ++e) {
    const Edge pe = d.primal_edges[e];
    if (in_s[ix(pe.u)] != in_s[ix(pe.v)]) cut.push_back(Edge{d.edge_faces[e].first, d.edge_faces[e].second});
  }
  auto h = cycle_from_edges(dg, cut);
  if (!h) throw Error(ErrorKind::InternalError, "dual cut of a tree partition is not a Hamilton cycle");
  return *h;
}

TreePartition stein_backward(const EmbeddedGraph& g, const HamiltonCycle& h) {
  const DualGraph d = dual(g);
  const Graph dg = dual_graph(d);
  if (!is_hamilton_cycle(dg, h.vertices)) throw Error(ErrorKind::NotHamilton, "not a Hamilton cycle of the dual");
  Graph rest = g.graph();
  const std::size_t k = h.vertices.size();
  for (std::size_t i = 0; i < k; ++i) {
    const int e = d.edge_between(h.vertices[i], h.vertices[(i + 1) % k]);
    const Edge pe = d.primal_edges[ix(e)];
    rest.remove_edge(pe.u, pe.v);
  }
  const Components comp = connected_components(rest);
  if (comp.count != 2) throw Error(ErrorKind::InternalError, "cycle does not split the primal graph in two");
  const int s_label = comp.label[0];
  TreePartition p{comp.members(s_label), comp.members(1 - s_label)};
  if (auto check = verify_tree_partition(g.graph(), p); !check.ok)
    throw Error(ErrorKind::InternalError, "sides of the cycle: " + check.reason);
  return p;
}

std::vector<HamiltonCycle> enumerate_hamilton(const Graph& g, std::size_t cap) {
  std::vector<HamiltonCycle> out;
  const int n = g.order();
  if (n < 3) return out;
  std::vector<Vertex> path{0};
  std::vector<bool> on(ix(n), false);
  on[0] = true;
  std::size_t states = 0;

  // Every vertex off the path still needs two usable neighbours.
  auto feasible = [&](Vertex end) {
    for (Vertex u = 0; u < n; ++u) {
      if (on[ix(u)]) continue;
      int free = 0;
      for (Vertex w : g.neighbors(u))
        if (!on[ix(w)] || w == end || w == 0) ++free;
      if (free < 2) return false;
    }
    return true;
  };

  std::function<void(Vertex)> dfs = [&](Vertex u) {
    if (++states > cap) throw Error(ErrorKind::CapExceeded, "more than " + std::to_string(cap) + " partial paths");
    if (static_cast<int>(path.size()) == n) {
      if (g.adjacent(u, 0) && path[1] < u) out.push_back(HamiltonCycle{canonical_cycle(path)});
      return;
    }
    for (Vertex w : g.neighbors(u)) {
      if (on[ix(w)]) continue;
      on[ix(w)] = true;
      path.push_back(w);
      if (feasible(w)) dfs(w);
      path.pop_back();
      on[ix(w)] = false;
    }
  };
  dfs(0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.vertices < b.vertices; });
  return out;
}

AvoidanceResult hamilton_avoiding_edge(const EmbeddedGraph& g, Vertex v, Vertex w) {
  AvoidanceResult r;
  r.partition = theorem_2_3_partition(g, v, w);
  r.cycle = stein_forward(g, r.partition.partition);
  const DualGraph d = dual(g);
  r.avoided_edge = dual_edge(d, g, v, w);
  if (r.cycle.uses(r.avoided_edge.first, r.avoided_edge.second))
    throw Error(ErrorKind::InternalError, "constructed cycle uses the edge it should avoid");
  return r;
}

std::vector<FaceAvoidance> avoidance_report(const EmbeddedGraph& g, const HamiltonCycle& h) {
  const TriPartition tp = tri_partition(g);
  const BigSmall bs = classify_big_small(g, tp);
  const DualGraph d = dual(g);
  std::vector<FaceAvoidance> out;
  for (Vertex v : bs.B(3)) {
    FaceAvoidance fa;
    fa.face = v;
    fa.size = g.degree(v);
    const auto& rot = g.rotation(v);
    VertexSet even, odd;
    for (std::size_t i = 0; i < rot.size(); ++i) {
      auto [a, b] = dual_edge(d, g, v, rot[i]);
      (i % 2 == 0 ? even : odd).push_back(rot[i]);
      if (!h.uses(a, b)) fa.avoided.push_back(rot[i]);
    }
    std::sort(fa.avoided.begin(), fa.avoided.end());
    std::sort(even.begin(), even.end());
    std::sort(odd.begin(), odd.end());
    if (fa.avoided == even || fa.avoided == odd) fa.pattern = AvoidancePattern::EverySecond;
    else if (fa.avoided.size() <= 2) fa.pattern = AvoidancePattern::AtMostTwo;
    else fa.pattern = AvoidancePattern::Violation;
    out.push_back(std::move(fa));
  }
  return out;
}

FaceSparseResult hamilton_face_sparse(const EmbeddedGraph& g) {
  FaceSparseResult r;
  r.partition = theorem_2_4_partition(g);
  r.cycle = stein_forward(g, r.partition.partition);
  r.report = avoidance_report(g, r.cycle);
  return r;
}

namespace {

struct FaceEdges {
  std::vector<std::vector<int>> faces;  // edge ids in boundary order
  std::vector<std::vector<bool>> used;  // per Hamilton cycle, per edge id
};

FaceEdges face_edges(const EmbeddedGraph& g, std::size_t cap) {
  FaceEdges fe;
  const FaceSet fs = trace_faces(g);
  for (const auto& walk : fs.faces) {
    std::vector<int> ids;
    for (const DirectedEdge& e : walk) ids.push_back(g.edge_id(e.from, e.to));
    fe.faces.push_back(std::move(ids));
  }
  for (const HamiltonCycle& h : enumerate_hamilton(g.graph(), cap)) {
    std::vector<bool> used(g.size(), false);
    for (const Edge& e : h.edges()) used[ix(g.edge_id(e.u, e.v))] = true;
    fe.used.push_back(std::move(used));
  }
  return fe;
}

}  // namespace

bool check_h_plus_minus(const EmbeddedGraph& g, std::size_t cap) {
  const FaceEdges fe = face_edges(g, cap);
  for (const auto& face : fe.faces)
    for (int e : face)
      for (int f : face) {
        if (e == f) continue;
        const bool found = std::any_of(fe.used.begin(), fe.used.end(),
                                       [&](const auto& u) { return u[ix(e)] && !u[ix(f)]; });
        if (!found) return false;
      }
  return true;
}

bool check_h_minus_minus(const EmbeddedGraph& g, std::size_t cap) {
  const FaceEdges fe = face_edges(g, cap);
  for (const auto& face : fe.faces)
    for (std::size_t i = 0; i < face.size(); ++i)
      for (std::size_t j = i + 2; j < face.size(); j += 2) {
        const int e = face[i], f = face[j];
        const bool found = std::any_of(fe.used.begin(), fe.used.end(),
                                       [&](const auto& u) { return !u[ix(e)] && !u[ix(f)]; });
        if (!found) return false;
      }
  return true;
}

}  // namespace barnette
