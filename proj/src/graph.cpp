#include "barnette/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "barnette/error.hpp"

namespace barnette {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AsymmetricAdjacency: return "AsymmetricAdjacency";
    case ErrorKind::MultiEdgeOrLoop: return "MultiEdgeOrLoop";
    case ErrorKind::NonPlanarEmbedding: return "NonPlanarEmbedding";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotEvenTriangulation: return "NotEvenTriangulation";
    case ErrorKind::DegreeBelowFour: return "DegreeBelowFour";
    case ErrorKind::NotBipartite: return "NotBipartite";
    case ErrorKind::CycleCapExceeded: return "CycleCapExceeded";
    case ErrorKind::NotCPath: return "NotCPath";
    case ErrorKind::PathConditionViolated: return "PathConditionViolated";
    case ErrorKind::NoSuchBlock: return "NoSuchBlock";
    case ErrorKind::NoCutPath: return "NoCutPath";
    case ErrorKind::NotInFamilyH: return "NotInFamilyH";
    case ErrorKind::NotOn4Cycle: return "NotOn4Cycle";
    case ErrorKind::BipyramidSpecialCase: return "BipyramidSpecialCase";
    case ErrorKind::CaseUnmatched: return "CaseUnmatched";
    case ErrorKind::ConditionViolated: return "ConditionViolated";
    case ErrorKind::ConstraintInvalid: return "ConstraintInvalid";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::HNotInFamily: return "HNotInFamily";
    case ErrorKind::HComponentNot2Connected: return "HComponentNot2Connected";
    case ErrorKind::NotTreePartition: return "NotTreePartition";
    case ErrorKind::NotHamilton: return "NotHamilton";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::SizeTooSmall: return "SizeTooSmall";
    case ErrorKind::SizeOutOfRange: return "SizeOutOfRange";
    case ErrorKind::NoneFound: return "NoneFound";
    case ErrorKind::InternalError: return "InternalError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& a = neighbors(u);
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.push_back({u, v});
  return out;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= order() || v >= order())
    throw Error(ErrorKind::InvalidInput, "edge endpoint out of range");
  if (u == v) throw Error(ErrorKind::MultiEdgeOrLoop, "loop at " + std::to_string(u));
  if (adjacent(u, v))
    throw Error(ErrorKind::MultiEdgeOrLoop,
                "repeated edge " + std::to_string(u) + "-" + std::to_string(v));
  auto insert = [](std::vector<Vertex>& a, Vertex x) { a.insert(std::lower_bound(a.begin(), a.end(), x), x); };
  insert(adj_[static_cast<std::size_t>(u)], v);
  insert(adj_[static_cast<std::size_t>(v)], u);
  ++edge_count_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  if (!adjacent(u, v)) return;
  auto erase = [](std::vector<Vertex>& a, Vertex x) { a.erase(std::lower_bound(a.begin(), a.end(), x)); };
  erase(adj_[static_cast<std::size_t>(u)], v);
  erase(adj_[static_cast<std::size_t>(v)], u);
  --edge_count_;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  Subgraph s;
  s.from_parent.assign(static_cast<std::size_t>(g.order()), -1);
  s.to_parent.assign(vertices.begin(), vertices.end());
  std::sort(s.to_parent.begin(), s.to_parent.end());
  s.to_parent.erase(std::unique(s.to_parent.begin(), s.to_parent.end()), s.to_parent.end());
  for (std::size_t i = 0; i < s.to_parent.size(); ++i)
    s.from_parent[static_cast<std::size_t>(s.to_parent[i])] = static_cast<Vertex>(i);
  s.graph = Graph(static_cast<int>(s.to_parent.size()));
  for (std::size_t i = 0; i < s.to_parent.size(); ++i)
    for (Vertex w : g.neighbors(s.to_parent[i])) {
      Vertex j = s.local(w);
      if (j > static_cast<Vertex>(i)) s.graph.add_edge(static_cast<Vertex>(i), j);
    }
  return s;
}

VertexSet Components::members(int c) const {
  VertexSet out;
  for (std::size_t v = 0; v < label.size(); ++v)
    if (label[v] == c) out.push_back(static_cast<Vertex>(v));
  return out;
}

namespace {

bool in_mask(const std::vector<bool>& mask, Vertex v) {
  return mask.empty() || mask[static_cast<std::size_t>(v)];
}

}  // namespace

Components connected_components(const Graph& g, const std::vector<bool>& mask) {
  Components c;
  c.label.assign(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (!in_mask(mask, s) || c.label[static_cast<std::size_t>(s)] >= 0) continue;
    c.label[static_cast<std::size_t>(s)] = c.count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u))
        if (in_mask(mask, w) && c.label[static_cast<std::size_t>(w)] < 0) {
          c.label[static_cast<std::size_t>(w)] = c.count;
          stack.push_back(w);
        }
    }
    ++c.count;
  }
  return c;
}

bool is_connected(const Graph& g) { return connected_components(g).count <= 1; }

std::optional<std::vector<Vertex>> find_cycle(const Graph& g, const std::vector<bool>& mask) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<Vertex> parent(n, -1);
  std::vector<int> depth(n, -1);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (!in_mask(mask, root) || depth[static_cast<std::size_t>(root)] >= 0) continue;
    depth[static_cast<std::size_t>(root)] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (!in_mask(mask, w) || w == parent[static_cast<std::size_t>(u)]) continue;
        if (depth[static_cast<std::size_t>(w)] < 0) {
          depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(w)] = u;
          queue.push_back(w);
          continue;
        }
        // Non-tree edge: close the cycle through the lowest common ancestor.
        std::vector<Vertex> left{u}, right{w};
        Vertex a = u, b = w;
        while (a != b) {
          if (depth[static_cast<std::size_t>(a)] >= depth[static_cast<std::size_t>(b)]) {
            a = parent[static_cast<std::size_t>(a)];
            left.push_back(a);
          } else {
            b = parent[static_cast<std::size_t>(b)];
            right.push_back(b);
          }
        }
        right.pop_back();
        left.insert(left.end(), right.rbegin(), right.rend());
        return left;
      }
    }
  }
  return std::nullopt;
}

bool is_forest(const Graph& g, const std::vector<bool>& mask) { return !find_cycle(g, mask).has_value(); }

bool is_tree(const Graph& g, const std::vector<bool>& mask) {
  auto c = connected_components(g, mask);
  return c.count == 1 && is_forest(g, mask);
}

std::vector<int> bfs_distances(const Graph& g, Vertex source, const std::vector<bool>& mask) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  dist[static_cast<std::size_t>(source)] = 0;
  std::deque<Vertex> queue{source};
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u))
      if (in_mask(mask, w) && dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

std::optional<std::vector<Vertex>> shortest_path(const Graph& g, Vertex s, Vertex t,
                                                 const std::vector<bool>& mask) {
  if (!in_mask(mask, s) || !in_mask(mask, t)) return std::nullopt;
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -1);
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  seen[static_cast<std::size_t>(s)] = true;
  std::deque<Vertex> queue{s};
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    if (u == t) break;
    for (Vertex w : g.neighbors(u))
      if (in_mask(mask, w) && !seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        parent[static_cast<std::size_t>(w)] = u;
        queue.push_back(w);
      }
  }
  if (!seen[static_cast<std::size_t>(t)]) return std::nullopt;
  std::vector<Vertex> path{t};
  while (path.back() != s) path.push_back(parent[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<bool> to_mask(int n, std::span<const Vertex> vertices) {
  std::vector<bool> m(static_cast<std::size_t>(n), false);
  for (Vertex v : vertices) m[static_cast<std::size_t>(v)] = true;
  return m;
}

VertexSet from_mask(const std::vector<bool>& mask) {
  VertexSet out;
  for (std::size_t v = 0; v < mask.size(); ++v)
    if (mask[v]) out.push_back(static_cast<Vertex>(v));
  return out;
}

}  // namespace barnette
