#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace barnette {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // sorted, no duplicates

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  /// Same edge with the smaller endpoint first.
  Edge normalized() const { return u < v ? Edge{u, v} : Edge{v, u}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on vertices 0..n-1 with sorted adjacency.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}

  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t size() const { return edge_count_; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges with u < v, lexicographically ordered.
  std::vector<Edge> edges() const;

  /// Inserts uv; throws MultiEdgeOrLoop on a loop or a repeated edge.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

/// A graph on a subset of a parent graph's vertices, relabelled 0..k-1.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;    // local -> parent
  std::vector<Vertex> from_parent;  // parent -> local, -1 when absent

  Vertex local(Vertex parent) const { return from_parent[static_cast<std::size_t>(parent)]; }
  bool contains(Vertex parent) const { return local(parent) >= 0; }
};

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

struct Components {
  std::vector<int> label;  // -1 for vertices outside the mask
  int count = 0;

  VertexSet members(int c) const;
};

/// Connected components of the subgraph induced by `mask` (all vertices when empty).
Components connected_components(const Graph& g, const std::vector<bool>& mask = {});
bool is_connected(const Graph& g);

/// A cycle inside the subgraph induced by `mask`, as a closed vertex sequence
/// without the repeated first vertex; nullopt when that subgraph is a forest.
std::optional<std::vector<Vertex>> find_cycle(const Graph& g, const std::vector<bool>& mask);

bool is_forest(const Graph& g, const std::vector<bool>& mask);
bool is_tree(const Graph& g, const std::vector<bool>& mask);

std::vector<int> bfs_distances(const Graph& g, Vertex source, const std::vector<bool>& mask = {});

/// Shortest s-t path inside `mask` (all vertices when empty).
std::optional<std::vector<Vertex>> shortest_path(const Graph& g, Vertex s, Vertex t,
                                                 const std::vector<bool>& mask = {});

std::vector<bool> to_mask(int n, std::span<const Vertex> vertices);
VertexSet from_mask(const std::vector<bool>& mask);

}  // namespace barnette
