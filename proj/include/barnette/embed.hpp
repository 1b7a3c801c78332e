#pragma once

#include <array>
#include <optional>
#include <vector>

#include "barnette/graph.hpp"

namespace barnette {

/// A plane (sphere) embedding given by a rotation system: for every vertex
/// the clockwise cyclic order of its neighbours.
class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;

  /// Validates symmetry, simplicity, connectivity and Euler's formula.
  static EmbeddedGraph build(std::vector<std::vector<Vertex>> rotation);

  int order() const { return graph_.order(); }
  std::size_t size() const { return graph_.size(); }
  int degree(Vertex v) const { return graph_.degree(v); }
  const Graph& graph() const { return graph_; }
  const std::vector<Vertex>& rotation(Vertex v) const { return rotation_[static_cast<std::size_t>(v)]; }
  const std::vector<std::vector<Vertex>>& rotations() const { return rotation_; }
  int face_count() const { return face_count_; }

  /// Index of u in rotation(v).
  int position(Vertex v, Vertex u) const;
  /// The neighbour immediately after u in the clockwise rotation at v.
  Vertex next_cw(Vertex v, Vertex u) const;
  Vertex prev_cw(Vertex v, Vertex u) const;

  /// Index of edge uv in graph().edges().
  int edge_id(Vertex u, Vertex v) const;

  /// Same embedding, every rotation reversed.
  EmbeddedGraph reflected() const;
  /// Vertex v renamed to perm[v].
  EmbeddedGraph relabeled(const std::vector<Vertex>& perm) const;

  friend bool operator==(const EmbeddedGraph& a, const EmbeddedGraph& b) { return a.rotation_ == b.rotation_; }

 private:
  std::vector<std::vector<Vertex>> rotation_;
  Graph graph_;
  std::vector<std::vector<int>> edge_id_;  // parallel to graph_.neighbors(v)
  int face_count_ = 0;
};

struct DirectedEdge {
  Vertex from = 0;
  Vertex to = 0;
  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

/// Faces as closed walks of directed edges. The successor of (u,v) is (v,w)
/// with w = next_cw(v, u).
struct FaceSet {
  std::vector<std::vector<DirectedEdge>> faces;
  // face_at[v][i] is the face containing (v, rotation(v)[i]).
  std::vector<std::vector<int>> face_at;

  int face_of(const EmbeddedGraph& g, Vertex u, Vertex v) const;
  std::vector<Vertex> boundary(int f) const;
  std::size_t count() const { return faces.size(); }
};

FaceSet trace_faces(const EmbeddedGraph& g);

/// Dual of a connected plane graph. Dual vertex f is primal face f; dual edge
/// e is primal edge e (ids of EmbeddedGraph::edge_id).
struct DualGraph {
  FaceSet primal_faces;
  std::vector<Edge> primal_edges;                  // edge id -> primal edge (u < v)
  std::vector<std::pair<int, int>> edge_faces;     // edge id -> (face of u->v, face of v->u)
  std::vector<std::vector<int>> rotation_edges;    // dual vertex -> primal edge ids around its face
  std::optional<EmbeddedGraph> graph;              // absent when the dual has loops or parallel edges
  std::optional<FaceSet> faces;                    // faces of *graph
  std::vector<Vertex> primal_vertex_of_face;       // dual face -> primal vertex

  int vertex_count() const { return static_cast<int>(rotation_edges.size()); }
  /// Primal edge id shared by adjacent faces a and b; -1 if none.
  int edge_between(int a, int b) const;
};

DualGraph dual(const EmbeddedGraph& g);

bool is_even_triangulation(const EmbeddedGraph& g);
bool is_triangulation(const EmbeddedGraph& g);

struct TriPartition {
  std::vector<int> class_of;  // values 1, 2, 3

  int operator[](Vertex v) const { return class_of[static_cast<std::size_t>(v)]; }
  VertexSet members(int c) const;
};

/// Canonical proper 3-colouring: vertex 0 gets 1, rotation(0)[0] gets 2.
TriPartition tri_partition(const EmbeddedGraph& g);

struct BigSmall {
  std::vector<bool> big;                 // per vertex
  VertexSet big_set;
  VertexSet small_set;
  std::array<VertexSet, 3> big_in;       // big_in[c-1] = B_c
  std::array<VertexSet, 3> small_in;     // small_in[c-1] = S_c

  bool is_big(Vertex v) const { return big[static_cast<std::size_t>(v)]; }
  const VertexSet& B(int c) const { return big_in[static_cast<std::size_t>(c - 1)]; }
  const VertexSet& S(int c) const { return small_in[static_cast<std::size_t>(c - 1)]; }
};

BigSmall classify_big_small(const EmbeddedGraph& g, const TriPartition& tp);

/// Class of every face of the dual graph: the class of its primal vertex.
std::vector<int> dual_face_coloring(const DualGraph& d, const TriPartition& tp);

/// Lexicographically least BFS plane code over all starting darts; with
/// `allow_reflection` mirror images share a code.
std::vector<int> canonical_code(const EmbeddedGraph& g, bool allow_reflection = true);

/// Relabelled copy whose vertex numbering follows the canonical code.
EmbeddedGraph canonical_form(const EmbeddedGraph& g, bool allow_reflection = true);

bool isomorphic(const EmbeddedGraph& a, const EmbeddedGraph& b);

}  // namespace barnette
