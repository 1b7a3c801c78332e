#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "barnette/embed.hpp"
#include "barnette/treesplit.hpp"

namespace barnette {

/// A Hamilton cycle as a cyclic vertex order: lowest vertex first, then
/// towards its lower neighbour on the cycle.
struct HamiltonCycle {
  std::vector<Vertex> vertices;

  /// Consecutive pairs including the closing one, normalized.
  std::vector<Edge> edges() const;
  bool uses(Vertex u, Vertex v) const;
  friend bool operator==(const HamiltonCycle&, const HamiltonCycle&) = default;
};

/// Rotation/reflection normal form of a cyclic sequence.
std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle);

bool is_hamilton_cycle(const Graph& g, const std::vector<Vertex>& cycle);

/// The Hamilton cycle of g formed by exactly these edges, if they form one.
std::optional<HamiltonCycle> cycle_from_edges(const Graph& g, std::span<const Edge> edges);

/// The plain graph of the dual: vertex f is face f of trace_faces(g).
Graph dual_graph(const DualGraph& d);

/// Dual edges crossing the cut E(S, T), ordered as a cycle of the dual.
HamiltonCycle stein_forward(const EmbeddedGraph& g, const TreePartition& p);

/// The primal vertex sets on the two sides of a Hamilton cycle of the dual;
/// S holds vertex 0.
TreePartition stein_backward(const EmbeddedGraph& g, const HamiltonCycle& h);

inline constexpr std::size_t kDefaultHamiltonCap = 1'000'000;

/// All Hamilton cycles up to rotation and reflection. Throws CapExceeded when
/// the search visits more than `cap` partial paths.
std::vector<HamiltonCycle> enumerate_hamilton(const Graph& g, std::size_t cap = kDefaultHamiltonCap);

struct AvoidanceResult {
  HamiltonCycle cycle;
  std::pair<int, int> avoided_edge;  // dual endpoints of the avoided edge
  T23Result partition;
};

/// A Hamilton cycle of the dual missing the dual of the primal edge vw,
/// v a big vertex of class 3.
AvoidanceResult hamilton_avoiding_edge(const EmbeddedGraph& g, Vertex v, Vertex w);

enum class AvoidancePattern { EverySecond, AtMostTwo, Violation };

struct FaceAvoidance {
  Vertex face = -1;     // primal vertex of the dual face
  int size = 0;
  VertexSet avoided;    // primal neighbours u whose edge vu is avoided
  AvoidancePattern pattern = AvoidancePattern::Violation;
};

/// One entry per big class-3 vertex (dual faces coloured 3 of size >= 6).
std::vector<FaceAvoidance> avoidance_report(const EmbeddedGraph& g, const HamiltonCycle& h);

struct FaceSparseResult {
  HamiltonCycle cycle;
  std::vector<FaceAvoidance> report;
  T24Result partition;
};

FaceSparseResult hamilton_face_sparse(const EmbeddedGraph& g);

/// For a cubic plane graph: any two edges of a face, some Hamilton cycle
/// uses the first and avoids the second.
bool check_h_plus_minus(const EmbeddedGraph& g, std::size_t cap = kDefaultHamiltonCap);

/// Any two edges of a face at even distance are avoided by a common
/// Hamilton cycle.
bool check_h_minus_minus(const EmbeddedGraph& g, std::size_t cap = kDefaultHamiltonCap);

}  // namespace barnette
