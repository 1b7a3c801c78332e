#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "barnette/colorizer.hpp"
#include "barnette/embed.hpp"
#include "barnette/structure.hpp"

namespace barnette {

enum class FanKind { InducedPath, InducedCycleMinusEdge };

/// A path with big ends and small inner vertices running straight through
/// every inner vertex. v0 holds the two vertices adjacent to the whole path.
struct FanPath {
  PathRec path;
  std::array<Vertex, 2> v0{};  // sorted
  std::array<Vertex, 2> v1{};  // path.front(), path.back()
  FanKind kind = FanKind::InducedPath;

  VertexSet interior() const { return path.inner(); }
  bool in_v0(Vertex v) const { return v0[0] == v || v0[1] == v; }
  bool in_v1(Vertex v) const { return v1[0] == v || v1[1] == v; }
  /// V(P) together with V0(P), sorted.
  VertexSet span() const;
  friend bool operator==(const FanPath&, const FanPath&) = default;
};

/// True for the join of an even cycle with two isolated vertices.
bool is_bipyramid(const EmbeddedGraph& g);

/// Every fan path, without the coverage guarantee.
std::vector<FanPath> fan_paths_unchecked(const EmbeddedGraph& g, const BigSmall& bs);

/// Every fan path; throws BipyramidSpecialCase when g is a bipyramid whose
/// small vertices are not all covered (the octahedron).
std::vector<FanPath> fan_paths(const EmbeddedGraph& g, const BigSmall& bs);

struct RFamilies {
  std::vector<FanPath> r;      // V0 big, V0 or V1 meets B_3
  std::vector<FanPath> r_hat;  // V0 = one B_3 vertex and one S_3 vertex
};

RFamilies families_R(const EmbeddedGraph& g, const BigSmall& bs, const TriPartition& tp);

/// G[B_1 + B_3] united with G[B_2 + B_3], on the big vertices only.
struct HypothesisGraph {
  Subgraph sub;            // local graph on B_1 + B_2 + B_3
  TypedBipartition bp;     // alpha = B_1 + B_2, beta = B_3 (local ids)
  TwoColoring a;           // local: B_1 -> 1, B_2 -> 2

  const Graph& graph() const { return sub.graph; }
  int degree(Vertex global) const;
};

HypothesisGraph hypothesis_graph(const EmbeddedGraph& g, const TriPartition& tp, const BigSmall& bs);

/// Every component of H (isolated vertices included) is 2-connected.
bool hypothesis_components_two_connected(const HypothesisGraph& h);

struct PartitionConstraint {
  VertexSet x;
  VertexSet y;
};

struct TreePartition {
  VertexSet s;
  VertexSet t;
  friend bool operator==(const TreePartition&, const TreePartition&) = default;
};

struct PartitionCheck {
  bool ok = true;
  std::string reason;
};

/// Disjoint cover, both sides induce trees, seeds contained when given.
PartitionCheck verify_tree_partition(const Graph& g, const TreePartition& p, const PartitionConstraint* c = nullptr);

/// Throws ConstraintInvalid unless the seeds are disjoint, acyclic, place
/// B_1/B_2/B_3 correctly and treat each fan path interior all-or-nothing.
void validate_constraint(const EmbeddedGraph& g, const PartitionConstraint& c);

/// Throws ConstraintInvalid unless the seeds are in range, disjoint and acyclic.
void validate_seeds(const Graph& g, const PartitionConstraint& c);

/// validate_constraint as a predicate.
bool constraint_certified(const EmbeddedGraph& g, const PartitionConstraint& c);

enum class SeedCheck { Full, Basic };

inline constexpr std::size_t kDefaultSolverCap = 50'000'000;

/// Complete backtracking search for a tree partition extending the seeds.
/// SeedCheck::Full demands every hypothesis of validate_constraint, Basic
/// only those of validate_seeds.
TreePartition tree_partition_solve(const EmbeddedGraph& g, const PartitionConstraint& c,
                                   std::size_t node_cap = kDefaultSolverCap, SeedCheck check = SeedCheck::Full);

using PartitionFilter = std::function<bool(const TreePartition&)>;

/// Complete search for a tree partition extending the seeds that `accept`
/// also admits. Seeds get the basic checks only.
std::optional<TreePartition> tree_partition_find(const Graph& g, const PartitionConstraint& c,
                                                 const PartitionFilter& accept,
                                                 std::size_t node_cap = kDefaultSolverCap);

/// Extends b (defined on B_3) over Int p_w (and y when it is a small V0
/// vertex) so that no cycle of G[B] + G[V(p_w) + V0(p_w)] is monochromatic
/// and w gets b(v). Returns the extension and the case number 1..4.
struct T23Extension {
  TwoColoring b0;
  int case_no = 0;
};
T23Extension extend_coloring_t23(const EmbeddedGraph& g, const TriPartition& tp, const BigSmall& bs,
                                 const TwoColoring& a, const TwoColoring& b, Vertex v, Vertex w,
                                 const FanPath& p_w);

struct T24Extension {
  TwoColoring b;           // b_n, defined on M_n
  VertexSet m;             // M_n
  std::vector<int> cases;  // case number per path
  std::vector<int> repaired;  // steps whose case colouring was replaced
};

/// Runs the colouring sequence b_0 .. b_n over `paths`, checking the
/// per-step conditions; throws ConditionViolated or CaseUnmatched. With
/// `repair`, a step failing the conditions retries every colouring of its
/// newly coloured vertices before giving up.
T24Extension extend_coloring_t24(const EmbeddedGraph& g, const TriPartition& tp, const BigSmall& bs,
                                 const HypothesisGraph& h, const TwoColoring& a, const TwoColoring& b,
                                 const std::vector<FanPath>& paths, bool repair = false);

struct T23Result {
  TreePartition partition;
  int case_no = 0;  // 0: w big, 1..4: extension case, -1: bipyramid construction
  bool seeds_certified = true;  // the seeds met every hypothesis of validate_constraint
};

/// Tree partition with B_1 in S, B_2 in T and v, w together on the side of
/// w's class (S for class 1, T for class 2).
T23Result theorem_2_3_partition(const EmbeddedGraph& g, Vertex v, Vertex w);

enum class Implication { HeavyRule, LightRule };

struct VertexReport {
  Vertex v = -1;
  int h_degree = 0;
  Implication rule = Implication::HeavyRule;
  bool holds = false;
};

struct T24Result {
  TreePartition partition;
  std::vector<VertexReport> report;
  std::vector<int> cases;
  std::vector<int> repaired_steps;
  bool seeds_certified = true;
  bool searched = false;  // found by direct search after the construction got stuck
};

T24Result theorem_2_4_partition(const EmbeddedGraph& g);

/// Checks implications (1)/(2) for every B_3 vertex against a partition.
std::vector<VertexReport> implication_report(const EmbeddedGraph& g, const TriPartition& tp, const BigSmall& bs,
                                             const HypothesisGraph& h, const TreePartition& p);

}  // namespace barnette
