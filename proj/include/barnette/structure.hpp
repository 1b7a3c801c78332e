#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "barnette/graph.hpp"

namespace barnette {

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;

enum class VertexType { Alpha, Beta };

struct TypedBipartition {
  std::vector<VertexType> type_of;

  VertexType operator[](Vertex v) const { return type_of[static_cast<std::size_t>(v)]; }
  bool is_alpha(Vertex v) const { return (*this)[v] == VertexType::Alpha; }
  bool is_beta(Vertex v) const { return (*this)[v] == VertexType::Beta; }
  VertexSet alpha() const;
  VertexSet beta() const;
  bool valid_for(const Graph& g) const;
};

/// 2-colouring by type; the lowest vertex of each component is alpha.
TypedBipartition bipartition_typed(const Graph& g);

struct BlockDecomposition {
  std::vector<VertexSet> blocks;             // bridges are 2-vertex blocks, isolated vertices 1-vertex blocks
  std::vector<std::vector<Edge>> block_edges;
  VertexSet cut_vertices;

  /// Indices of the blocks containing v.
  std::vector<int> blocks_of(Vertex v) const;
};

BlockDecomposition blocks(const Graph& g);

/// At least three vertices, connected, no cut vertex.
bool is_two_connected(const Graph& g);

/// Calls `visit` once per simple cycle (as a vertex sequence) until it
/// returns false. Throws CycleCapExceeded after `cap` cycles.
void for_each_simple_cycle(const Graph& g, std::size_t cap,
                           const std::function<bool(std::span<const Vertex>)>& visit);

/// A cycle whose length is not a multiple of four, if any.
std::optional<std::vector<Vertex>> find_non_multi4_cycle(const Graph& g, std::size_t cap = kDefaultCycleCap);

/// Every cycle has length 0 mod 4.
bool is_multi4(const Graph& g, std::size_t cap = kDefaultCycleCap);

/// A path given by its vertex sequence. Its interior is the set of inner
/// vertices, or the single edge when the path has length one.
struct PathRec {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  bool interior_is_edge() const { return length() == 1; }
  VertexSet inner() const;
  bool contains(Vertex v) const;
  PathRec reversed() const;
  friend bool operator==(const PathRec&, const PathRec&) = default;
};

/// Consecutive vertices adjacent, no repeats, length at least one.
bool is_path(const Graph& g, const PathRec& p);

/// Inner vertices of degree 2 in g; ends of degree >= 3 and of different types.
bool satisfies_cut_path_condition(const Graph& g, const TypedBipartition& bp, const PathRec& p);

/// All paths of g satisfying the cut-path condition, each listed once with
/// its lower end first.
std::vector<PathRec> cut_paths(const Graph& g, const TypedBipartition& bp);

/// g with the interiors of `paths` removed: inner vertices dropped, single
/// edges deleted. `present` marks the surviving vertices.
struct Reduced {
  Graph graph;
  std::vector<bool> present;
};
Reduced remove_interiors(const Graph& g, std::span<const PathRec> paths);

/// For a C-path p of the 2-connected subgraph induced by `c`: ends share a type.
bool cpath_type_check(const Graph& g, const TypedBipartition& bp, const VertexSet& c, const PathRec& p);

struct ChainDecomposition {
  std::vector<VertexSet> blocks;     // B_1 .. B_{n+1}
  std::vector<Vertex> cut_vertices;  // a_1 .. a_n
  Vertex x = -1;                     // path end inside B_1
  Vertex y = -1;                     // path end inside B_{n+1}
};

/// Ordered chain of blocks of g - Int p from p.front() to p.back().
ChainDecomposition chain_decompose(const Graph& g, const TypedBipartition& bp, const PathRec& p);

/// No 4-cycle has an edge whose ends both have degree >= 3.
bool heavy_4cycle_check(const Graph& g, const TypedBipartition& bp);

struct CutPair {
  PathRec p;
  PathRec q;
  VertexSet side_c;  // component holding p.front()
  VertexSet side_d;
};

/// Recomputes every clause of the cut-pair definition from scratch.
bool verify_cut_pair(const Graph& g, const TypedBipartition& bp, const CutPair& cp);

/// A partner q for p such that (p, q) cuts g and `block` (a 2-connected block
/// of g - Int p) lies inside one determined side.
CutPair find_cut_pair(const Graph& g, const TypedBipartition& bp, const PathRec& p, const VertexSet& block);

struct DeterminedSide {
  CutPair pair;
  VertexSet side;
};

/// A determined side that is minimal by inclusion among determined sides.
/// Its vertices of degree >= 3 all share one type.
DeterminedSide minimal_determined_side(const Graph& g, const TypedBipartition& bp);

}  // namespace barnette
