#pragma once

#include <cstdint>
#include <vector>

#include "barnette/embed.hpp"

namespace barnette {

/// C^{2l} * E^2: cycle 0..2l-1, apexes 2l (above) and 2l+1 (below).
EmbeddedGraph gen_bipyramid(int l);

inline constexpr int kMinEvenTriangulationOrder = 4;
inline constexpr int kMaxEvenTriangulationOrder = 16;

/// Splits vertex x along its neighbours at rotation positions i < j (j - i
/// even, both arcs of length >= 2) and puts a new degree-4 vertex between the
/// halves. Adds two vertices.
EmbeddedGraph expand_split(const EmbeddedGraph& g, Vertex x, int i, int j);

/// Inserts a triangle of three degree-4 vertices into face `face` of
/// trace_faces(g). Adds three vertices.
EmbeddedGraph expand_face(const EmbeddedGraph& g, int face);

/// All even plane triangulations on n vertices up to isomorphism and
/// reflection, each in canonical form, sorted by canonical code.
std::vector<EmbeddedGraph> gen_even_triangulations(int n);

/// A random graph with every cycle of length 0 mod 4, about `size` vertices
/// (at most 40), glued from cycles and trees at cut vertices and cut pairs.
Graph gen_multi4(int size, std::uint64_t seed);

/// Like gen_multi4 but 2-connected: cycles glued by cut pairs and ears only.
Graph gen_multi4_two_connected(int size, std::uint64_t seed);

/// Same graph with rotations rearranged so that the canonical 3-partition
/// puts vertex `first` in class 1 and `second` (a neighbour) in class 2.
EmbeddedGraph with_class_order(const EmbeddedGraph& g, Vertex first, Vertex second);

/// Even triangulations of order 6..n_max (each class taking the role of
/// class 3 in turn) whose H lies in the family with every component
/// 2-connected. With `random_extra` > 0 also that many random expansion walks
/// from the exhaustive set up to order n_max + 6. Throws NoneFound if empty.
std::vector<EmbeddedGraph> gen_thm24_instances(int n_max, std::uint64_t seed, int random_extra = 0);

/// The hypothesis of gen_thm24_instances.
bool meets_thm24_hypothesis(const EmbeddedGraph& g);

/// H lies in the family (the hypothesis of the single-edge avoidance).
bool meets_thm23_hypothesis(const EmbeddedGraph& g);

}  // namespace barnette
