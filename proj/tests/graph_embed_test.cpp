#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "barnette/embed.hpp"
#include "barnette/error.hpp"
#include "barnette/gen.hpp"
#include "barnette/graph.hpp"
#include "barnette/stein.hpp"
#include "oracles.hpp"

using namespace barnette;

namespace {

EmbeddedGraph octahedron() { return gen_bipyramid(2); }

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalError;
}

}  // namespace

TEST(Graph, RejectsLoopsAndRepeatedEdges) {
  Graph g(3);
  g.add_edge(0, 1);
  EXPECT_EQ(kind_of([&] { g.add_edge(1, 0); }), ErrorKind::MultiEdgeOrLoop);
  EXPECT_EQ(kind_of([&] { g.add_edge(2, 2); }), ErrorKind::MultiEdgeOrLoop);
}

TEST(Graph, FindCycleAndForest) {
  const Graph c5 = cycle_graph(5);
  const auto all = std::vector<bool>(5, true);
  const auto cyc = find_cycle(c5, all);
  ASSERT_TRUE(cyc);
  EXPECT_EQ(cyc->size(), 5U);
  auto mask = all;
  mask[2] = false;
  EXPECT_TRUE(is_forest(c5, mask));
  EXPECT_TRUE(is_tree(c5, mask));
  mask[4] = false;
  EXPECT_TRUE(is_forest(c5, mask));
  EXPECT_FALSE(is_tree(c5, mask));
}

TEST(Graph, TreeCheckAgreesWithOracle) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 7);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) g.add_edge(u, v);
    std::vector<int> side(n);
    std::vector<bool> mask(n);
    for (int v = 0; v < n; ++v) {
      side[v] = static_cast<int>(rng() % 2);
      mask[v] = side[v] == 0;
    }
    if (std::none_of(mask.begin(), mask.end(), [](bool b) { return b; })) continue;
    EXPECT_EQ(is_tree(g, mask), oracle::induces_tree(g, side, 0));
  }
}

TEST(Embed, OctahedronFacesAndClasses) {
  const EmbeddedGraph g = octahedron();
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.size(), 12U);
  EXPECT_EQ(g.face_count(), 8);
  EXPECT_TRUE(is_triangulation(g));
  EXPECT_TRUE(is_even_triangulation(g));
  const TriPartition tp = tri_partition(g);
  EXPECT_EQ(tp[0], 1);
  EXPECT_EQ(tp[g.rotation(0)[0]], 2);
  for (int c = 1; c <= 3; ++c) EXPECT_EQ(tp.members(c).size(), 2U);
  for (const Edge& e : g.graph().edges()) EXPECT_NE(tp[e.u], tp[e.v]);
}

TEST(Embed, FourCycleHasTwoFaces) {
  const EmbeddedGraph g = EmbeddedGraph::build({{1, 3}, {2, 0}, {3, 1}, {0, 2}});
  EXPECT_EQ(g.face_count(), 2);
  for (const auto& f : trace_faces(g).faces) EXPECT_EQ(f.size(), 4U);
}

TEST(Embed, RejectsBrokenRotations) {
  EXPECT_EQ(kind_of([] { EmbeddedGraph::build({{1}, {}}); }), ErrorKind::AsymmetricAdjacency);
  EXPECT_EQ(kind_of([] { EmbeddedGraph::build({{1, 1}, {0, 0}}); }), ErrorKind::MultiEdgeOrLoop);
  EXPECT_EQ(kind_of([] { EmbeddedGraph::build({{1}, {0}, {3}, {2}}); }), ErrorKind::Disconnected);
  // K4 with one rotation reversed has the wrong face count.
  EXPECT_EQ(kind_of([] { EmbeddedGraph::build({{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 2, 1}}); }),
            ErrorKind::NonPlanarEmbedding);
}

TEST(Embed, FacesMatchOracleTracing) {
  for (int n : {6, 8, 10, 12})
    for (const EmbeddedGraph& g : gen_even_triangulations(n)) {
      const FaceSet fs = trace_faces(g);
      const auto naive = oracle::faces(g);
      ASSERT_EQ(fs.count(), naive.size());
      for (const auto& face : naive) {
        const int f = fs.face_of(g, face[0].first, face[0].second);
        for (auto [u, v] : face) EXPECT_EQ(fs.face_of(g, u, v), f);
      }
    }
}

TEST(Embed, DualOfOctahedronIsCube) {
  const DualGraph d = dual(octahedron());
  ASSERT_TRUE(d.graph.has_value());
  const Graph cube = dual_graph(d);
  EXPECT_EQ(cube.order(), 8);
  EXPECT_EQ(cube.size(), 12U);
  for (Vertex v = 0; v < 8; ++v) EXPECT_EQ(cube.degree(v), 3);
  EXPECT_EQ(oracle::cycle_lengths(cube), (std::set<int>{4, 6, 8}));
}

TEST(Embed, DualFaceClassesFollowPrimalVertices) {
  const EmbeddedGraph g = gen_bipyramid(3);
  const TriPartition tp = tri_partition(g);
  const DualGraph d = dual(g);
  const std::vector<int> colour = dual_face_coloring(d, tp);
  ASSERT_EQ(static_cast<int>(colour.size()), g.order());
  for (Vertex f = 0; f < g.order(); ++f) EXPECT_EQ(colour[f], tp[d.primal_vertex_of_face[f]]);
}

TEST(Embed, CanonicalCodeIgnoresLabels) {
  std::mt19937 rng(3);
  for (const EmbeddedGraph& g : gen_even_triangulations(12)) {
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const EmbeddedGraph h = g.relabeled(perm);
    EXPECT_EQ(canonical_code(g), canonical_code(h));
    EXPECT_EQ(canonical_code(g), canonical_code(h.reflected()));
    EXPECT_TRUE(isomorphic(g, h));
  }
}

TEST(Embed, CanonicalCodesSeparateDistinctTriangulations) {
  const auto all = gen_even_triangulations(12);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) EXPECT_FALSE(isomorphic(all[i], all[j]));
}

TEST(Embed, BigSmallSplit) {
  const EmbeddedGraph g = gen_bipyramid(3);
  const TriPartition tp = tri_partition(g);
  const BigSmall bs = classify_big_small(g, tp);
  EXPECT_EQ(bs.big_set, (VertexSet{6, 7}));
  EXPECT_EQ(bs.small_set.size(), 6U);
  EXPECT_EQ(tp[6], tp[7]);
  EXPECT_EQ(bs.B(tp[6]), (VertexSet{6, 7}));
}
