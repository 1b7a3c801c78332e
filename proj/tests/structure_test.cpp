#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "barnette/error.hpp"
#include "barnette/gen.hpp"
#include "barnette/structure.hpp"
#include "oracles.hpp"

using namespace barnette;

namespace {

Graph from_pairs(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph k34() {
  Graph g(7);
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 7; ++v) g.add_edge(u, v);
  return g;
}

// Squares 0-1-2-3 and 4-5-6-7, joined by the edge 0-4 and the path 2-8-9-6.
Graph two_squares() {
  return from_pairs(10, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {0, 4}, {2, 8}, {8, 9}, {9, 6}});
}

std::vector<bool> alpha_mask(const TypedBipartition& bp) {
  std::vector<bool> out;
  for (VertexType t : bp.type_of) out.push_back(t == VertexType::Alpha);
  return out;
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

TEST(Bipartition, CycleAlternates) {
  const TypedBipartition bp = bipartition_typed(cycle_graph(8));
  for (Vertex v = 0; v < 8; ++v) EXPECT_EQ(bp.is_alpha(v), v % 2 == 0);
  EXPECT_EQ(kind_of([] { bipartition_typed(cycle_graph(3)); }), ErrorKind::NotBipartite);
}

TEST(Blocks, SmallShapes) {
  const BlockDecomposition bowtie = blocks(from_pairs(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}));
  EXPECT_EQ(bowtie.blocks.size(), 2U);
  EXPECT_EQ(bowtie.cut_vertices, (VertexSet{2}));
  const BlockDecomposition path = blocks(from_pairs(4, {{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(path.blocks.size(), 3U);
  EXPECT_EQ(path.cut_vertices, (VertexSet{1, 2}));
  EXPECT_EQ(blocks(k34()).blocks.size(), 1U);
  EXPECT_TRUE(is_two_connected(k34()));
}

TEST(Multi4, NamedGraphs) {
  EXPECT_TRUE(is_multi4(cycle_graph(8)));
  EXPECT_FALSE(is_multi4(cycle_graph(6)));
  EXPECT_FALSE(is_multi4(k34()));
  EXPECT_TRUE(is_multi4(two_squares()));
  const auto witness = find_non_multi4_cycle(k34());
  ASSERT_TRUE(witness);
  EXPECT_NE(witness->size() % 4, 0U);
}

TEST(Multi4, AgreesWithOracleOnEveryGraphUpToSixVertices) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
    for (std::uint32_t mask = 0; mask < (1U << slots.size()); ++mask) {
      Graph g(n);
      for (std::size_t i = 0; i < slots.size(); ++i)
        if (mask >> i & 1U) g.add_edge(slots[i].first, slots[i].second);
      ASSERT_EQ(is_multi4(g), oracle::all_cycles_multiple_of_four(g)) << "n=" << n << " mask=" << mask;
    }
  }
}

TEST(Multi4, AgreesWithOracleOnRandomGraphsUpToTwelveVertices) {
  std::mt19937 rng(11);
  int positives = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 7 + static_cast<int>(rng() % 6);
    Graph g(n);
    // Sparse bipartite-leaning graphs so that both answers occur.
    const int density = 2 + static_cast<int>(rng() % 5);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if ((u + v) % 2 == 1 ? rng() % 10 < static_cast<unsigned>(density) : rng() % 40 == 0) g.add_edge(u, v);
    const bool expected = oracle::all_cycles_multiple_of_four(g);
    positives += expected;
    ASSERT_EQ(is_multi4(g), expected) << "trial " << trial;
  }
  EXPECT_GT(positives, 100);
}

TEST(Multi4, GeneratedGraphsPassOracle) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = gen_multi4(12, seed);
    ASSERT_LE(g.order(), 16);
    EXPECT_TRUE(oracle::all_cycles_multiple_of_four(g)) << "seed " << seed;
    const Graph h = gen_multi4_two_connected(12, seed);
    EXPECT_TRUE(is_two_connected(h));
    EXPECT_TRUE(oracle::all_cycles_multiple_of_four(h)) << "seed " << seed;
  }
}

TEST(CutPaths, TwoSquares) {
  const Graph g = two_squares();
  const TypedBipartition bp = bipartition_typed(g);
  const std::vector<PathRec> paths = cut_paths(g, bp);
  ASSERT_EQ(paths.size(), 2U);
  EXPECT_EQ(paths[0].vertices, (std::vector<Vertex>{0, 4}));
  EXPECT_EQ(paths[1].vertices, (std::vector<Vertex>{2, 8, 9, 6}));
  EXPECT_FALSE(satisfies_cut_path_condition(g, bp, PathRec{{1, 2, 8}}));
}

TEST(Chain, TwoSquaresAlongTheEdge) {
  const Graph g = two_squares();
  const TypedBipartition bp = bipartition_typed(g);
  const ChainDecomposition ch = chain_decompose(g, bp, PathRec{{0, 4}});
  EXPECT_EQ(ch.x, 0);
  EXPECT_EQ(ch.y, 4);
  ASSERT_EQ(ch.blocks.size(), ch.cut_vertices.size() + 1);
  EXPECT_EQ(ch.blocks.front(), (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(ch.blocks.back(), (VertexSet{4, 5, 6, 7}));
  EXPECT_EQ(ch.cut_vertices, (std::vector<Vertex>{2, 8, 9, 6}));
  for (std::size_t i = 0; i + 1 < ch.blocks.size(); ++i) {
    VertexSet common;
    std::set_intersection(ch.blocks[i].begin(), ch.blocks[i].end(), ch.blocks[i + 1].begin(), ch.blocks[i + 1].end(),
                          std::back_inserter(common));
    EXPECT_EQ(common, (VertexSet{ch.cut_vertices[i]}));
  }
  EXPECT_EQ(kind_of([&] { chain_decompose(g, bp, PathRec{{1, 2, 8}}); }), ErrorKind::PathConditionViolated);
}

TEST(CutPair, TwoSquares) {
  const Graph g = two_squares();
  const TypedBipartition bp = bipartition_typed(g);
  const CutPair cp = find_cut_pair(g, bp, PathRec{{0, 4}}, VertexSet{0, 1, 2, 3});
  EXPECT_EQ(cp.q.vertices.size(), 4U);
  EXPECT_TRUE(verify_cut_pair(g, bp, cp));
  const auto sides = oracle::cut_pair_sides(g, alpha_mask(bp), cp.p.vertices, cp.q.vertices);
  ASSERT_EQ(sides.size(), 2U);
  EXPECT_EQ(cp.side_c, (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(cp.side_d, (VertexSet{4, 5, 6, 7}));
}

TEST(DeterminedSide, TwoSquaresGivesASquare) {
  const Graph g = two_squares();
  const TypedBipartition bp = bipartition_typed(g);
  const DeterminedSide ds = minimal_determined_side(g, bp);
  EXPECT_EQ(ds.side.size(), 4U);
  int alpha = 0, beta = 0;
  for (Vertex v : ds.side)
    if (g.degree(v) >= 3) (bp.is_alpha(v) ? alpha : beta)++;
  EXPECT_TRUE(alpha == 0 || beta == 0);
  EXPECT_EQ(kind_of([] { minimal_determined_side(cycle_graph(8), bipartition_typed(cycle_graph(8))); }),
            ErrorKind::NoCutPath);
}

TEST(DeterminedSide, RandomTwoConnectedGraphs) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Graph g = gen_multi4_two_connected(16, seed);
    const TypedBipartition bp = bipartition_typed(g);
    if (cut_paths(g, bp).empty()) continue;
    ++checked;
    const DeterminedSide ds = minimal_determined_side(g, bp);
    const auto sides = oracle::cut_pair_sides(g, alpha_mask(bp), ds.pair.p.vertices, ds.pair.q.vertices);
    ASSERT_EQ(sides.size(), 2U) << "seed " << seed;
    EXPECT_TRUE(ds.side == VertexSet(sides[0].begin(), sides[0].end()) ||
                ds.side == VertexSet(sides[1].begin(), sides[1].end()));
    int alpha = 0, beta = 0;
    for (Vertex v : ds.side)
      if (g.degree(v) >= 3) (bp.is_alpha(v) ? alpha : beta)++;
    EXPECT_TRUE(alpha == 0 || beta == 0) << "seed " << seed;
  }
  EXPECT_GT(checked, 20);
}

TEST(Heavy4Cycle, SharedOppositeVertices) {
  // Squares 0-1-2-3 and 0-4-2-5 share the opposite vertices 0 and 2.
  const Graph g = from_pairs(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 2}, {2, 5}, {5, 0}});
  EXPECT_TRUE(heavy_4cycle_check(g, bipartition_typed(g)));
  EXPECT_TRUE(heavy_4cycle_check(cycle_graph(4), bipartition_typed(cycle_graph(4))));
}

TEST(Heavy4Cycle, HoldsOnGeneratedTwoConnectedGraphs) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = gen_multi4_two_connected(20, seed);
    EXPECT_TRUE(heavy_4cycle_check(g, bipartition_typed(g))) << "seed " << seed;
  }
}

TEST(CPath, EndsShareTypeOnGeneratedGraphs) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Graph g = gen_multi4_two_connected(14, seed);
    const TypedBipartition bp = bipartition_typed(g);
    const auto cyc = find_cycle(g, std::vector<bool>(g.order(), true));
    ASSERT_TRUE(cyc);
    VertexSet c(cyc->begin(), cyc->end());
    std::sort(c.begin(), c.end());
    const Subgraph sub = induced_subgraph(g, c);
    if (!is_two_connected(sub.graph)) continue;
    std::vector<bool> in_c = to_mask(g.order(), c);
    // Every C-path: walk from a vertex of C through vertices outside C.
    std::vector<Vertex> path;
    std::vector<bool> used(g.order(), false);
    std::function<void(Vertex)> extend = [&](Vertex u) {
      for (Vertex w : g.neighbors(u)) {
        if (used[w]) continue;
        if (in_c[w]) {
          if (path.size() == 1 && (sub.graph.adjacent(sub.local(u), sub.local(w)))) continue;
          if (w < path.front()) continue;
          path.push_back(w);
          ++checked;
          EXPECT_TRUE(cpath_type_check(g, bp, c, PathRec{path}));
          path.pop_back();
          continue;
        }
        used[w] = true;
        path.push_back(w);
        extend(w);
        path.pop_back();
        used[w] = false;
      }
    };
    for (Vertex s : c) {
      path = {s};
      used[s] = true;
      extend(s);
      used[s] = false;
    }
  }
  EXPECT_GT(checked, 0);
}
