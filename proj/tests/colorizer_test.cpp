#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "barnette/colorizer.hpp"
#include "barnette/error.hpp"
#include "barnette/gen.hpp"
#include "barnette/structure.hpp"
#include "oracles.hpp"

using namespace barnette;

namespace {

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

TwoColoring random_alpha(const TypedBipartition& bp, std::mt19937& rng) {
  TwoColoring a(static_cast<int>(bp.type_of.size()), ColoringDomain::Alpha);
  for (Vertex v : bp.alpha()) a.set(v, 1 + static_cast<int>(rng() % 2));
  return a;
}

// Independent check of the three colouring conditions.
void expect_sound(const Graph& g, const TypedBipartition& bp, const TwoColoring& a, const TwoColoring& b, Vertex pin,
                  int colour) {
  const int n = g.order();
  std::vector<int> col(n);
  for (Vertex v = 0; v < n; ++v) col[v] = bp.is_alpha(v) ? a[v] : b[v];
  for (Vertex v : bp.beta()) ASSERT_TRUE(b[v] == 1 || b[v] == 2);
  EXPECT_EQ(b[pin], colour);
  for (int c = 1; c <= 2; ++c) {
    Graph sub(n);
    for (const Edge& e : g.edges())
      if (col[e.u] == c && col[e.v] == c) sub.add_edge(e.u, e.v);
    EXPECT_TRUE(oracle::cycle_lengths(sub).empty()) << "monochromatic cycle in colour " << c;
  }
  // Beta - degree-2 alpha - beta threads alternate.
  for (Vertex x : bp.alpha())
    if (g.degree(x) == 2) EXPECT_NE(b[g.neighbors(x)[0]], b[g.neighbors(x)[1]]) << "thread through " << x;
}

}  // namespace

TEST(ColorBeta, EightCycleWithPin) {
  const Graph g = cycle_graph(8);
  const TypedBipartition bp = bipartition_typed(g);
  TwoColoring a(8, ColoringDomain::Alpha);
  for (Vertex v : bp.alpha()) a.set(v, 1);
  for (int colour = 1; colour <= 2; ++colour) {
    const TwoColoring b = color_beta(g, bp, a, 1, colour);
    expect_sound(g, bp, a, b, 1, colour);
    EXPECT_TRUE(verify_coloring(g, bp, combine(a, b), {.pin = std::pair{1, colour}}).ok());
  }
}

TEST(ColorBeta, RejectsK34) {
  Graph g(7);
  TypedBipartition bp;
  bp.type_of.assign(7, VertexType::Beta);
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 7; ++v) g.add_edge(u, v);
  for (int v = 3; v < 7; ++v) bp.type_of[v] = VertexType::Alpha;
  TwoColoring a(7, ColoringDomain::Alpha);
  a.set(3, 1);
  a.set(4, 1);
  a.set(5, 2);
  a.set(6, 2);
  try {
    color_beta(g, bp, a, 0, 1);
    FAIL() << "expected NotInFamilyH";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInFamilyH);
  }
}

TEST(ColorBeta, RejectsPinOnAlpha) {
  const Graph g = cycle_graph(8);
  const TypedBipartition bp = bipartition_typed(g);
  TwoColoring a(8, ColoringDomain::Alpha);
  for (Vertex v : bp.alpha()) a.set(v, 2);
  EXPECT_THROW(color_beta(g, bp, a, 0, 1), Error);
}

TEST(ColorBeta, SoundOnGeneratedGraphs) {
  std::mt19937 rng(5);
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const Graph g = gen_multi4(seed % 3 == 0 ? 16 : 10, seed);
    const TypedBipartition bp = bipartition_typed(g);
    if (bp.beta().empty()) continue;
    for (int round = 0; round < 4; ++round) {
      const TwoColoring a = random_alpha(bp, rng);
      const Vertex pin = bp.beta()[rng() % bp.beta().size()];
      const int colour = 1 + static_cast<int>(rng() % 2);
      const TwoColoring b = color_beta(g, bp, a, pin, colour);
      SCOPED_TRACE("seed " + std::to_string(seed));
      expect_sound(g, bp, a, b, pin, colour);
    }
  }
}

TEST(ColorBeta4Cycle, BothOrientations) {
  // Squares 0-1-2-3 and 0-4-2-5 sharing 0 and 2; betas 1, 3 sit on one square.
  Graph g(6);
  for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 2}, {2, 5}, {5, 0}}) g.add_edge(u, v);
  const TypedBipartition bp = bipartition_typed(g);
  ASSERT_TRUE(bp.is_beta(1) && bp.is_beta(3));
  for (int a0 = 1; a0 <= 2; ++a0)
    for (int a2 = 1; a2 <= 2; ++a2) {
      TwoColoring a(6, ColoringDomain::Alpha);
      a.set(0, a0);
      a.set(2, a2);
      for (int colour = 1; colour <= 2; ++colour) {
        const TwoColoring b = color_beta_4cycle(g, bp, a, 1, 3, colour);
        EXPECT_EQ(b[1], colour);
        EXPECT_EQ(b[3], 3 - colour);
        EXPECT_TRUE(verify_coloring(g, bp, combine(a, b), {.alternation = false}).cycles_ok);
      }
    }
}

TEST(ColorBeta4Cycle, RejectsNonFourCycle) {
  const Graph g = cycle_graph(8);
  const TypedBipartition bp = bipartition_typed(g);
  TwoColoring a(8, ColoringDomain::Alpha);
  for (Vertex v : bp.alpha()) a.set(v, 1);
  try {
    color_beta_4cycle(g, bp, a, 1, 5);
    FAIL() << "expected NotOn4Cycle";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotOn4Cycle);
  }
}

TEST(VerifyColoring, ReportsWitnesses) {
  const Graph g = cycle_graph(8);
  const TypedBipartition bp = bipartition_typed(g);
  TwoColoring all_one(8, ColoringDomain::Combined);
  for (Vertex v = 0; v < 8; ++v) all_one.set(v, 1);
  const ColoringReport r = verify_coloring(g, bp, all_one);
  EXPECT_FALSE(r.cycles_ok);
  EXPECT_EQ(r.cycle_witness.size(), 8U);
  EXPECT_FALSE(r.alternation_ok);
  EXPECT_EQ(r.path_witness.size(), 3U);
}
