#pragma once

#include <optional>
#include <vector>

#include "barnette/graph.hpp"
#include "barnette/structure.hpp"

namespace barnette {

enum class ColoringDomain { Alpha, Beta, Combined, Partial };

/// Partial map vertex -> {1, 2}; 0 marks an uncoloured vertex.
struct TwoColoring {
  std::vector<int> colour_of;
  ColoringDomain domain = ColoringDomain::Partial;

  TwoColoring() = default;
  TwoColoring(int n, ColoringDomain d) : colour_of(static_cast<std::size_t>(n), 0), domain(d) {}

  int operator[](Vertex v) const { return colour_of[static_cast<std::size_t>(v)]; }
  bool has(Vertex v) const { return (*this)[v] != 0; }
  void set(Vertex v, int c) { colour_of[static_cast<std::size_t>(v)] = c; }
  int size() const { return static_cast<int>(colour_of.size()); }
  VertexSet with(int c) const;
  friend bool operator==(const TwoColoring&, const TwoColoring&) = default;
};

/// a on the alpha side and b on the beta side merged into one colouring.
TwoColoring combine(const TwoColoring& a, const TwoColoring& b);

struct ColoringRequest {
  Graph graph;
  TypedBipartition bipartition;
  TwoColoring a;
  Vertex pin_vertex = -1;
  int pin_colour = 1;
};

/// A colouring b of the beta vertices such that a combined with b has no
/// monochromatic cycle, beta vertices along degree-2 threads alternate, and
/// b(pin_vertex) = pin_colour.
TwoColoring color_beta(const Graph& g, const TypedBipartition& bp, const TwoColoring& a, Vertex pin_vertex,
                       int pin_colour);
TwoColoring color_beta(const ColoringRequest& req);

/// v and y are the beta vertices of a 4-cycle. Returns b with no
/// monochromatic cycle, b(v) = v_colour and b(y) = 3 - v_colour.
TwoColoring color_beta_4cycle(const Graph& g, const TypedBipartition& bp, const TwoColoring& a, Vertex v, Vertex y,
                              int v_colour = 1);

struct ColoringConditions {
  bool cycles = true;
  bool alternation = true;
  std::optional<std::pair<Vertex, int>> pin;
};

struct ColoringReport {
  bool cycles_ok = true;
  bool alternation_ok = true;
  bool pin_ok = true;
  std::vector<Vertex> cycle_witness;  // monochromatic cycle
  std::vector<Vertex> path_witness;   // beta-alpha-beta thread with equal ends

  bool ok() const { return cycles_ok && alternation_ok && pin_ok; }
};

/// Checks the requested conditions on a total colouring of g. Alternation
/// uses the bipartition; a monochromatic cycle exists exactly when some
/// colour class induces a non-forest.
ColoringReport verify_coloring(const Graph& g, const TypedBipartition& bp, const TwoColoring& combined,
                               const ColoringConditions& conditions = {});

}  // namespace barnette
