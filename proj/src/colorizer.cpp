#include "barnette/colorizer.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "barnette/error.hpp"

namespace barnette {

namespace {

std::size_t ix(Vertex v) { return static_cast<std::size_t>(v); }

bool contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

// A colouring subproblem on a local graph. `a` holds the alpha colours.
struct Problem {
  Graph g;
  std::vector<VertexType> type;
  std::vector<int> a;

  bool beta(Vertex v) const { return type[ix(v)] == VertexType::Beta; }
  int order() const { return g.order(); }
  TypedBipartition bipartition() const { return TypedBipartition{type}; }
};

struct Restricted {
  Problem problem;
  Subgraph sub;
};

Restricted restrict_to(const Problem& p, const VertexSet& verts) {
  Restricted r;
  r.sub = induced_subgraph(p.g, verts);
  r.problem.g = r.sub.graph;
  for (Vertex parent : r.sub.to_parent) {
    r.problem.type.push_back(p.type[ix(parent)]);
    r.problem.a.push_back(p.a[ix(parent)]);
  }
  return r;
}

void merge_back(const Restricted& r, const std::vector<int>& local, std::vector<int>& b) {
  for (std::size_t i = 0; i < local.size(); ++i)
    if (local[i] != 0) b[ix(r.sub.to_parent[i])] = local[i];
}

Vertex lowest_beta(const Problem& p, const VertexSet& verts) {
  for (Vertex v : verts)
    if (p.beta(v)) return v;
  return -1;
}

std::vector<int> solve_connected(const Problem& p, Vertex pin, int colour);

// Colours the sub-problem on `verts` with the given pin and copies it into b.
void solve_part(const Problem& p, const VertexSet& verts, Vertex pin, int colour, std::vector<int>& b) {
  Restricted r = restrict_to(p, verts);
  const Vertex local_pin = pin >= 0 ? r.sub.local(pin) : -1;
  merge_back(r, solve_connected(r.problem, local_pin, colour), b);
}

// Colour every k >= 0 vertex by the parity of its beta distance from the
// lowest beta vertex. Requires every alpha vertex to have degree <= 2.
std::vector<int> procedure_a(const Problem& p, Vertex pin, int colour) {
  std::vector<int> k(ix(p.order()), 0);
  const Vertex root = lowest_beta(p, from_mask(std::vector<bool>(ix(p.order()), true)));
  if (root < 0) return k;
  const auto dist = bfs_distances(p.g, root);
  for (Vertex u = 0; u < p.order(); ++u)
    if (p.beta(u) && dist[ix(u)] >= 0) k[ix(u)] = dist[ix(u)] % 4 == 0 ? 1 : 2;
  for (Vertex u = 0; u < p.order(); ++u) {
    if (p.beta(u)) continue;
    if (p.g.degree(u) >= 3)
      throw Error(ErrorKind::InternalError, "alpha vertex of degree >= 3 in an all-beta branching subgraph");
    const auto& nb = p.g.neighbors(u);
    if (nb.size() == 2 && k[ix(nb[0])] == k[ix(nb[1])])
      throw Error(ErrorKind::InternalError, "distance colouring not alternating");
  }
  if (pin >= 0 && k[ix(pin)] != colour)
    for (int& c : k)
      if (c != 0) c = 3 - c;
  return k;
}

// Colours the beta vertices of `region` (a subset of p's vertices whose
// branching vertices in p are all alpha). Beta vertices on threads alternate;
// a lone beta between two branching alpha vertices differs from the lower one.
std::vector<int> procedure_b(const Problem& p, const VertexSet& region, Vertex pin, int colour) {
  std::vector<int> l(ix(p.order()), 0);
  std::vector<std::vector<Vertex>> link(ix(p.order()));
  for (Vertex u : region) {
    if (p.beta(u) || p.g.degree(u) != 2) continue;
    const auto& nb = p.g.neighbors(u);
    if (!contains(region, nb[0]) || !contains(region, nb[1])) continue;
    link[ix(nb[0])].push_back(nb[1]);
    link[ix(nb[1])].push_back(nb[0]);
  }
  auto spread = [&](Vertex root, int c) {
    l[ix(root)] = c;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : link[ix(u)]) {
        if (l[ix(w)] == 0) {
          l[ix(w)] = 3 - l[ix(u)];
          queue.push_back(w);
        } else if (l[ix(w)] == l[ix(u)]) {
          throw Error(ErrorKind::InternalError, "thread alternation conflict at " + std::to_string(w));
        }
      }
    }
  };
  if (pin >= 0 && contains(region, pin)) spread(pin, colour);
  for (Vertex s : region) {
    if (!p.beta(s) || l[ix(s)] != 0) continue;
    if (!link[ix(s)].empty()) {
      spread(s, 1);
      continue;
    }
    int c = 1;
    for (Vertex x : p.g.neighbors(s))
      if (p.g.degree(x) >= 3) {
        c = 3 - p.a[ix(x)];
        break;
      }
    l[ix(s)] = c;
  }
  return l;
}

// Colours the blocks reachable from `root` in breadth-first order; `b`
// already holds the colouring of the root block.
void extend_from_block(const Problem& p, const BlockDecomposition& bd, int root, std::vector<int>& b) {
  std::vector<bool> done(bd.blocks.size(), false);
  done[ix(root)] = true;
  std::deque<int> queue{root};
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    for (Vertex c : bd.blocks[ix(cur)]) {
      if (!std::binary_search(bd.cut_vertices.begin(), bd.cut_vertices.end(), c)) continue;
      for (int next : bd.blocks_of(c)) {
        if (done[ix(next)]) continue;
        done[ix(next)] = true;
        const VertexSet& verts = bd.blocks[ix(next)];
        Vertex pin = -1;
        int colour = 1;
        if (p.beta(c)) {
          pin = c;
          colour = b[ix(c)];
        } else if (p.g.degree(c) == 2) {
          // Two bridges meet at c: its beta neighbours must differ.
          const auto& nb = p.g.neighbors(c);
          pin = contains(verts, nb[0]) ? nb[0] : nb[1];
          const Vertex other = pin == nb[0] ? nb[1] : nb[0];
          colour = 3 - b[ix(other)];
        } else {
          pin = lowest_beta(p, verts);
        }
        solve_part(p, verts, pin, colour, b);
        queue.push_back(next);
      }
    }
  }
}

std::vector<int> solve_mixed(const Problem& p, Vertex pin, int colour) {
  const TypedBipartition bp = p.bipartition();
  DeterminedSide ds;
  try {
    ds = minimal_determined_side(p.g, bp);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NoCutPath)
      throw Error(ErrorKind::InternalError, std::string("mixed branching types but ") + e.what());
    throw;
  }
  const VertexSet& side = ds.side;
  auto split = [&](const PathRec& path) {
    return contains(side, path.front()) ? std::pair{path.front(), path.back()} : std::pair{path.back(), path.front()};
  };
  const auto [x1, y1] = split(ds.pair.p);
  const auto [x2, y2] = split(ds.pair.q);
  (void)y2;
  (void)x2;

  VertexSet k_verts = side, rest_verts;
  for (Vertex v : ds.pair.p.vertices) k_verts.push_back(v);
  for (Vertex v : ds.pair.q.vertices) k_verts.push_back(v);
  std::sort(k_verts.begin(), k_verts.end());
  k_verts.erase(std::unique(k_verts.begin(), k_verts.end()), k_verts.end());
  const VertexSet& other = side == ds.pair.side_c ? ds.pair.side_d : ds.pair.side_c;

  std::vector<int> b(ix(p.order()), 0);
  if (bp.is_beta(x1)) {
    // Side branches only at beta vertices: distance colouring on the side
    // together with both paths, recursion on the far side.
    Restricted k = restrict_to(p, k_verts);
    const Vertex kpin = contains(k_verts, pin) ? k.sub.local(pin) : -1;
    for (Vertex u = 0; u < k.problem.order(); ++u)
      if (k.problem.g.degree(u) >= 3 && !k.problem.beta(u))
        throw Error(ErrorKind::InternalError, "branching alpha vertex in side plus paths");
    merge_back(k, procedure_a(k.problem, kpin, colour), b);
    const bool pin_far = contains(other, pin);
    solve_part(p, other, pin_far ? pin : lowest_beta(p, other), pin_far ? colour : 1, b);
  } else {
    const bool pin_in_side = contains(side, pin);
    const auto l = procedure_b(p, side, pin_in_side ? pin : -1, colour);
    for (Vertex u : side)
      if (l[ix(u)] != 0) b[ix(u)] = l[ix(u)];
    rest_verts = other;
    for (Vertex v : ds.pair.p.vertices) rest_verts.push_back(v);
    for (Vertex v : ds.pair.q.vertices) rest_verts.push_back(v);
    std::sort(rest_verts.begin(), rest_verts.end());
    rest_verts.erase(std::unique(rest_verts.begin(), rest_verts.end()), rest_verts.end());
    if (!pin_in_side)
      solve_part(p, rest_verts, pin, colour, b);
    else
      solve_part(p, rest_verts, y1, 3 - p.a[ix(x1)], b);
  }
  return b;
}

std::vector<int> solve_connected(const Problem& p, Vertex pin, int colour) {
  std::vector<int> b(ix(p.order()), 0);
  if (pin < 0) return b;
  if (p.order() <= 2) {
    b[ix(pin)] = colour;
    return b;
  }
  if (!is_two_connected(p.g)) {
    const BlockDecomposition bd = blocks(p.g);
    const int root = bd.blocks_of(pin).front();
    solve_part(p, bd.blocks[ix(root)], pin, colour, b);
    extend_from_block(p, bd, root, b);
    return b;
  }
  bool heavy_alpha = false, heavy_beta = false;
  for (Vertex u = 0; u < p.order(); ++u)
    if (p.g.degree(u) >= 3) (p.beta(u) ? heavy_beta : heavy_alpha) = true;
  if (!heavy_alpha) return procedure_a(p, pin, colour);
  if (!heavy_beta) return procedure_b(p, from_mask(std::vector<bool>(ix(p.order()), true)), pin, colour);
  return solve_mixed(p, pin, colour);
}

std::vector<int> solve(const Problem& p, Vertex pin, int colour) {
  const Components comps = connected_components(p.g);
  if (comps.count <= 1) return solve_connected(p, pin, colour);
  std::vector<int> b(ix(p.order()), 0);
  for (int c = 0; c < comps.count; ++c) {
    const VertexSet members = comps.members(c);
    if (contains(members, pin))
      solve_part(p, members, pin, colour, b);
    else
      solve_part(p, members, lowest_beta(p, members), 1, b);
  }
  return b;
}

Problem make_problem(const Graph& g, const TypedBipartition& bp, const TwoColoring& a) {
  if (!bp.valid_for(g)) throw Error(ErrorKind::NotBipartite, "bipartition does not match the graph");
  if (a.size() != g.order()) throw Error(ErrorKind::InvalidInput, "alpha colouring has wrong length");
  Problem p{g, bp.type_of, std::vector<int>(ix(g.order()), 0)};
  for (Vertex u = 0; u < g.order(); ++u) {
    if (bp.is_beta(u)) continue;
    if (a[u] != 1 && a[u] != 2)
      throw Error(ErrorKind::InvalidInput, "alpha vertex " + std::to_string(u) + " has no colour");
    p.a[ix(u)] = a[u];
  }
  if (auto bad = find_non_multi4_cycle(g))
    throw Error(ErrorKind::NotInFamilyH, "cycle of length " + std::to_string(bad->size()));
  return p;
}

TwoColoring to_beta_coloring(const std::vector<int>& b) {
  TwoColoring out(static_cast<int>(b.size()), ColoringDomain::Beta);
  out.colour_of = b;
  return out;
}

}  // namespace

VertexSet TwoColoring::with(int c) const {
  VertexSet out;
  for (std::size_t v = 0; v < colour_of.size(); ++v)
    if (colour_of[v] == c) out.push_back(static_cast<Vertex>(v));
  return out;
}

TwoColoring combine(const TwoColoring& a, const TwoColoring& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::InvalidInput, "colourings of different graphs");
  TwoColoring out(a.size(), ColoringDomain::Combined);
  for (Vertex v = 0; v < a.size(); ++v) {
    if (a.has(v) && b.has(v) && a[v] != b[v])
      throw Error(ErrorKind::InvalidInput, "colourings disagree at " + std::to_string(v));
    out.set(v, a.has(v) ? a[v] : b[v]);
  }
  return out;
}

TwoColoring color_beta(const Graph& g, const TypedBipartition& bp, const TwoColoring& a, Vertex pin_vertex,
                       int pin_colour) {
  if (pin_vertex < 0 || pin_vertex >= g.order()) throw Error(ErrorKind::InvalidInput, "pin vertex out of range");
  if (pin_colour != 1 && pin_colour != 2) throw Error(ErrorKind::InvalidInput, "pin colour must be 1 or 2");
  const Problem p = make_problem(g, bp, a);
  if (!bp.is_beta(pin_vertex)) throw Error(ErrorKind::InvalidInput, "pin vertex must be of type beta");
  return to_beta_coloring(solve(p, pin_vertex, pin_colour));
}

TwoColoring color_beta(const ColoringRequest& req) {
  return color_beta(req.graph, req.bipartition, req.a, req.pin_vertex, req.pin_colour);
}

TwoColoring color_beta_4cycle(const Graph& g, const TypedBipartition& bp, const TwoColoring& a, Vertex v, Vertex y,
                              int v_colour) {
  if (v < 0 || y < 0 || v >= g.order() || y >= g.order() || v == y)
    throw Error(ErrorKind::NotOn4Cycle, "vertices out of range or equal");
  if (v_colour != 1 && v_colour != 2) throw Error(ErrorKind::InvalidInput, "colour must be 1 or 2");
  const Problem p = make_problem(g, bp, a);
  if (!bp.is_beta(v) || !bp.is_beta(y)) throw Error(ErrorKind::NotOn4Cycle, "both vertices must be of type beta");
  std::vector<Vertex> common;
  std::set_intersection(g.neighbors(v).begin(), g.neighbors(v).end(), g.neighbors(y).begin(), g.neighbors(y).end(),
                        std::back_inserter(common));
  if (common.size() < 2) throw Error(ErrorKind::NotOn4Cycle, "no 4-cycle through both vertices");
  const Vertex x = common[0], z = common[1];

  const BlockDecomposition bd = blocks(g);
  int block = -1;
  for (int i : bd.blocks_of(v))
    if (contains(bd.blocks[ix(i)], x) && contains(bd.blocks[ix(i)], y) && contains(bd.blocks[ix(i)], z)) block = i;
  if (block < 0) throw Error(ErrorKind::InternalError, "4-cycle not inside one block");

  Restricted r = restrict_to(p, bd.blocks[ix(block)]);
  const Graph& bg = r.problem.g;
  const Vertex lv = r.sub.local(v), ly = r.sub.local(y), lx = r.sub.local(x), lz = r.sub.local(z);
  const int ax = p.a[ix(x)], az = p.a[ix(z)];
  const bool degree_two = bg.degree(lv) == 2 && bg.degree(ly) == 2;

  std::vector<int> b0;
  if (v_colour == ax) {
    b0 = solve_connected(r.problem, lv, ax);
    if (degree_two && ax != az) b0[ix(ly)] = az;
  } else {
    b0 = solve_connected(r.problem, ly, ax);
    if (degree_two && ax != az) b0[ix(lv)] = az;
  }
  (void)lx;
  (void)lz;
  if (b0[ix(lv)] != v_colour || b0[ix(ly)] != 3 - v_colour)
    throw Error(ErrorKind::InternalError, "4-cycle colouring missed the requested orientation");

  std::vector<int> b(ix(g.order()), 0);
  merge_back(r, b0, b);
  extend_from_block(p, bd, block, b);
  // Components other than the one holding the 4-cycle.
  const Components comps = connected_components(g);
  for (int c = 0; c < comps.count; ++c) {
    if (c == comps.label[ix(v)]) continue;
    const VertexSet members = comps.members(c);
    solve_part(p, members, lowest_beta(p, members), 1, b);
  }
  return to_beta_coloring(b);
}

ColoringReport verify_coloring(const Graph& g, const TypedBipartition& bp, const TwoColoring& combined,
                               const ColoringConditions& conditions) {
  if (combined.size() != g.order()) throw Error(ErrorKind::InvalidInput, "colouring has wrong length");
  for (Vertex v = 0; v < g.order(); ++v)
    if (combined[v] != 1 && combined[v] != 2)
      throw Error(ErrorKind::InvalidInput, "colouring is not total at " + std::to_string(v));
  ColoringReport report;
  if (conditions.cycles)
    for (int c = 1; c <= 2 && report.cycles_ok; ++c) {
      std::vector<bool> mask(ix(g.order()));
      for (Vertex v = 0; v < g.order(); ++v) mask[ix(v)] = combined[v] == c;
      if (auto cyc = find_cycle(g, mask)) {
        report.cycles_ok = false;
        report.cycle_witness = *cyc;
      }
    }
  if (conditions.alternation) {
    if (!bp.valid_for(g)) throw Error(ErrorKind::NotBipartite, "bipartition does not match the graph");
    for (Vertex u = 0; u < g.order() && report.alternation_ok; ++u) {
      if (!bp.is_alpha(u) || g.degree(u) != 2) continue;
      const auto& nb = g.neighbors(u);
      if (combined[nb[0]] == combined[nb[1]]) {
        report.alternation_ok = false;
        report.path_witness = {nb[0], u, nb[1]};
      }
    }
  }
  if (conditions.pin) report.pin_ok = combined[conditions.pin->first] == conditions.pin->second;
  return report;
}

}  // namespace barnette
