#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <tuple>

#include "barnette/error.hpp"
#include "barnette/treesplit.hpp"

namespace barnette {

namespace {

std::size_t ix(Vertex v) { return static_cast<std::size_t>(v); }

bool contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

// Colour of u under a (classes 1, 2 among big vertices) merged with b.
struct Palette {
  const TwoColoring& a;
  const TwoColoring& b;
  int operator()(Vertex u) const { return a.has(u) ? a[u] : b[u]; }
};

void add_induced(Graph& l, const Graph& g, const VertexSet& verts) {
  for (Vertex u : verts)
    for (Vertex w : g.neighbors(u))
      if (u < w && contains(verts, w) && !l.adjacent(u, w)) l.add_edge(u, w);
}

// A path from s to t in l whose vertices all share s's colour.
bool monochromatic_path(const Graph& l, const Palette& colour, Vertex s, Vertex t) {
  const int c = colour(s);
  if (c == 0 || colour(t) != c) return false;
  std::vector<bool> mask(ix(l.order()), false);
  for (Vertex u = 0; u < l.order(); ++u) mask[ix(u)] = colour(u) == c;
  return shortest_path(l, s, t, mask).has_value();
}

std::optional<std::vector<Vertex>> monochromatic_cycle(const Graph& l, const Palette& colour) {
  for (int c = 1; c <= 2; ++c) {
    std::vector<bool> mask(ix(l.order()), false);
    for (Vertex u = 0; u < l.order(); ++u) mask[ix(u)] = colour(u) == c;
    if (auto cyc = find_cycle(l, mask)) return cyc;
  }
  return std::nullopt;
}

Graph big_graph(const EmbeddedGraph& g, const BigSmall& bs) {
  Graph l(g.order());
  add_induced(l, g.graph(), bs.big_set);
  return l;
}

TwoColoring global_alpha(const EmbeddedGraph& g, const TriPartition& tp, const BigSmall& bs) {
  TwoColoring a(g.order(), ColoringDomain::Alpha);
  for (Vertex u : bs.big_set)
    if (tp[u] != 3) a.set(u, tp[u]);
  return a;
}

TwoColoring to_global(const EmbeddedGraph& g, const HypothesisGraph& h, const TwoColoring& local) {
  TwoColoring b(g.order(), ColoringDomain::Beta);
  for (Vertex l = 0; l < local.size(); ++l)
    if (local.has(l)) b.set(h.sub.to_parent[ix(l)], local[l]);
  return b;
}

PartitionConstraint seeds(const BigSmall& bs, const TwoColoring& b) {
  PartitionConstraint c{bs.B(1), bs.B(2)};
  for (Vertex u = 0; u < b.size(); ++u) {
    if (b[u] == 1) c.x.push_back(u);
    if (b[u] == 2) c.y.push_back(u);
  }
  for (VertexSet* s : {&c.x, &c.y}) {
    std::sort(s->begin(), s->end());
    s->erase(std::unique(s->begin(), s->end()), s->end());
  }
  return c;
}

void check_hypothesis(const EmbeddedGraph& g, const HypothesisGraph& h) {
  (void)g;
  if (auto bad = find_non_multi4_cycle(h.graph())) {
    std::string cyc;
    for (Vertex u : *bad) cyc += (cyc.empty() ? "" : "-") + std::to_string(h.sub.to_parent[ix(u)]);
    throw Error(ErrorKind::HNotInFamily, "H has the cycle " + cyc);
  }
}

Vertex lowest_of_class(const VertexSet& verts, const TriPartition& tp, const BigSmall& bs, int cls, bool big) {
  for (Vertex u : verts)
    if (tp[u] == cls && bs.is_big(u) == big) return u;
  return -1;
}

}  // namespace

T23Extension extend_coloring_t23(const EmbeddedGraph& g, const TriPartition& tp, const BigSmall& bs,
                                 const TwoColoring& a, const TwoColoring& b, Vertex v, Vertex w,
                                 const FanPath& p_w) {
  const VertexSet inner = p_w.interior();
  if (!contains(inner, w)) throw Error(ErrorKind::InvalidInput, "w is not inside the chosen fan path");
  auto in_b3 = [&](Vertex u) { return bs.is_big(u) && tp[u] == 3; };
  const bool v0_big = bs.is_big(p_w.v0[0]) && bs.is_big(p_w.v0[1]);

  T23Extension ext{b, 0};
  TwoColoring& b0 = ext.b0;
  b0.domain = ColoringDomain::Partial;
  Vertex y = -1, x = -1, z = -1;
  if (p_w.in_v0(v)) {
    y = p_w.v0[0] == v ? p_w.v0[1] : p_w.v0[0];
    x = p_w.v1[0];
    z = p_w.v1[1];
    if (in_b3(y)) ext.case_no = 1;
    else if (!bs.is_big(y) && tp[y] == 3) ext.case_no = 4;
  } else if (p_w.in_v1(v) && v0_big) {
    y = p_w.v1[0] == v ? p_w.v1[1] : p_w.v1[0];
    x = p_w.v0[0];
    z = p_w.v0[1];
    ext.case_no = in_b3(y) ? 2 : 3;
  }
  if (ext.case_no == 0) throw Error(ErrorKind::CaseUnmatched, "fan path through w matches none of the four cases");

  const Palette colour{a, b0};
  const int bv = b[v];
  auto by_class = [&] {
    for (Vertex u : inner) b0.set(u, tp[u]);
  };
  auto all = [&](int c) {
    for (Vertex u : inner) b0.set(u, c);
  };
  switch (ext.case_no) {
    case 1:
      if (b[y] == bv) throw Error(ErrorKind::ConditionViolated, "b(v) = b(y) although y is in B_3");
      by_class();
      break;
    case 2:
      if (b[y] == bv) throw Error(ErrorKind::ConditionViolated, "b(v) = b(y) although y is in B_3");
      all(bv);
      break;
    case 3: {
      const Graph l = big_graph(g, bs);
      all(bv);
      if (!monochromatic_path(l, colour, x, z)) {
        const Vertex s = lowest_of_class(inner, tp, bs, 3, false);
        if (s < 0) throw Error(ErrorKind::CaseUnmatched, "no S_3 vertex inside the fan path");
        b0.set(s, a[x]);
      }
      break;
    }
    case 4:
      b0.set(y, 3 - bv);
      by_class();
      break;
  }
  if (b0[w] != bv) throw Error(ErrorKind::InternalError, "extension gave w a colour different from v");
  Graph l = big_graph(g, bs);
  add_induced(l, g.graph(), p_w.span());
  if (monochromatic_cycle(l, colour))
    throw Error(ErrorKind::ConditionViolated, "monochromatic cycle after extending along the fan path");
  return ext;
}

T23Result theorem_2_3_partition(const EmbeddedGraph& g, Vertex v, Vertex w) {
  if (!is_even_triangulation(g)) throw Error(ErrorKind::NotEvenTriangulation, "input is not an even triangulation");
  if (v < 0 || w < 0 || v >= g.order() || w >= g.order()) throw Error(ErrorKind::InvalidInput, "vertex out of range");
  const TriPartition tp = tri_partition(g);
  const BigSmall bs = classify_big_small(g, tp);
  if (!bs.is_big(v) || tp[v] != 3) throw Error(ErrorKind::InvalidInput, "v must be a big vertex of class 3");
  if (!g.graph().adjacent(v, w)) throw Error(ErrorKind::InvalidInput, "v and w are not adjacent");
  const HypothesisGraph h = hypothesis_graph(g, tp, bs);
  check_hypothesis(g, h);
  const int side_colour = tp[w];

  T23Result out;
  if (is_bipyramid(g)) {
    // The apexes are the only big vertices; each takes the cycle vertices of
    // one class as a star.
    Vertex other = -1;
    for (Vertex u = 0; u < g.order(); ++u)
      if (u != v && !g.graph().adjacent(u, v)) other = u;
    VertexSet mine{v}, theirs{other};
    for (Vertex u = 0; u < g.order(); ++u) {
      if (u == v || u == other) continue;
      (tp[u] == side_colour ? mine : theirs).push_back(u);
    }
    std::sort(mine.begin(), mine.end());
    std::sort(theirs.begin(), theirs.end());
    out.partition = side_colour == 1 ? TreePartition{mine, theirs} : TreePartition{theirs, mine};
    out.case_no = -1;
  } else {
    const TwoColoring a = global_alpha(g, tp, bs);
    TwoColoring b;
    PartitionConstraint c;
    if (bs.is_big(w)) {
      b = to_global(g, h, color_beta(h.graph(), h.bp, h.a, h.sub.local(v), side_colour));
      c = seeds(bs, b);
    } else {
      std::vector<const FanPath*> eligible;
      const std::vector<FanPath> paths = fan_paths(g, bs);
      for (const FanPath& p : paths) {
        if (!contains(p.interior(), w)) continue;
        const bool v0_big = bs.is_big(p.v0[0]) && bs.is_big(p.v0[1]);
        const bool v0_v_s3 = p.in_v0(v) && [&] {
          const Vertex y = p.v0[0] == v ? p.v0[1] : p.v0[0];
          return !bs.is_big(y) && tp[y] == 3;
        }();
        if ((v0_big || v0_v_s3) && (p.in_v0(v) || p.in_v1(v))) eligible.push_back(&p);
      }
      if (eligible.empty()) throw Error(ErrorKind::CaseUnmatched, "no fan path through w meets the case conditions");
      std::stable_partition(eligible.begin(), eligible.end(), [&](const FanPath* p) { return p->in_v0(v); });
      // Any eligible path will do; the first whose extension holds is used.
      std::optional<T23Extension> ext;
      std::optional<Error> last;
      for (const FanPath* chosen : eligible) {
        const Vertex y = chosen->in_v0(v) ? (chosen->v0[0] == v ? chosen->v0[1] : chosen->v0[0])
                                          : (chosen->v1[0] == v ? chosen->v1[1] : chosen->v1[0]);
        if (bs.is_big(y) && tp[y] == 3)
          b = to_global(g, h,
                        color_beta_4cycle(h.graph(), h.bp, h.a, h.sub.local(v), h.sub.local(y), side_colour));
        else
          b = to_global(g, h, color_beta(h.graph(), h.bp, h.a, h.sub.local(v), side_colour));
        try {
          ext = extend_coloring_t23(g, tp, bs, a, b, v, w, *chosen);
          break;
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::ConditionViolated) throw;
          last = e;
        }
      }
      if (!ext) throw *last;
      out.case_no = ext->case_no;
      c = seeds(bs, ext->b0);
    }
    out.seeds_certified = constraint_certified(g, c);
    out.partition =
        tree_partition_solve(g, c, kDefaultSolverCap, out.seeds_certified ? SeedCheck::Full : SeedCheck::Basic);
  }

  const PartitionCheck check = verify_tree_partition(g.graph(), out.partition);
  if (!check.ok) throw Error(ErrorKind::InternalError, "partition rejected: " + check.reason);
  const VertexSet& home = side_colour == 1 ? out.partition.s : out.partition.t;
  bool placed = contains(home, v) && contains(home, w);
  for (Vertex u : bs.B(1)) placed = placed && contains(out.partition.s, u);
  for (Vertex u : bs.B(2)) placed = placed && contains(out.partition.t, u);
  if (!placed) throw Error(ErrorKind::InternalError, "partition misplaces v, w or a big vertex");
  return out;
}

T24Extension extend_coloring_t24(const EmbeddedGraph& g, const TriPartition& tp, const BigSmall& bs,
                                 const HypothesisGraph& h, const TwoColoring& a, const TwoColoring& b,
                                 const std::vector<FanPath>& paths, bool repair) {
  auto in_b3 = [&](Vertex u) { return bs.is_big(u) && tp[u] == 3; };
  auto in_s3 = [&](Vertex u) { return !bs.is_big(u) && tp[u] == 3; };
  auto in_b12 = [&](Vertex u) { return bs.is_big(u) && tp[u] != 3; };

  T24Extension ext;
  ext.b = b;
  ext.b.domain = ColoringDomain::Partial;
  std::vector<bool> in_m(ix(g.order()), false);
  for (Vertex u : bs.B(3)) in_m[ix(u)] = true;
  Graph l = big_graph(g, bs);
  const Palette colour{a, ext.b};

  for (std::size_t i = 0; i < paths.size(); ++i) {
    const FanPath& p = paths[i];
    const std::string step = "step " + std::to_string(i + 1);
    auto unmatched = [&](const std::string& why) { throw Error(ErrorKind::CaseUnmatched, step + ": " + why); };
    const VertexSet inner = p.interior();
    Vertex v = -1, y = -1, x = -1, z = -1;
    int case_no = 0;
    auto pick_pair = [&](const std::array<Vertex, 2>& pair, const std::array<Vertex, 2>& other) {
      v = std::min(pair[0], pair[1]);
      y = std::max(pair[0], pair[1]);
      x = other[0];
      z = other[1];
    };
    const bool v0_small = !bs.is_big(p.v0[0]) || !bs.is_big(p.v0[1]);
    if (v0_small) {
      if (!(in_b3(p.v0[0]) && in_s3(p.v0[1])) && !(in_b3(p.v0[1]) && in_s3(p.v0[0])))
        unmatched("fan path with small V0 outside the hat family");
      v = in_b3(p.v0[0]) ? p.v0[0] : p.v0[1];
      y = v == p.v0[0] ? p.v0[1] : p.v0[0];
      x = p.v1[0];
      z = p.v1[1];
      case_no = h.degree(v) >= 3 ? 6 : (h.degree(v) == 2 ? 7 : 0);
    } else if (in_b3(p.v0[0]) && in_b3(p.v0[1])) {
      pick_pair(p.v0, p.v1);
    } else if (in_b3(p.v1[0]) && in_b3(p.v1[1])) {
      pick_pair(p.v1, p.v0);
    } else if (in_b3(p.v1[0]) || in_b3(p.v1[1])) {
      v = in_b3(p.v1[0]) ? p.v1[0] : p.v1[1];
      y = v == p.v1[0] ? p.v1[1] : p.v1[0];
      x = p.v0[0];
      z = p.v0[1];
      if (in_b12(y)) case_no = 5;
    }
    if (case_no == 0 && v >= 0 && in_b3(y)) {
      const bool on_v0 = p.in_v0(v);
      const int dv = h.degree(v), dy = h.degree(y);
      if (dv >= 3 && dy >= 3) case_no = on_v0 ? 1 : 2;
      else if (dv == 2 && dy == 2) case_no = on_v0 ? 3 : 4;
    }
    if (case_no == 0) unmatched("no case applies");
    if (!in_b12(x) || !in_b12(z)) unmatched("x or z outside B_1 + B_2");

    std::vector<Vertex> added;
    auto put = [&](Vertex u, int c) {
      if (in_m[ix(u)]) return;
      ext.b.set(u, c);
      in_m[ix(u)] = true;
      added.push_back(u);
    };
    auto all = [&](int c) {
      for (Vertex u : inner) put(u, c);
    };
    auto by_class = [&] {
      for (Vertex u : inner) put(u, tp[u]);
    };
    auto one_then_rest = [&](Vertex s, int cs, int rest) {
      put(s, cs);
      all(rest);
    };
    const int bv = ext.b[v];
    switch (case_no) {
      case 1:
        if (ext.b[y] == bv) throw Error(ErrorKind::ConditionViolated, step + ": condition (b) fails for v, y");
        by_class();
        break;
      case 2:
        if (a[x] != a[z]) unmatched("case (2) with a(x) != a(z)");
        all(3 - a[x]);
        break;
      case 3:
        if (monochromatic_path(l, colour, v, y)) {
          if (a[x] != bv) all(a[x]);
          else if (a[z] != bv) all(a[z]);
          else unmatched("case (3) with a(x) = a(z) = b(v)");
        } else {
          const Vertex s = lowest_of_class(inner, tp, bs, bv, false);
          if (s < 0) unmatched("case (3) without a suitable small vertex");
          one_then_rest(s, bv, 3 - bv);
        }
        break;
      case 4:
        if (monochromatic_path(l, colour, x, z)) {
          all(bv);
        } else {
          const Vertex s = lowest_of_class(inner, tp, bs, bv, false);
          if (s < 0) unmatched("case (4) without a suitable small vertex");
          one_then_rest(s, 3 - bv, bv);
        }
        break;
      case 5:
        if (monochromatic_path(l, colour, x, z)) {
          all(a[y]);
        } else {
          const Vertex s = lowest_of_class(inner, tp, bs, 3, false);
          if (s < 0) unmatched("case (5) without a small class-3 vertex");
          one_then_rest(s, a[x], 3 - a[x]);
        }
        break;
      case 6:
        put(y, 3 - bv);
        by_class();
        break;
      case 7:
        put(y, bv);
        all(3 - bv);
        break;
    }
    ext.cases.push_back(case_no);
    const VertexSet span = p.span();
    add_induced(l, g.graph(), span);

    // First failing condition among (d), (e), (f), if any.
    auto violation = [&]() -> const char* {
      if (monochromatic_cycle(l, colour)) return "(d)";
      for (Vertex u : {p.v0[0], p.v0[1], p.v1[0], p.v1[1]}) {
        if (!in_b3(u)) continue;
        std::vector<Vertex> around;
        for (Vertex t : g.graph().neighbors(u))
          if (contains(span, t)) around.push_back(t);
        if (h.degree(u) >= 3) {
          for (Vertex t : around)
            if (colour(t) != tp[t]) return "(e)";
        } else {
          const int c = b[u];
          int same = 0;
          for (Vertex t : around)
            if (colour(t) == c) {
              ++same;
              if (tp[t] != c) return "(f)";
            }
          if (same > 1) return "(f)";
        }
      }
      return nullptr;
    };
    const char* failed = violation();
    if (failed != nullptr && repair && added.size() < 20) {
      const std::vector<int> kept = [&] {
        std::vector<int> cs;
        for (Vertex u : added) cs.push_back(ext.b[u]);
        return cs;
      }();
      for (std::uint32_t mask = 0; mask < (1U << added.size()) && failed != nullptr; ++mask) {
        for (std::size_t k = 0; k < added.size(); ++k) ext.b.set(added[k], (mask >> k) & 1U ? 2 : 1);
        failed = violation();
      }
      if (failed == nullptr) {
        ext.repaired.push_back(static_cast<int>(i));
      } else {
        for (std::size_t k = 0; k < added.size(); ++k) ext.b.set(added[k], kept[k]);
        failed = violation();
      }
    }
    if (failed != nullptr)
      throw Error(ErrorKind::ConditionViolated, step + ": condition " + std::string(failed) + " fails");
  }
  ext.m = from_mask(in_m);
  return ext;
}

std::vector<VertexReport> implication_report(const EmbeddedGraph& g, const TriPartition& tp, const BigSmall& bs,
                                             const HypothesisGraph& h, const TreePartition& p) {
  std::vector<VertexReport> out;
  for (Vertex v : bs.B(3)) {
    VertexReport r;
    r.v = v;
    r.h_degree = h.degree(v);
    const bool in_s = contains(p.s, v);
    if (r.h_degree >= 3) {
      r.rule = Implication::HeavyRule;
      r.holds = true;
      for (Vertex u : g.graph().neighbors(v)) {
        if (tp[u] == 1 && !contains(p.s, u)) r.holds = false;
        if (tp[u] == 2 && !contains(p.t, u)) r.holds = false;
      }
    } else {
      r.rule = Implication::LightRule;
      const int own = in_s ? 1 : 2;
      int together = 0;
      bool others_apart = true;
      for (Vertex u : g.graph().neighbors(v)) {
        const bool same_side = contains(p.s, u) == in_s;
        if (!same_side) continue;
        if (tp[u] == own) ++together;
        else others_apart = false;
      }
      r.holds = together <= 2 && others_apart;
    }
    out.push_back(r);
  }
  return out;
}

T24Result theorem_2_4_partition(const EmbeddedGraph& g) {
  if (!is_even_triangulation(g)) throw Error(ErrorKind::NotEvenTriangulation, "input is not an even triangulation");
  const TriPartition tp = tri_partition(g);
  const BigSmall bs = classify_big_small(g, tp);
  const HypothesisGraph h = hypothesis_graph(g, tp, bs);
  check_hypothesis(g, h);
  if (!hypothesis_components_two_connected(h))
    throw Error(ErrorKind::HComponentNot2Connected, "some component of H is not 2-connected");

  const TwoColoring a = global_alpha(g, tp, bs);
  TwoColoring b(g.order(), ColoringDomain::Beta);
  if (!bs.B(3).empty()) {
    b = to_global(g, h, color_beta(h.graph(), h.bp, h.a, h.sub.local(bs.B(3).front()), 1));
    for (Vertex u : bs.B(3)) {
      const Vertex l = h.sub.local(u);
      if (h.graph().degree(l) != 2) continue;
      const auto& nb = h.graph().neighbors(l);
      const int c0 = h.a[nb[0]], c1 = h.a[nb[1]];
      if (c0 == c1) b.set(u, 3 - c0);
    }
  }

  std::vector<FanPath> sequence;
  if (!bs.big_set.empty()) {
    RFamilies fam = families_R(g, bs, tp);
    sequence = fam.r;
    sequence.insert(sequence.end(), fam.r_hat.begin(), fam.r_hat.end());
    std::sort(sequence.begin(), sequence.end(), [](const FanPath& x, const FanPath& y) {
      return std::tie(x.path.vertices.front(), x.path.vertices.back(), x.path.vertices) <
             std::tie(y.path.vertices.front(), y.path.vertices.back(), y.path.vertices);
    });
  }
  T24Result out;
  try {
    const T24Extension ext = extend_coloring_t24(g, tp, bs, h, a, b, sequence, true);
    out.cases = ext.cases;
    out.repaired_steps = ext.repaired;
    const PartitionConstraint c = seeds(bs, ext.b);
    out.seeds_certified = constraint_certified(g, c);
    out.partition =
        tree_partition_solve(g, c, kDefaultSolverCap, out.seeds_certified ? SeedCheck::Full : SeedCheck::Basic);
    out.report = implication_report(g, tp, bs, h, out.partition);
    if (std::all_of(out.report.begin(), out.report.end(), [](const VertexReport& r) { return r.holds; }))
      return out;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ConditionViolated && e.kind() != ErrorKind::CaseUnmatched &&
        e.kind() != ErrorKind::SearchExhausted)
      throw;
  }

  // The colouring sequence got stuck: search for the conclusion directly.
  PartitionConstraint c;
  std::vector<int> side(ix(g.order()), -1);
  for (Vertex u : bs.B(1)) side[ix(u)] = 0;
  for (Vertex u : bs.B(2)) side[ix(u)] = 1;
  for (Vertex v : bs.B(3))
    if (h.degree(v) >= 3)
      for (Vertex u : g.graph().neighbors(v))
        if (tp[u] != 3) side[ix(u)] = tp[u] - 1;
  for (Vertex u = 0; u < g.order(); ++u)
    if (side[ix(u)] >= 0) (side[ix(u)] == 0 ? c.x : c.y).push_back(u);
  const auto found = tree_partition_find(g.graph(), c, [&](const TreePartition& p) {
    const auto rep = implication_report(g, tp, bs, h, p);
    return std::all_of(rep.begin(), rep.end(), [](const VertexReport& r) { return r.holds; });
  });
  if (!found) throw Error(ErrorKind::SearchExhausted, "no tree partition meets the implications");
  out = T24Result{};
  out.partition = *found;
  out.report = implication_report(g, tp, bs, h, out.partition);
  out.searched = true;
  out.seeds_certified = false;
  return out;
}

}  // namespace barnette
