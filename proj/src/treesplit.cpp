#include "barnette/treesplit.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "barnette/error.hpp"

namespace barnette {

namespace {

std::size_t ix(Vertex v) { return static_cast<std::size_t>(v); }

bool contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

}  // namespace

VertexSet FanPath::span() const {
  VertexSet out = path.vertices;
  out.push_back(v0[0]);
  out.push_back(v0[1]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_bipyramid(const EmbeddedGraph& g) {
  const int n = g.order();
  if (n < 6 || n % 2 != 0) return false;
  for (Vertex p = 0; p < n; ++p) {
    if (g.degree(p) != n - 2) continue;
    Vertex q = -1;
    for (Vertex u = 0; u < n; ++u)
      if (u != p && !g.graph().adjacent(p, u)) q = u;
    if (q < 0 || g.degree(q) != n - 2) return false;
    for (Vertex u = 0; u < n; ++u)
      if (u != p && u != q && g.degree(u) != 4) return false;
    return true;
  }
  return false;
}

std::vector<FanPath> fan_paths_unchecked(const EmbeddedGraph& g, const BigSmall& bs) {
  const Graph& gr = g.graph();
  std::set<std::vector<Vertex>> seen;
  std::vector<FanPath> out;
  auto opposite = [&](Vertex at, Vertex from) {
    const auto& rot = g.rotation(at);
    return rot[(ix(g.position(at, from)) + 2) % rot.size()];
  };
  for (Vertex s : bs.small_set) {
    const auto& rot = g.rotation(s);
    for (std::size_t dir = 0; dir < 2; ++dir) {
      std::vector<Vertex> fwd{s}, bwd;
      bool ok = true;
      // Walk straight until a big vertex is reached.
      auto walk = [&](Vertex start, std::vector<Vertex>& seq) {
        Vertex prev = s, cur = start;
        while (ok) {
          if (cur == s || std::find(fwd.begin(), fwd.end(), cur) != fwd.end() ||
              std::find(bwd.begin(), bwd.end(), cur) != bwd.end()) {
            ok = false;
            return;
          }
          seq.push_back(cur);
          if (bs.is_big(cur)) return;
          const Vertex nxt = opposite(cur, prev);
          prev = cur;
          cur = nxt;
        }
      };
      walk(rot[dir], fwd);
      if (!ok) continue;
      walk(rot[dir + 2], bwd);
      if (!ok) continue;
      std::vector<Vertex> seq(bwd.rbegin(), bwd.rend());
      seq.insert(seq.end(), fwd.begin(), fwd.end());
      if (seq.front() > seq.back()) std::reverse(seq.begin(), seq.end());
      if (!seen.insert(seq).second) continue;

      const Vertex a = seq.front(), b = seq.back();
      bool induced = true, only_end_chord = true;
      for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 2; j < seq.size(); ++j)
          if (gr.adjacent(seq[i], seq[j])) {
            induced = false;
            if (!(i == 0 && j + 1 == seq.size())) only_end_chord = false;
          }
      if (!induced && !(only_end_chord && gr.adjacent(a, b))) continue;

      std::vector<Vertex> common = gr.neighbors(seq[0]);
      for (std::size_t i = 1; i < seq.size(); ++i) {
        std::vector<Vertex> next;
        std::set_intersection(common.begin(), common.end(), gr.neighbors(seq[i]).begin(),
                              gr.neighbors(seq[i]).end(), std::back_inserter(next));
        common = std::move(next);
      }
      if (common.size() != 2) continue;
      FanPath fp;
      fp.path = PathRec{seq};
      fp.v0 = {common[0], common[1]};
      fp.v1 = {a, b};
      fp.kind = induced ? FanKind::InducedPath : FanKind::InducedCycleMinusEdge;
      out.push_back(std::move(fp));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const FanPath& x, const FanPath& y) { return x.path.vertices < y.path.vertices; });
  return out;
}

std::vector<FanPath> fan_paths(const EmbeddedGraph& g, const BigSmall& bs) {
  std::vector<FanPath> paths = fan_paths_unchecked(g, bs);
  std::vector<bool> covered(ix(g.order()), false);
  for (const FanPath& p : paths)
    for (Vertex u : p.interior()) covered[ix(u)] = true;
  for (Vertex s : bs.small_set) {
    if (covered[ix(s)]) continue;
    if (is_bipyramid(g))
      throw Error(ErrorKind::BipyramidSpecialCase, "small vertex " + std::to_string(s) + " lies on no fan path");
    throw Error(ErrorKind::InternalError, "small vertex " + std::to_string(s) + " lies on no fan path");
  }
  return paths;
}

RFamilies families_R(const EmbeddedGraph& g, const BigSmall& bs, const TriPartition& tp) {
  RFamilies out;
  auto in_b3 = [&](Vertex u) { return bs.is_big(u) && tp[u] == 3; };
  auto in_s3 = [&](Vertex u) { return !bs.is_big(u) && tp[u] == 3; };
  for (FanPath& p : fan_paths(g, bs)) {
    const bool v0_big = bs.is_big(p.v0[0]) && bs.is_big(p.v0[1]);
    const bool meets_b3 = in_b3(p.v0[0]) || in_b3(p.v0[1]) || in_b3(p.v1[0]) || in_b3(p.v1[1]);
    if (v0_big && meets_b3)
      out.r.push_back(std::move(p));
    else if ((in_b3(p.v0[0]) && in_s3(p.v0[1])) || (in_b3(p.v0[1]) && in_s3(p.v0[0])))
      out.r_hat.push_back(std::move(p));
  }
  return out;
}

int HypothesisGraph::degree(Vertex global) const {
  const Vertex l = sub.local(global);
  return l < 0 ? 0 : sub.graph.degree(l);
}

HypothesisGraph hypothesis_graph(const EmbeddedGraph& g, const TriPartition& tp, const BigSmall& bs) {
  HypothesisGraph h;
  h.sub.to_parent = bs.big_set;
  h.sub.from_parent.assign(ix(g.order()), -1);
  for (std::size_t i = 0; i < bs.big_set.size(); ++i) h.sub.from_parent[ix(bs.big_set[i])] = static_cast<Vertex>(i);
  const int k = static_cast<int>(bs.big_set.size());
  h.sub.graph = Graph(k);
  h.bp.type_of.assign(ix(k), VertexType::Alpha);
  h.a = TwoColoring(k, ColoringDomain::Alpha);
  for (Vertex l = 0; l < k; ++l) {
    const Vertex u = h.sub.to_parent[ix(l)];
    if (tp[u] == 3)
      h.bp.type_of[ix(l)] = VertexType::Beta;
    else
      h.a.set(l, tp[u]);
  }
  for (const Edge& e : g.graph().edges()) {
    if (!bs.is_big(e.u) || !bs.is_big(e.v)) continue;
    if (tp[e.u] != 3 && tp[e.v] != 3) continue;
    h.sub.graph.add_edge(h.sub.local(e.u), h.sub.local(e.v));
  }
  return h;
}

bool hypothesis_components_two_connected(const HypothesisGraph& h) {
  const Components comps = connected_components(h.graph());
  for (int c = 0; c < comps.count; ++c)
    if (!is_two_connected(induced_subgraph(h.graph(), comps.members(c)).graph)) return false;
  return true;
}

PartitionCheck verify_tree_partition(const Graph& g, const TreePartition& p, const PartitionConstraint* c) {
  auto fail = [](std::string why) { return PartitionCheck{false, std::move(why)}; };
  std::vector<int> side(ix(g.order()), -1);
  for (int k = 0; k < 2; ++k)
    for (Vertex v : k == 0 ? p.s : p.t) {
      if (v < 0 || v >= g.order()) return fail("vertex out of range");
      if (side[ix(v)] >= 0) return fail("vertex " + std::to_string(v) + " on both sides");
      side[ix(v)] = k;
    }
  for (Vertex v = 0; v < g.order(); ++v)
    if (side[ix(v)] < 0) return fail("vertex " + std::to_string(v) + " on neither side");
  for (int k = 0; k < 2; ++k) {
    std::vector<bool> mask(ix(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) mask[ix(v)] = side[ix(v)] == k;
    const char* name = k == 0 ? "S" : "T";
    if (!is_tree(g, mask)) return fail(std::string(name) + " does not induce a tree");
  }
  if (c) {
    for (Vertex v : c->x)
      if (!contains(p.s, v)) return fail("seed " + std::to_string(v) + " of X not in S");
    for (Vertex v : c->y)
      if (!contains(p.t, v)) return fail("seed " + std::to_string(v) + " of Y not in T");
  }
  return {};
}

void validate_seeds(const Graph& g, const PartitionConstraint& c) {
  auto bad = [](const std::string& why) { throw Error(ErrorKind::ConstraintInvalid, why); };
  const int n = g.order();
  for (const VertexSet* s : {&c.x, &c.y})
    for (Vertex v : *s)
      if (v < 0 || v >= n) bad("seed vertex out of range");
  VertexSet both;
  std::set_intersection(c.x.begin(), c.x.end(), c.y.begin(), c.y.end(), std::back_inserter(both));
  if (!both.empty()) bad("X and Y share " + set_text(both));
  if (auto cyc = find_cycle(g, to_mask(n, c.x))) bad("G[X] contains a cycle");
  if (auto cyc = find_cycle(g, to_mask(n, c.y))) bad("G[Y] contains a cycle");
}

bool constraint_certified(const EmbeddedGraph& g, const PartitionConstraint& c) {
  try {
    validate_constraint(g, c);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ConstraintInvalid) return false;
    throw;
  }
}

void validate_constraint(const EmbeddedGraph& g, const PartitionConstraint& c) {
  auto bad = [](const std::string& why) { throw Error(ErrorKind::ConstraintInvalid, why); };
  validate_seeds(g.graph(), c);

  const TriPartition tp = tri_partition(g);
  const BigSmall bs = classify_big_small(g, tp);
  for (Vertex v : bs.B(1))
    if (!contains(c.x, v)) bad("B_1 vertex " + std::to_string(v) + " missing from X");
  for (Vertex v : bs.B(2))
    if (!contains(c.y, v)) bad("B_2 vertex " + std::to_string(v) + " missing from Y");
  for (Vertex v : bs.B(3))
    if (!contains(c.x, v) && !contains(c.y, v)) bad("B_3 vertex " + std::to_string(v) + " missing from X and Y");
  for (const FanPath& p : fan_paths_unchecked(g, bs)) {
    int inside = 0;
    const VertexSet inner = p.interior();
    for (Vertex u : inner) inside += contains(c.x, u) || contains(c.y, u);
    if (inside != 0 && inside != static_cast<int>(inner.size()))
      bad("fan path interior " + set_text(inner) + " only partly seeded");
  }
}

namespace {

// Backtracking over vertex sides with incremental acyclicity and a
// reachability prune for connectivity.
class TreeSplitSearch {
 public:
  TreeSplitSearch(const Graph& g, std::size_t cap, const PartitionFilter* accept = nullptr)
      : g_(g), side_(ix(g.order()), -1), cap_(cap), accept_(accept) {}

  bool run(const PartitionConstraint& c) {
    for (Vertex v : c.x) side_[ix(v)] = 0;
    for (Vertex v : c.y) side_[ix(v)] = 1;
    // Breadth-first order from the seeds keeps decisions local.
    std::vector<bool> queued(ix(g_.order()), false);
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < g_.order(); ++v)
      if (side_[ix(v)] >= 0) {
        queue.push_back(v);
        queued[ix(v)] = true;
      }
    if (queue.empty() && g_.order() > 0) {
      queue.push_back(0);
      queued[0] = true;
    }
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (Vertex w : g_.neighbors(queue[i]))
        if (!queued[ix(w)]) {
          queued[ix(w)] = true;
          queue.push_back(w);
        }
    for (Vertex v : queue)
      if (side_[ix(v)] < 0) order_.push_back(v);
    return search(0);
  }

  TreePartition result() const {
    TreePartition p;
    for (Vertex v = 0; v < g_.order(); ++v) (side_[ix(v)] == 0 ? p.s : p.t).push_back(v);
    return p;
  }

 private:
  // Would putting v on side k close a cycle?
  bool closes_cycle(Vertex v, int k) const {
    std::vector<Vertex> nbrs;
    for (Vertex w : g_.neighbors(v))
      if (side_[ix(w)] == k) nbrs.push_back(w);
    if (nbrs.size() < 2) return false;
    std::vector<int> label(ix(g_.order()), -1);
    std::vector<Vertex> stack;
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (label[ix(nbrs[i])] >= 0) return true;
      label[ix(nbrs[i])] = static_cast<int>(i);
      stack.push_back(nbrs[i]);
      while (!stack.empty()) {
        const Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g_.neighbors(u))
          if (w != v && side_[ix(w)] == k && label[ix(w)] < 0) {
            label[ix(w)] = static_cast<int>(i);
            stack.push_back(w);
          }
      }
    }
    return false;
  }

  // All vertices already on side k can still be joined through side k or
  // unassigned vertices.
  bool can_connect(int k) const {
    Vertex start = -1;
    int total = 0;
    for (Vertex v = 0; v < g_.order(); ++v)
      if (side_[ix(v)] == k) {
        ++total;
        if (start < 0) start = v;
      }
    if (total <= 1) return true;
    std::vector<bool> seen(ix(g_.order()), false);
    std::vector<Vertex> stack{start};
    seen[ix(start)] = true;
    int reached = 0;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      if (side_[ix(u)] == k) ++reached;
      for (Vertex w : g_.neighbors(u))
        if (!seen[ix(w)] && side_[ix(w)] != 1 - k) {
          seen[ix(w)] = true;
          stack.push_back(w);
        }
    }
    return reached == total;
  }

  bool search(std::size_t depth) {
    if (++nodes_ > cap_) throw Error(ErrorKind::CapExceeded, "tree partition search exceeded its node cap");
    if (!can_connect(0) || !can_connect(1)) return false;
    if (depth == order_.size()) {
      if (!verify_tree_partition(g_, result()).ok) return false;
      return accept_ == nullptr || (*accept_)(result());
    }
    const Vertex v = order_[depth];
    for (int k = 0; k < 2; ++k) {
      if (closes_cycle(v, k)) continue;
      side_[ix(v)] = k;
      if (search(depth + 1)) return true;
      side_[ix(v)] = -1;
    }
    return false;
  }

  const Graph& g_;
  std::vector<int> side_;
  std::vector<Vertex> order_;
  std::size_t cap_;
  const PartitionFilter* accept_;
  std::size_t nodes_ = 0;
};

}  // namespace

TreePartition tree_partition_solve(const EmbeddedGraph& g, const PartitionConstraint& c, std::size_t node_cap,
                                   SeedCheck check) {
  if (check == SeedCheck::Full)
    validate_constraint(g, c);
  else
    validate_seeds(g.graph(), c);
  TreeSplitSearch search(g.graph(), node_cap);
  if (!search.run(c))
    throw Error(ErrorKind::SearchExhausted,
                "no tree partition extends X=" + set_text(c.x) + " Y=" + set_text(c.y));
  TreePartition p = search.result();
  const PartitionCheck verdict = verify_tree_partition(g.graph(), p, &c);
  if (!verdict.ok) throw Error(ErrorKind::InternalError, "solver output rejected: " + verdict.reason);
  return p;
}

std::optional<TreePartition> tree_partition_find(const Graph& g, const PartitionConstraint& c,
                                                 const PartitionFilter& accept, std::size_t node_cap) {
  validate_seeds(g, c);
  TreeSplitSearch search(g, node_cap, &accept);
  if (!search.run(c)) return std::nullopt;
  return search.result();
}

}  // namespace barnette
