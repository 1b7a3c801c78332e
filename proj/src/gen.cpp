#include "barnette/gen.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>

#include "barnette/error.hpp"
#include "barnette/structure.hpp"
#include "barnette/treesplit.hpp"

namespace barnette {

namespace {

std::size_t ix(Vertex v) { return static_cast<std::size_t>(v); }

void replace_with(std::vector<Vertex>& rot, Vertex old, std::initializer_list<Vertex> with) {
  auto it = std::find(rot.begin(), rot.end(), old);
  it = rot.erase(it);
  rot.insert(it, with.begin(), with.end());
}

void insert_after(std::vector<Vertex>& rot, Vertex anchor, std::initializer_list<Vertex> with) {
  auto it = std::find(rot.begin(), rot.end(), anchor);
  rot.insert(it + 1, with.begin(), with.end());
}

}  // namespace

EmbeddedGraph gen_bipyramid(int l) {
  if (l < 2) throw Error(ErrorKind::SizeTooSmall, "bipyramid needs l >= 2");
  const int k = 2 * l;
  const Vertex top = k, bottom = k + 1;
  std::vector<std::vector<Vertex>> rot(ix(k + 2));
  for (Vertex i = 0; i < k; ++i) rot[ix(i)] = {(i + 1) % k, top, (i + k - 1) % k, bottom};
  for (Vertex i = 0; i < k; ++i) rot[ix(top)].push_back(i);
  for (Vertex i = k - 1; i >= 0; --i) rot[ix(bottom)].push_back(i);
  return EmbeddedGraph::build(std::move(rot));
}

EmbeddedGraph expand_split(const EmbeddedGraph& g, Vertex x, int i, int j) {
  const std::vector<Vertex>& r = g.rotation(x);
  const int k = static_cast<int>(r.size());
  if (i < 0 || j >= k || i >= j || (j - i) % 2 != 0 || j - i < 2 || k - (j - i) < 2)
    throw Error(ErrorKind::InvalidInput, "bad split positions");
  const Vertex a = x, c = g.order(), v = g.order() + 1;
  const Vertex b = r[ix(i)], d = r[ix(j)];
  auto rot = g.rotations();
  rot.resize(ix(g.order() + 2));
  std::vector<Vertex> ra, rc;
  for (int t = i; t <= j; ++t) ra.push_back(r[ix(t)]);
  for (int t = j; t != i + k + 1; ++t) rc.push_back(r[ix(t % k)]);
  ra.push_back(v);
  rc.push_back(v);
  for (int t = j + 1; t < i + k; ++t) replace_with(rot[ix(r[ix(t % k)])], x, {c});
  replace_with(rot[ix(b)], x, {a, v, c});
  replace_with(rot[ix(d)], x, {c, v, a});
  rot[ix(a)] = std::move(ra);
  rot[ix(c)] = std::move(rc);
  rot[ix(v)] = {a, d, c, b};
  return EmbeddedGraph::build(std::move(rot));
}

EmbeddedGraph expand_face(const EmbeddedGraph& g, int face) {
  const FaceSet fs = trace_faces(g);
  if (face < 0 || ix(face) >= fs.count() || fs.faces[ix(face)].size() != 3)
    throw Error(ErrorKind::InvalidInput, "not a triangular face");
  const auto& walk = fs.faces[ix(face)];
  const Vertex x = walk[0].from, y = walk[1].from, z = walk[2].from;
  const Vertex p = g.order(), q = p + 1, r = p + 2;
  auto rot = g.rotations();
  insert_after(rot[ix(x)], z, {r, p});
  insert_after(rot[ix(y)], x, {p, q});
  insert_after(rot[ix(z)], y, {q, r});
  rot.push_back({x, r, q, y});
  rot.push_back({y, p, r, z});
  rot.push_back({z, q, p, x});
  return EmbeddedGraph::build(std::move(rot));
}

namespace {

std::vector<EmbeddedGraph> children(const EmbeddedGraph& g) {
  std::vector<EmbeddedGraph> out;
  for (Vertex x = 0; x < g.order(); ++x) {
    const int k = g.degree(x);
    for (int i = 0; i < k; ++i)
      for (int j = i + 2; j < k; j += 2)
        if (k - (j - i) >= 2) out.push_back(expand_split(g, x, i, j));
  }
  for (int f = 0; f < g.face_count(); ++f) out.push_back(expand_face(g, f));
  return out;
}

}  // namespace

std::vector<EmbeddedGraph> gen_even_triangulations(int n) {
  if (n < kMinEvenTriangulationOrder || n > kMaxEvenTriangulationOrder)
    throw Error(ErrorKind::SizeOutOfRange, "order must be in 4..16");
  std::map<int, std::map<std::vector<int>, EmbeddedGraph>> level;
  const EmbeddedGraph octahedron = gen_bipyramid(2);
  level[6].emplace(canonical_code(octahedron), canonical_form(octahedron));
  for (int m = 6; m < n; ++m)
    for (const auto& [code, g] : level[m])
      for (EmbeddedGraph& c : children(g)) {
        if (c.order() > n) continue;
        auto& bucket = level[c.order()];
        auto cc = canonical_code(c);
        if (!bucket.contains(cc)) bucket.emplace(std::move(cc), canonical_form(c));
      }
  std::vector<EmbeddedGraph> out;
  for (auto& [code, g] : level[n]) out.push_back(g);
  return out;
}

namespace {

struct Builder {
  std::vector<Edge> edges;
  int n = 0;
  std::mt19937_64 rng;

  explicit Builder(std::uint64_t seed) : rng(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  Graph graph() const { return Graph::from_edges(n, edges); }

  Vertex fresh() { return n++; }

  // Path of `len` edges from `from`; returns its last vertex (to is used
  // when given).
  Vertex path(Vertex from, int len, Vertex to = -1) {
    Vertex cur = from;
    for (int s = 0; s < len; ++s) {
      const Vertex next = (s == len - 1 && to >= 0) ? to : fresh();
      edges.push_back({cur, next});
      cur = next;
    }
    return cur;
  }

  // Cycle of length len through `at`; returns its vertices starting at `at`.
  std::vector<Vertex> cycle(Vertex at, int len) {
    std::vector<Vertex> vs{at};
    for (int s = 1; s < len; ++s) vs.push_back(fresh());
    for (int s = 0; s < len; ++s) edges.push_back({vs[ix(s)], vs[ix((s + 1) % len)]});
    return vs;
  }

  // Two vertices at even positive distance; false when none.
  bool same_type_pair(Vertex& x, Vertex& y) {
    const Graph g = graph();
    for (int attempt = 0; attempt < 20; ++attempt) {
      x = uniform(0, n - 1);
      const auto dist = bfs_distances(g, x);
      std::vector<Vertex> pool;
      for (Vertex u = 0; u < n; ++u)
        if (dist[ix(u)] > 0 && dist[ix(u)] % 2 == 0) pool.push_back(u);
      if (pool.empty()) continue;
      y = pool[ix(uniform(0, static_cast<int>(pool.size()) - 1))];
      return true;
    }
    return false;
  }

  int distance(Vertex x, Vertex y) const { return bfs_distances(graph(), x)[ix(y)]; }

  // A new cycle joined to x1, y1 by two disjoint odd paths.
  void cut_pair_glue(Vertex x1, Vertex y1, int room) {
    const int d1 = distance(x1, y1);
    const int len = room >= 12 && uniform(0, 2) == 0 ? 8 : 4;
    const Vertex base = fresh();
    const std::vector<Vertex> c = cycle(base, len);
    const int d2 = 2 * uniform(1, len / 2 - 1);
    const Vertex x2 = c[0], y2 = c[ix(d2)];
    const int p = uniform(0, 1) == 0 ? 1 : 3;
    // Both paths odd, so their ends differ in type; every crossing cycle has
    // length d1 + d2 + p + q = 0 mod 4.
    const int q = (((-(d1 + d2 + p)) % 4) + 4) % 4;
    path(x1, p, x2);
    path(y1, q, y2);
  }

  void ear(Vertex x, Vertex y) {
    const int d = distance(x, y);
    const int l = d % 4 == 0 ? 4 : 2;
    path(x, l, y);
  }
};

bool still_multi4(const Builder& b) {
  try {
    return is_multi4(b.graph());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::CycleCapExceeded) return false;
    throw;
  }
}

Graph grow(int size, std::uint64_t seed, bool two_connected) {
  size = std::clamp(size, 4, 40);
  Builder b(seed);
  b.cycle(b.fresh(), size >= 8 && b.uniform(0, 1) == 0 ? 8 : 4);
  int stalls = 0;
  while (b.n < size && stalls < 50) {
    const auto saved_edges = b.edges;
    const int saved_n = b.n;
    const int room = size - b.n;
    const int op = two_connected ? b.uniform(0, 3) : b.uniform(0, 5);
    Vertex x = -1, y = -1;
    if (op <= 2) {
      if (room < 4 || !b.same_type_pair(x, y)) {
        ++stalls;
        continue;
      }
      b.cut_pair_glue(x, y, room);
    } else if (op == 3) {
      if (!b.same_type_pair(x, y)) {
        ++stalls;
        continue;
      }
      b.ear(x, y);
    } else if (op == 4) {
      const Vertex at = b.uniform(0, b.n - 1);
      b.cycle(at, room >= 7 && b.uniform(0, 2) == 0 ? 8 : 4);
    } else {
      b.path(b.uniform(0, b.n - 1), b.uniform(1, std::min(3, std::max(1, room))));
    }
    if (b.n > size + 8 || !still_multi4(b)) {
      b.edges = saved_edges;
      b.n = saved_n;
      ++stalls;
    }
  }
  Graph g = b.graph();
  if (!is_multi4(g)) throw Error(ErrorKind::InternalError, "generated graph left the family");
  return g;
}

}  // namespace

Graph gen_multi4(int size, std::uint64_t seed) { return grow(size, seed, false); }

Graph gen_multi4_two_connected(int size, std::uint64_t seed) {
  Graph g = grow(size, seed, true);
  if (!is_two_connected(g)) throw Error(ErrorKind::InternalError, "generated graph is not 2-connected");
  return g;
}

EmbeddedGraph with_class_order(const EmbeddedGraph& g, Vertex first, Vertex second) {
  if (!g.graph().adjacent(first, second)) throw Error(ErrorKind::InvalidInput, "class anchors must be adjacent");
  std::vector<Vertex> perm(ix(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) perm[ix(v)] = v;
  std::swap(perm[0], perm[ix(first)]);
  auto rot = g.relabeled(perm).rotations();
  auto& r0 = rot[0];
  std::rotate(r0.begin(), std::find(r0.begin(), r0.end(), perm[ix(second)]), r0.end());
  return EmbeddedGraph::build(std::move(rot));
}

bool meets_thm23_hypothesis(const EmbeddedGraph& g) {
  if (!is_even_triangulation(g)) return false;
  const TriPartition tp = tri_partition(g);
  const BigSmall bs = classify_big_small(g, tp);
  return is_multi4(hypothesis_graph(g, tp, bs).graph());
}

bool meets_thm24_hypothesis(const EmbeddedGraph& g) {
  if (!is_even_triangulation(g)) return false;
  const TriPartition tp = tri_partition(g);
  const BigSmall bs = classify_big_small(g, tp);
  const HypothesisGraph h = hypothesis_graph(g, tp, bs);
  return is_multi4(h.graph()) && hypothesis_components_two_connected(h);
}

namespace {

// The three relabellings that give each original class the role of class 3.
std::vector<EmbeddedGraph> class_variants(const EmbeddedGraph& g) {
  const TriPartition tp = tri_partition(g);
  std::vector<EmbeddedGraph> out;
  for (int third = 3; third >= 1; --third) {
    const int c1 = third % 3 + 1, c2 = c1 % 3 + 1;
    const Vertex first = tp.members(c1).front();
    Vertex second = -1;
    for (Vertex u : g.rotation(first))
      if (tp[u] == c2) {
        second = u;
        break;
      }
    out.push_back(third == 3 ? g : with_class_order(g, first, second));
  }
  return out;
}

}  // namespace

std::vector<EmbeddedGraph> gen_thm24_instances(int n_max, std::uint64_t seed, int random_extra) {
  std::vector<EmbeddedGraph> base, out;
  for (int n = 6; n <= std::min(n_max, kMaxEvenTriangulationOrder); ++n)
    for (const EmbeddedGraph& g : gen_even_triangulations(n)) base.push_back(g);
  for (const EmbeddedGraph& g : base)
    for (EmbeddedGraph& v : class_variants(g))
      if (meets_thm24_hypothesis(v)) out.push_back(std::move(v));
  if (random_extra > 0 && !base.empty()) {
    std::mt19937_64 rng(seed);
    auto pick = [&](int hi) { return std::uniform_int_distribution<int>(0, hi - 1)(rng); };
    int found = 0;
    for (int attempt = 0; attempt < random_extra * 50 && found < random_extra; ++attempt) {
      EmbeddedGraph g = base[ix(pick(static_cast<int>(base.size())))];
      const int target = n_max + 1 + pick(6);
      while (g.order() < target) {
        const auto next = children(g);
        g = next[ix(pick(static_cast<int>(next.size())))];
      }
      for (EmbeddedGraph& v : class_variants(g))
        if (meets_thm24_hypothesis(v)) {
          out.push_back(std::move(v));
          ++found;
        }
    }
  }
  if (out.empty()) throw Error(ErrorKind::NoneFound, "no instance meets the hypothesis");
  return out;
}

}  // namespace barnette
