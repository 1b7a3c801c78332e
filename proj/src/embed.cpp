#include "barnette/embed.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "barnette/error.hpp"

namespace barnette {

namespace {

std::string edge_str(Vertex u, Vertex v) { return std::to_string(u) + "-" + std::to_string(v); }

int count_faces(const std::vector<std::vector<Vertex>>& rot, const Graph& g) {
  if (g.size() == 0) return 1;
  std::vector<std::vector<bool>> used(rot.size());
  for (std::size_t v = 0; v < rot.size(); ++v) used[v].assign(rot[v].size(), false);
  auto pos = [&](Vertex v, Vertex u) {
    const auto& r = rot[static_cast<std::size_t>(v)];
    return static_cast<std::size_t>(std::find(r.begin(), r.end(), u) - r.begin());
  };
  int faces = 0;
  for (std::size_t v = 0; v < rot.size(); ++v)
    for (std::size_t i = 0; i < rot[v].size(); ++i) {
      if (used[v][i]) continue;
      ++faces;
      Vertex a = static_cast<Vertex>(v);
      std::size_t ai = i;
      while (!used[static_cast<std::size_t>(a)][ai]) {
        used[static_cast<std::size_t>(a)][ai] = true;
        Vertex b = rot[static_cast<std::size_t>(a)][ai];
        const auto& rb = rot[static_cast<std::size_t>(b)];
        std::size_t back = pos(b, a);
        ai = (back + 1) % rb.size();
        a = b;
      }
    }
  return faces;
}

}  // namespace

EmbeddedGraph EmbeddedGraph::build(std::vector<std::vector<Vertex>> rotation) {
  const int n = static_cast<int>(rotation.size());
  if (n == 0) throw Error(ErrorKind::InvalidInput, "empty rotation system");
  for (Vertex v = 0; v < n; ++v) {
    auto sorted = rotation[static_cast<std::size_t>(v)];
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      Vertex u = sorted[i];
      if (u < 0 || u >= n) throw Error(ErrorKind::InvalidInput, "neighbour out of range at " + std::to_string(v));
      if (u == v) throw Error(ErrorKind::MultiEdgeOrLoop, "loop at " + std::to_string(v));
      if (i > 0 && sorted[i - 1] == u) throw Error(ErrorKind::MultiEdgeOrLoop, "repeated neighbour " + edge_str(v, u));
    }
  }
  EmbeddedGraph g;
  g.graph_ = Graph(n);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : rotation[static_cast<std::size_t>(v)]) {
      const auto& ru = rotation[static_cast<std::size_t>(u)];
      if (std::find(ru.begin(), ru.end(), v) == ru.end())
        throw Error(ErrorKind::AsymmetricAdjacency, std::to_string(v) + " lists " + std::to_string(u) + " but not vice versa");
      if (v < u) g.graph_.add_edge(v, u);
    }
  if (!is_connected(g.graph_)) throw Error(ErrorKind::Disconnected, "embedding must be connected");
  g.face_count_ = count_faces(rotation, g.graph_);
  const long euler = static_cast<long>(n) - static_cast<long>(g.graph_.size()) + g.face_count_;
  if (euler != 2)
    throw Error(ErrorKind::NonPlanarEmbedding, "n - m + f = " + std::to_string(euler) + ", expected 2");
  g.rotation_ = std::move(rotation);

  std::vector<Edge> edges = g.graph_.edges();
  g.edge_id_.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) g.edge_id_[static_cast<std::size_t>(v)].assign(g.graph_.neighbors(v).size(), -1);
  for (std::size_t id = 0; id < edges.size(); ++id) {
    auto [u, v] = edges[id];
    const auto& nu = g.graph_.neighbors(u);
    const auto& nv = g.graph_.neighbors(v);
    g.edge_id_[static_cast<std::size_t>(u)][static_cast<std::size_t>(std::lower_bound(nu.begin(), nu.end(), v) - nu.begin())] = static_cast<int>(id);
    g.edge_id_[static_cast<std::size_t>(v)][static_cast<std::size_t>(std::lower_bound(nv.begin(), nv.end(), u) - nv.begin())] = static_cast<int>(id);
  }
  return g;
}

int EmbeddedGraph::position(Vertex v, Vertex u) const {
  const auto& r = rotation(v);
  auto it = std::find(r.begin(), r.end(), u);
  if (it == r.end()) throw Error(ErrorKind::InvalidInput, edge_str(v, u) + " is not an edge");
  return static_cast<int>(it - r.begin());
}

Vertex EmbeddedGraph::next_cw(Vertex v, Vertex u) const {
  const auto& r = rotation(v);
  return r[(static_cast<std::size_t>(position(v, u)) + 1) % r.size()];
}

Vertex EmbeddedGraph::prev_cw(Vertex v, Vertex u) const {
  const auto& r = rotation(v);
  return r[(static_cast<std::size_t>(position(v, u)) + r.size() - 1) % r.size()];
}

int EmbeddedGraph::edge_id(Vertex u, Vertex v) const {
  const auto& nu = graph_.neighbors(u);
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it == nu.end() || *it != v) throw Error(ErrorKind::InvalidInput, edge_str(u, v) + " is not an edge");
  return edge_id_[static_cast<std::size_t>(u)][static_cast<std::size_t>(it - nu.begin())];
}

EmbeddedGraph EmbeddedGraph::reflected() const {
  auto rot = rotation_;
  for (auto& r : rot) std::reverse(r.begin(), r.end());
  return build(std::move(rot));
}

EmbeddedGraph EmbeddedGraph::relabeled(const std::vector<Vertex>& perm) const {
  std::vector<std::vector<Vertex>> rot(rotation_.size());
  for (std::size_t v = 0; v < rotation_.size(); ++v) {
    auto& r = rot[static_cast<std::size_t>(perm[v])];
    for (Vertex u : rotation_[v]) r.push_back(perm[static_cast<std::size_t>(u)]);
  }
  return build(std::move(rot));
}

int FaceSet::face_of(const EmbeddedGraph& g, Vertex u, Vertex v) const {
  return face_at[static_cast<std::size_t>(u)][static_cast<std::size_t>(g.position(u, v))];
}

std::vector<Vertex> FaceSet::boundary(int f) const {
  std::vector<Vertex> out;
  for (const auto& d : faces[static_cast<std::size_t>(f)]) out.push_back(d.from);
  return out;
}

FaceSet trace_faces(const EmbeddedGraph& g) {
  FaceSet fs;
  fs.face_at.resize(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) fs.face_at[static_cast<std::size_t>(v)].assign(g.rotation(v).size(), -1);
  for (Vertex v = 0; v < g.order(); ++v)
    for (std::size_t i = 0; i < g.rotation(v).size(); ++i) {
      if (fs.face_at[static_cast<std::size_t>(v)][i] >= 0) continue;
      const int f = static_cast<int>(fs.faces.size());
      fs.faces.emplace_back();
      Vertex a = v;
      std::size_t ai = i;
      while (fs.face_at[static_cast<std::size_t>(a)][ai] < 0) {
        fs.face_at[static_cast<std::size_t>(a)][ai] = f;
        Vertex b = g.rotation(a)[ai];
        fs.faces.back().push_back({a, b});
        ai = (static_cast<std::size_t>(g.position(b, a)) + 1) % g.rotation(b).size();
        a = b;
      }
    }
  return fs;
}

int DualGraph::edge_between(int a, int b) const {
  for (int e : rotation_edges[static_cast<std::size_t>(a)]) {
    auto [f1, f2] = edge_faces[static_cast<std::size_t>(e)];
    if ((f1 == a && f2 == b) || (f1 == b && f2 == a)) return e;
  }
  return -1;
}

DualGraph dual(const EmbeddedGraph& g) {
  DualGraph d;
  d.primal_faces = trace_faces(g);
  d.primal_edges = g.graph().edges();
  d.edge_faces.resize(d.primal_edges.size());
  for (std::size_t id = 0; id < d.primal_edges.size(); ++id) {
    auto [u, v] = d.primal_edges[id];
    d.edge_faces[id] = {d.primal_faces.face_of(g, u, v), d.primal_faces.face_of(g, v, u)};
  }
  const std::size_t nf = d.primal_faces.count();
  d.rotation_edges.resize(nf);
  std::vector<std::vector<Vertex>> rot(nf);
  bool simple = true;
  for (std::size_t f = 0; f < nf; ++f)
    for (const auto& dart : d.primal_faces.faces[f]) {
      d.rotation_edges[f].push_back(g.edge_id(dart.from, dart.to));
      const int across = d.primal_faces.face_of(g, dart.to, dart.from);
      if (across == static_cast<int>(f) ||
          std::find(rot[f].begin(), rot[f].end(), across) != rot[f].end())
        simple = false;
      rot[f].push_back(across);
    }
  if (!simple || nf < 3) return d;
  d.graph = EmbeddedGraph::build(std::move(rot));
  d.faces = trace_faces(*d.graph);
  for (const auto& walk : d.faces->faces) {
    const int e1 = d.edge_between(walk[0].from, walk[0].to);
    const int e2 = d.edge_between(walk[1].from, walk[1].to);
    const Edge a = d.primal_edges[static_cast<std::size_t>(e1)];
    const Edge b = d.primal_edges[static_cast<std::size_t>(e2)];
    d.primal_vertex_of_face.push_back((a.u == b.u || a.u == b.v) ? a.u : a.v);
  }
  return d;
}

bool is_triangulation(const EmbeddedGraph& g) {
  if (g.order() < 3) return false;
  auto fs = trace_faces(g);
  return std::all_of(fs.faces.begin(), fs.faces.end(), [](const auto& f) { return f.size() == 3; });
}

bool is_even_triangulation(const EmbeddedGraph& g) {
  if (g.order() < 4 || !is_triangulation(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) % 2 != 0) return false;
  return true;
}

VertexSet TriPartition::members(int c) const {
  VertexSet out;
  for (std::size_t v = 0; v < class_of.size(); ++v)
    if (class_of[v] == c) out.push_back(static_cast<Vertex>(v));
  return out;
}

TriPartition tri_partition(const EmbeddedGraph& g) {
  if (!is_even_triangulation(g)) throw Error(ErrorKind::NotEvenTriangulation, "tri_partition requires an even triangulation");
  TriPartition tp;
  tp.class_of.assign(static_cast<std::size_t>(g.order()), 0);
  tp.class_of[0] = 1;
  tp.class_of[static_cast<std::size_t>(g.rotation(0)[0])] = 2;
  const FaceSet fs = trace_faces(g);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& face : fs.faces) {
      int known = 0, sum = 0;
      Vertex missing = -1;
      for (const auto& dart : face) {
        const int c = tp[dart.from];
        if (c) {
          ++known;
          sum += c;
        } else {
          missing = dart.from;
        }
      }
      if (known == 2) {
        const int c = 6 - sum;
        if (c < 1 || c > 3) throw Error(ErrorKind::NotEvenTriangulation, "3-colouring propagation conflict");
        tp.class_of[static_cast<std::size_t>(missing)] = c;
        changed = true;
      }
    }
  }
  for (const auto& face : fs.faces) {
    const int a = tp[face[0].from], b = tp[face[1].from], c = tp[face[2].from];
    if (!a || !b || !c || a == b || b == c || a == c)
      throw Error(ErrorKind::NotEvenTriangulation, "3-colouring propagation conflict");
  }
  return tp;
}

BigSmall classify_big_small(const EmbeddedGraph& g, const TriPartition& tp) {
  if (!is_even_triangulation(g)) throw Error(ErrorKind::NotEvenTriangulation, "classify_big_small requires an even triangulation");
  BigSmall bs;
  bs.big.assign(static_cast<std::size_t>(g.order()), false);
  for (Vertex v = 0; v < g.order(); ++v) {
    const int d = g.degree(v);
    if (d < 4) throw Error(ErrorKind::DegreeBelowFour, "vertex " + std::to_string(v) + " has degree " + std::to_string(d));
    const auto c = static_cast<std::size_t>(tp[v] - 1);
    if (d >= 6) {
      bs.big[static_cast<std::size_t>(v)] = true;
      bs.big_set.push_back(v);
      bs.big_in[c].push_back(v);
    } else {
      bs.small_set.push_back(v);
      bs.small_in[c].push_back(v);
    }
  }
  return bs;
}

std::vector<int> dual_face_coloring(const DualGraph& d, const TriPartition& tp) {
  if (!d.graph) throw Error(ErrorKind::InvalidInput, "dual is not a simple graph");
  std::vector<int> out;
  out.reserve(d.primal_vertex_of_face.size());
  for (Vertex v : d.primal_vertex_of_face) out.push_back(tp[v]);
  return out;
}

namespace {

struct PlaneCode {
  std::vector<int> code;
  std::vector<Vertex> number;  // vertex -> 1-based BFS number
  std::vector<Vertex> entry;   // vertex -> neighbour it was reached from
};

// Returns false (and stops early) once the partial code exceeds `best`.
bool plane_code(const EmbeddedGraph& g, Vertex root, std::size_t first, int dir,
                const std::vector<int>* best, PlaneCode& out) {
  const auto n = static_cast<std::size_t>(g.order());
  out.code.clear();
  out.number.assign(n, 0);
  out.entry.assign(n, -1);
  out.number[static_cast<std::size_t>(root)] = 1;
  out.entry[static_cast<std::size_t>(root)] = g.rotation(root)[first];
  int next = 2;
  std::deque<Vertex> queue{root};
  bool tied = best != nullptr;
  auto emit = [&](int x) {
    const std::size_t i = out.code.size();
    out.code.push_back(x);
    if (tied) {
      if (x > (*best)[i]) return false;
      if (x < (*best)[i]) tied = false;
    }
    return true;
  };
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    const auto& r = g.rotation(u);
    const int deg = static_cast<int>(r.size());
    const int start = g.position(u, out.entry[static_cast<std::size_t>(u)]);
    for (int k = 0; k < deg; ++k) {
      const Vertex w = r[static_cast<std::size_t>(((start + dir * k) % deg + deg) % deg)];
      auto& nw = out.number[static_cast<std::size_t>(w)];
      if (nw == 0) {
        nw = next++;
        out.entry[static_cast<std::size_t>(w)] = u;
        queue.push_back(w);
      }
      if (!emit(nw)) return false;
    }
    if (!emit(0)) return false;
  }
  return true;
}

struct CodeChoice {
  Vertex root = 0;
  std::size_t first = 0;
  int dir = 1;
  std::vector<int> code;
};

CodeChoice best_code(const EmbeddedGraph& g, bool allow_reflection) {
  CodeChoice best;
  bool have = false;
  PlaneCode pc;
  for (Vertex v = 0; v < g.order(); ++v)
    for (std::size_t i = 0; i < g.rotation(v).size(); ++i)
      for (int dir : {1, -1}) {
        if (dir == -1 && !allow_reflection) continue;
        if (!plane_code(g, v, i, dir, have ? &best.code : nullptr, pc)) continue;
        if (!have || pc.code < best.code) {
          best = {v, i, dir, pc.code};
          have = true;
        }
      }
  if (!have) best.code = {1, 0};  // single vertex
  return best;
}

}  // namespace

std::vector<int> canonical_code(const EmbeddedGraph& g, bool allow_reflection) {
  return best_code(g, allow_reflection).code;
}

EmbeddedGraph canonical_form(const EmbeddedGraph& g, bool allow_reflection) {
  if (g.size() == 0) return g;
  CodeChoice c = best_code(g, allow_reflection);
  PlaneCode pc;
  plane_code(g, c.root, c.first, c.dir, nullptr, pc);
  std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(g.order()));
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto& r = g.rotation(u);
    const int deg = static_cast<int>(r.size());
    const int start = g.position(u, pc.entry[static_cast<std::size_t>(u)]);
    auto& out = rot[static_cast<std::size_t>(pc.number[static_cast<std::size_t>(u)] - 1)];
    for (int k = 0; k < deg; ++k)
      out.push_back(pc.number[static_cast<std::size_t>(r[static_cast<std::size_t>(((start + c.dir * k) % deg + deg) % deg)])] - 1);
  }
  return EmbeddedGraph::build(std::move(rot));
}

bool isomorphic(const EmbeddedGraph& a, const EmbeddedGraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_code(a) == canonical_code(b);
}

}  // namespace barnette
