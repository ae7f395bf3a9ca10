#include "bhp/generators.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>

#include "bhp/error.hpp"
#include "bhp/transform.hpp"

namespace bhp {

std::vector<Edge> double_fan_braces(const Face& f) {
  const std::size_t n = f.size();
  std::vector<Edge> out;
  for (std::size_t i = 2; i + 1 < n; ++i) out.emplace_back(f[0], f[i]);
  for (std::size_t i = 3; i < n; ++i) out.emplace_back(f[1], f[i]);
  return out;
}

std::vector<Edge> double_fan_braces_avoiding(const Graph& g, const Face& boundary) {
  const std::size_t n = boundary.size();
  for (std::size_t r = 0; r < n; ++r) {
    Face f(boundary.begin() + static_cast<long>(r), boundary.end());
    f.insert(f.end(), boundary.begin(), boundary.begin() + static_cast<long>(r));
    auto cand = double_fan_braces(f);
    if (std::none_of(cand.begin(), cand.end(), [&](const Edge& e) { return g.has_edge(e); })) {
      return cand;
    }
  }
  throw PreconditionError("every double fan on the face collides with an existing edge");
}

Block double_fan_block(int n) {
  if (n < 3) throw PreconditionError("block needs at least 3 vertices");
  Face f(static_cast<std::size_t>(n));
  std::iota(f.begin(), f.end(), 0);
  return Block{f, double_fan_braces(f)};
}

namespace {

struct Band {
  std::vector<Triangle> triangles;
  std::vector<std::size_t> anchor;  // big-ring index joined to small-ring vertex j
};

// Balanced merge of a big ring (a vertices) and a small ring (b <= a).
Band merge_rings(const std::vector<VertexId>& big, const std::vector<VertexId>& small) {
  const std::size_t a = big.size();
  const std::size_t b = small.size();
  Band band;
  band.anchor.assign(b, 0);
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a || j < b) {
    const bool step_big = j == b || (i < a && (i + 1) * b <= (j + 1) * a);
    if (step_big) {
      band.triangles.push_back({big[i], big[(i + 1) % a], small[j % b]});
      ++i;
    } else {
      band.triangles.push_back({big[i % a], small[(j + 1) % b], small[j]});
      ++j;
      if (j < b) band.anchor[j] = i;
    }
  }
  return band;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Orients triangles consistently (each shared edge traversed both ways).
void orient(std::vector<Triangle>& tris) {
  std::map<Edge, std::vector<std::size_t>> by_edge;
  for (std::size_t t = 0; t < tris.size(); ++t) {
    for (int k = 0; k < 3; ++k) by_edge[Edge(tris[t][k], tris[t][(k + 1) % 3])].push_back(t);
  }
  auto uses = [&](std::size_t t, VertexId u, VertexId v) {
    for (int k = 0; k < 3; ++k) {
      if (tris[t][k] == u && tris[t][(k + 1) % 3] == v) return true;
    }
    return false;
  };
  std::vector<bool> seen(tris.size(), false);
  for (std::size_t root = 0; root < tris.size(); ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      std::size_t t = queue.front();
      queue.pop_front();
      for (int k = 0; k < 3; ++k) {
        const VertexId u = tris[t][k];
        const VertexId v = tris[t][(k + 1) % 3];
        for (std::size_t o : by_edge[Edge(u, v)]) {
          if (o == t || seen[o]) continue;
          if (uses(o, u, v)) std::swap(tris[o][1], tris[o][2]);
          seen[o] = true;
          queue.push_back(o);
        }
      }
    }
  }
}

Face hole_cycle(const std::vector<VertexId>& ring, const std::vector<Triangle>& tris) {
  const VertexId u = ring[0];
  const VertexId v = ring[1];
  for (const Triangle& t : tris) {
    for (int k = 0; k < 3; ++k) {
      if (t[k] == u && t[(k + 1) % 3] == v) return Face(ring.rbegin(), ring.rend());
    }
  }
  return ring;
}

}  // namespace

Polyhedron make_cylinder(int m, int k, int n) {
  if (k < 3 || m < 3 || n < 3) throw PreconditionError("cylinder sizes must be at least 3");
  if (k > std::min(m, n)) throw PreconditionError("waist k must satisfy k <= min(m, n)");
  std::vector<int> sizes = (k == std::min(m, n)) ? std::vector<int>{m, n} : std::vector<int>{m, k, n};
  std::vector<std::vector<VertexId>> rings;
  VertexId next = 0;
  for (int s : sizes) {
    std::vector<VertexId> r(static_cast<std::size_t>(s));
    std::iota(r.begin(), r.end(), next);
    next += s;
    rings.push_back(r);
  }
  std::vector<Triangle> tris;
  std::set<Edge> cuts;
  auto add_band = [&](const std::vector<VertexId>& big, const std::vector<VertexId>& small) {
    Band band = merge_rings(big, small);
    tris.insert(tris.end(), band.triangles.begin(), band.triangles.end());
    for (std::size_t j = 0; j < small.size(); ++j) cuts.insert(Edge(small[j], big[band.anchor[j]]));
  };
  if (rings.size() == 2) {
    if (m >= n) add_band(rings[0], rings[1]);
    else add_band(rings[1], rings[0]);
  } else {
    add_band(rings[0], rings[1]);
    add_band(rings[2], rings[1]);
  }
  orient(tris);

  UnionFind uf(tris.size());
  std::map<Edge, std::vector<std::size_t>> by_edge;
  for (std::size_t t = 0; t < tris.size(); ++t) {
    for (int q = 0; q < 3; ++q) by_edge[Edge(tris[t][q], tris[t][(q + 1) % 3])].push_back(t);
  }
  for (const auto& [e, ts] : by_edge) {
    if (ts.size() == 2 && !cuts.count(e)) uf.unite(ts[0], ts[1]);
  }
  std::map<std::size_t, std::vector<Triangle>> comps;
  for (std::size_t t = 0; t < tris.size(); ++t) comps[uf.find(t)].push_back(canonical_triangle(tris[t]));
  std::vector<std::vector<Triangle>> ordered;
  for (auto& [_, ts] : comps) {
    std::sort(ts.begin(), ts.end());
    ordered.push_back(ts);
  }
  std::sort(ordered.begin(), ordered.end());

  FacePartition part;
  part.holes.push_back({hole_cycle(rings.front(), tris)});
  part.holes.push_back({hole_cycle(rings.back(), tris)});
  for (std::size_t d = 0; d < ordered.size(); ++d) part.discs[static_cast<DiscId>(d)].triangles = ordered[d];
  return Polyhedron::from_partition(std::move(part));
}

Polyhedron block_hole(const Polyhedron& p, int index) {
  if (index < 0 || index >= static_cast<int>(p.holes().size())) {
    throw PreconditionError("no hole " + std::to_string(index));
  }
  FacePartition part = p.partition();
  const Face f = part.holes[static_cast<std::size_t>(index)].boundary;
  part.holes.erase(part.holes.begin() + index);
  part.blocks.push_back({f, double_fan_braces_avoiding(p.surface_graph(), f)});
  return Polyhedron::from_partition(std::move(part), p.next_vertex_id());
}

Polyhedron make_tower(int n) { return block_hole(make_cylinder(n, n, n), 0); }

Polyhedron make_defective_tower(int n, int k) { return block_hole(make_cylinder(n, k, n), 0); }

TopologicalGraph random_triangulated_sphere(int n, std::uint64_t seed) {
  if (n < 4) throw PreconditionError("a triangulated sphere needs at least 4 vertices");
  std::mt19937_64 rng(seed);
  std::vector<Triangle> faces = {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
  for (VertexId v = 4; v < n; ++v) {
    const std::size_t t = rng() % faces.size();
    const Triangle f = faces[t];
    faces[t] = {f[0], f[1], v};
    faces.push_back({f[1], f[2], v});
    faces.push_back({f[2], f[0], v});
  }
  const int flips = n;
  for (int attempt = 0; attempt < 4 * flips && n > 4; ++attempt) {
    std::map<std::pair<VertexId, VertexId>, std::size_t> owner;
    std::map<VertexId, std::set<VertexId>> adj;
    for (std::size_t t = 0; t < faces.size(); ++t) {
      for (int k = 0; k < 3; ++k) {
        owner[{faces[t][k], faces[t][(k + 1) % 3]}] = t;
        adj[faces[t][k]].insert(faces[t][(k + 1) % 3]);
      }
    }
    const std::size_t t1 = rng() % faces.size();
    const int k = static_cast<int>(rng() % 3);
    const VertexId u = faces[t1][k];
    const VertexId v = faces[t1][(k + 1) % 3];
    const VertexId a = faces[t1][(k + 2) % 3];
    const std::size_t t2 = owner.at({v, u});
    VertexId b = -1;
    for (VertexId w : faces[t2]) {
      if (w != u && w != v) b = w;
    }
    if (adj[a].count(b) || adj[u].size() <= 3 || adj[v].size() <= 3) continue;
    faces[t1] = {u, b, a};
    faces[t2] = {b, v, a};
  }
  std::vector<Face> fs;
  for (const Triangle& t : faces) fs.push_back(Face(t.begin(), t.end()));
  return TopologicalGraph::from_faces(fs);
}

Polyhedron sphere_polyhedron(const TopologicalGraph& t) {
  FacePartition part;
  const auto& faces = t.faces();
  const auto first = std::min_element(faces.begin(), faces.end());
  for (auto it = faces.begin(); it != faces.end(); ++it) {
    if (it->size() != 3) throw PreconditionError("sphere has a non-triangular face");
    part.discs[it == first ? 0 : 1].triangles.push_back({(*it)[0], (*it)[1], (*it)[2]});
  }
  return Polyhedron(t, std::move(part));
}

Polyhedron expand(const Polyhedron& p, std::uint64_t seed, const ExpandOps& ops) {
  std::mt19937_64 rng(seed);
  Polyhedron cur = p;
  for (int s = 0; s < ops.subdivisions; ++s) {
    std::vector<Edge> cand;
    for (const Edge& e : cur.topology().edges()) {
      const FaceLabel l = cur.label_left(e.u, e.v);
      const FaceLabel r = cur.label_left(e.v, e.u);
      if (l.is_disc() && r.is_disc() && l != r) cand.push_back(e);
    }
    if (cand.empty()) break;
    cur = subdivide_boundary_edge(cur, cand[rng() % cand.size()]);
  }
  for (int s = 0; s < ops.insertions; ++s) {
    std::vector<std::pair<DiscId, Triangle>> cand;
    for (const auto& [id, d] : cur.discs()) {
      for (const Triangle& t : d.triangles) cand.push_back({id, t});
    }
    const auto& [id, t] = cand[rng() % cand.size()];
    cur = insert_interior_vertex(cur, id, t);
  }
  for (int s = 0; s < ops.flips; ++s) {
    std::vector<std::pair<DiscId, Edge>> cand;
    const auto& topo = cur.topology();
    for (const Edge& e : topo.edges()) {
      const FaceLabel l = cur.label_left(e.u, e.v);
      if (!l.is_disc() || cur.label_left(e.v, e.u) != l) continue;
      const VertexId a = topo.pred(e.v, e.u);
      const VertexId b = topo.pred(e.u, e.v);
      if (a == b || cur.graph().has_edge(Edge(a, b))) continue;
      if (cur.graph().degree(e.u) <= 3 || cur.graph().degree(e.v) <= 3) continue;
      bool chord = false;
      for (const auto& [label, face] : cur.labelled_faces()) {
        if (label.is_disc()) continue;
        const std::set<VertexId> on(face.begin(), face.end());
        chord = chord || (on.count(a) && on.count(b));
      }
      if (!chord) cand.push_back({l.index, e});
    }
    if (cand.empty()) break;
    const auto& [id, e] = cand[rng() % cand.size()];
    cur = flip_edge(cur, id, e);
  }
  return cur;
}

namespace fixtures {

Graph double_banana() {
  // a=0 b=1, p1..p3 = 2..4, q1..q3 = 5..7
  Graph g;
  for (VertexId hinge : {0, 1}) {
    for (VertexId v = 2; v <= 7; ++v) g.add_edge(Edge(hinge, v));
  }
  for (VertexId base : {2, 5}) {
    g.add_edge(Edge(base, base + 1));
    g.add_edge(Edge(base + 1, base + 2));
    g.add_edge(Edge(base, base + 2));
  }
  return g;
}

Polyhedron twin_block_sphere() {
  FacePartition part;
  part.blocks.push_back({{0, 4, 3, 2}, {Edge(0, 3), Edge(2, 4)}});
  part.blocks.push_back({{0, 7, 6, 5}, {Edge(0, 6), Edge(5, 7)}});
  part.holes.push_back({{0, 5, 1, 4}});
  part.holes.push_back({{0, 2, 1, 7}});
  part.discs[0].triangles = {{3, 1, 2}, {4, 1, 3}};
  part.discs[1].triangles = {{6, 1, 5}, {7, 1, 6}};
  return Polyhedron::from_partition(std::move(part));
}

Polyhedron hexagon_base() {
  // centre 0, hexagon 1..6
  FacePartition part;
  part.holes.push_back({{1, 2, 3, 4, 5, 6}});
  for (Face f : {Face{1, 0, 3, 2}, Face{3, 0, 5, 4}, Face{5, 0, 1, 6}}) {
    part.blocks.push_back({f, double_fan_braces(f)});
  }
  return Polyhedron::from_partition(std::move(part));
}

Polyhedron hexagon_expanded() {
  Polyhedron p = hexagon_base();
  DiscId disc = 0;
  for (VertexId x : {0, 3, 5}) {
    const auto& ring = p.topology().rotation_at(x);
    SplitSpec s;
    s.x = x;
    s.first = ring[0];
    s.second = p.topology().succ(x, ring[0]);
    s.first_disc = disc++;
    s.second_disc = disc++;
    p = vertex_split(p, s);
  }
  return p;
}

}  // namespace fixtures

}  // namespace bhp
