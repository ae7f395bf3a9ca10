#include "bhp/transform.hpp"

#include <algorithm>

#include "bhp/error.hpp"
#include "bhp/generators.hpp"

namespace bhp {

namespace {

std::string vs(VertexId v) { return std::to_string(v); }

bool has_directed(const Triangle& t, VertexId a, VertexId b) {
  for (int i = 0; i < 3; ++i) {
    if (t[i] == a && t[(i + 1) % 3] == b) return true;
  }
  return false;
}

std::size_t find_triangle(const TriangulatedDisc& d, VertexId a, VertexId b) {
  for (std::size_t i = 0; i < d.triangles.size(); ++i) {
    if (has_directed(d.triangles[i], a, b)) return i;
  }
  throw PreconditionError("no disc triangle on (" + vs(a) + "," + vs(b) + ")");
}

template <class Seq>
void substitute(Seq& seq, VertexId from, VertexId to) {
  for (auto& v : seq) {
    if (v == from) v = to;
  }
}

void substitute_brace(std::vector<Edge>& braces, VertexId from, VertexId to) {
  for (Edge& e : braces) {
    if (e.has(from)) e = Edge(e.other(from), to);
  }
}

/// Replaces `from` by `to` in the face record on the left of a->b.
void retarget_face(const Polyhedron& p, FacePartition& part, VertexId a, VertexId b,
                   VertexId from, VertexId to) {
  const FaceLabel l = p.label_left(a, b);
  switch (l.kind) {
    case FaceLabel::Kind::Block: {
      Block& blk = part.blocks[l.index];
      substitute(blk.boundary, from, to);
      substitute_brace(blk.braces, from, to);
      break;
    }
    case FaceLabel::Kind::Hole: substitute(part.holes[l.index].boundary, from, to); break;
    case FaceLabel::Kind::Disc: {
      auto& disc = part.discs.at(l.index);
      substitute(disc.triangles[find_triangle(p.discs().at(l.index), a, b)], from, to);
      break;
    }
  }
}

std::vector<VertexId> rotated_to(const std::vector<VertexId>& ring, VertexId start, VertexId at) {
  auto it = std::find(ring.begin(), ring.end(), start);
  if (it == ring.end()) throw PreconditionError(vs(start) + " is not a neighbour of " + vs(at));
  std::vector<VertexId> out(it, ring.end());
  out.insert(out.end(), ring.begin(), it);
  return out;
}

VertexId fresh(const Polyhedron& p, VertexId requested) {
  const VertexId id = requested < 0 ? p.next_vertex_id() : requested;
  if (p.topology().has_vertex(id)) throw PreconditionError("vertex id " + vs(id) + " already in use");
  return id;
}

Polyhedron rebuild(FacePartition part, VertexId next_id, const char* what) {
  try {
    return Polyhedron::from_partition(std::move(part), next_id);
  } catch (const PreconditionError& e) {
    throw PreconditionError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Polyhedron vertex_split(const Polyhedron& p, const SplitSpec& spec) {
  const auto& topo = p.topology();
  const VertexId x = spec.x;
  if (!topo.has_vertex(x)) throw PreconditionError("split vertex " + vs(x) + " not present");
  if (spec.first == spec.second) throw PreconditionError("split needs two distinct kept edges");
  const auto ring = rotated_to(topo.rotation_at(x), spec.first, x);
  const std::size_t m = spec.moved.size();
  if (ring.size() < m + 2 || !std::equal(spec.moved.begin(), spec.moved.end(), ring.begin() + 1) ||
      ring[m + 1] != spec.second) {
    throw PreconditionError("moved edges at " + vs(x) +
                            " are not the contiguous run between the kept edges");
  }
  const VertexId y = fresh(p, spec.new_id);

  auto pick = [&](std::optional<DiscId> given, VertexId a1, VertexId b1, VertexId a2,
                  VertexId b2) -> DiscId {
    if (given) return *given;
    FaceLabel l = p.label_left(a1, b1);
    if (l.is_disc()) return l.index;
    l = p.label_left(a2, b2);
    if (l.is_disc()) return l.index;
    throw PreconditionError("split corner at " + vs(x) + " touches no disc");
  };
  const DiscId d1 = pick(spec.first_disc, x, spec.first, spec.first, x);
  const DiscId d2 = pick(spec.second_disc, spec.second, x, x, spec.second);

  FacePartition part = p.partition();
  for (std::size_t i = 1; i <= m + 1; ++i) retarget_face(p, part, ring[i], x, x, y);
  part.discs[d1].triangles.push_back({x, spec.first, y});
  part.discs[d2].triangles.push_back({x, y, spec.second});
  return rebuild(std::move(part), std::max(p.next_vertex_id(), y + 1), "vertex split");
}

Polyhedron contract_edge(const Polyhedron& p, VertexId keep, VertexId removed,
                         ContractionMove* move) {
  const auto& topo = p.topology();
  const VertexId x = keep;
  const VertexId y = removed;
  const Edge e(x, y);
  if (!p.surface_graph().has_edge(e)) throw PreconditionError("no surface edge " + to_string(e));
  const FaceLabel lx = p.label_left(x, y);
  const FaceLabel ly = p.label_left(y, x);
  if (!lx.is_disc() || !ly.is_disc()) {
    throw PreconditionError("edge " + to_string(e) + " borders a block or hole");
  }
  const VertexId s2 = topo.pred(y, x);
  const VertexId s1 = topo.pred(x, y);
  if (topo.pred(s2, y) != x || topo.pred(s1, x) != y) {
    throw PreconditionError("edge " + to_string(e) + " is not between two triangles");
  }
  std::vector<VertexId> common;
  for (VertexId w : p.graph().neighbors(x)) {
    if (p.graph().neighbors(y).count(w)) common.push_back(w);
  }
  if (common != std::vector<VertexId>{std::min(s1, s2), std::max(s1, s2)}) {
    std::string list;
    for (VertexId w : common) list += " " + vs(w);
    throw PreconditionError("contracting " + to_string(e) +
                            " would create under-count |E'| = 3|V'| - 7 (common neighbours:" +
                            list + ")");
  }
  const auto ring_y = rotated_to(topo.rotation_at(y), x, y);
  if (ring_y.size() < 3 || ring_y[1] != s1 || ring_y.back() != s2) {
    throw PreconditionError("rotation at " + vs(y) + " disagrees with its faces");
  }

  FacePartition part = p.partition();
  {
    auto& dx = part.discs.at(lx.index);
    dx.triangles.erase(dx.triangles.begin() +
                       static_cast<long>(find_triangle(p.discs().at(lx.index), x, y)));
    auto& dy = part.discs.at(ly.index);
    const auto& src = lx.index == ly.index ? dx : p.discs().at(ly.index);
    dy.triangles.erase(dy.triangles.begin() + static_cast<long>(find_triangle(src, y, x)));
  }
  auto pinched = [&](const auto& cycle) {
    return std::count(cycle.begin(), cycle.end(), x) > 1;
  };
  for (Block& b : part.blocks) {
    substitute(b.boundary, y, x);
    substitute_brace(b.braces, y, x);
    if (pinched(b.boundary)) throw PreconditionError("contracting " + to_string(e) + " would pinch a block");
  }
  for (Hole& h : part.holes) {
    substitute(h.boundary, y, x);
    if (pinched(h.boundary)) throw PreconditionError("contracting " + to_string(e) + " would pinch a hole");
  }
  for (auto it = part.discs.begin(); it != part.discs.end();) {
    for (Triangle& t : it->second.triangles) substitute(t, y, x);
    it = it->second.triangles.empty() ? part.discs.erase(it) : std::next(it);
  }
  Polyhedron out = rebuild(std::move(part), p.next_vertex_id(), "contraction");
  if (move) {
    *move = ContractionMove{x, y, s1, s2, {ring_y.begin() + 2, ring_y.end() - 1},
                            ly.index, lx.index, common};
  }
  return out;
}

SplitSpec invert(const ContractionMove& move) {
  return SplitSpec{move.keep, move.first, move.second, move.run, move.removed,
                   move.first_disc, move.second_disc};
}

Polyhedron subdivide_boundary_edge(const Polyhedron& p, Edge e, VertexId new_id) {
  const auto& topo = p.topology();
  if (!p.surface_graph().has_edge(e)) throw PreconditionError("no surface edge " + to_string(e));
  const VertexId u = e.u;
  const VertexId v = e.v;
  const FaceLabel la = p.label_left(u, v);
  const FaceLabel lb = p.label_left(v, u);
  if (!la.is_disc() || !lb.is_disc()) {
    throw PreconditionError("edge " + to_string(e) + " lies on a block or hole boundary");
  }
  if (la == lb) throw PreconditionError("edge " + to_string(e) + " is interior to one disc");
  const VertexId a = topo.pred(v, u);
  const VertexId b = topo.pred(u, v);
  const VertexId m = fresh(p, new_id);
  FacePartition part = p.partition();
  auto& da = part.discs.at(la.index).triangles;
  da.erase(da.begin() + static_cast<long>(find_triangle(p.discs().at(la.index), u, v)));
  da.push_back({u, m, a});
  da.push_back({m, v, a});
  auto& db = part.discs.at(lb.index).triangles;
  db.erase(db.begin() + static_cast<long>(find_triangle(p.discs().at(lb.index), v, u)));
  db.push_back({v, m, b});
  db.push_back({m, u, b});
  return rebuild(std::move(part), std::max(p.next_vertex_id(), m + 1), "subdivision");
}

Polyhedron insert_interior_vertex(const Polyhedron& p, DiscId d, Triangle t, VertexId new_id) {
  if (!p.has_disc(d)) throw PreconditionError("no disc " + std::to_string(d));
  const auto& tris = p.discs().at(d).triangles;
  Triangle c = canonical_triangle(t);
  Triangle r = canonical_triangle({t[2], t[1], t[0]});
  auto it = std::find(tris.begin(), tris.end(), c);
  if (it == tris.end()) it = std::find(tris.begin(), tris.end(), r);
  if (it == tris.end()) throw PreconditionError("triangle is not in disc " + std::to_string(d));
  const Triangle f = *it;
  const VertexId m = fresh(p, new_id);
  FacePartition part = p.partition();
  auto& out = part.discs.at(d).triangles;
  out.erase(out.begin() + (it - tris.begin()));
  out.push_back({f[0], f[1], m});
  out.push_back({f[1], f[2], m});
  out.push_back({f[2], f[0], m});
  return rebuild(std::move(part), std::max(p.next_vertex_id(), m + 1), "insertion");
}

Polyhedron flip_edge(const Polyhedron& p, DiscId d, Edge e) {
  const auto& topo = p.topology();
  if (!p.surface_graph().has_edge(e)) throw PreconditionError("no surface edge " + to_string(e));
  const VertexId u = e.u;
  const VertexId v = e.v;
  if (p.label_left(u, v) != FaceLabel::disc(d) || p.label_left(v, u) != FaceLabel::disc(d)) {
    throw PreconditionError("edge " + to_string(e) + " is not interior to disc " + std::to_string(d));
  }
  const VertexId a = topo.pred(v, u);
  const VertexId b = topo.pred(u, v);
  if (a == b || p.graph().has_edge(Edge(a, b))) {
    throw PreconditionError("flipping " + to_string(e) + " would duplicate edge " +
                            to_string(Edge(a, b)));
  }
  FacePartition part = p.partition();
  auto& tris = part.discs.at(d).triangles;
  const auto& src = p.discs().at(d);
  std::size_t i1 = find_triangle(src, u, v);
  std::size_t i2 = find_triangle(src, v, u);
  tris[i1] = {u, b, a};
  tris[i2] = {b, v, a};
  return rebuild(std::move(part), p.next_vertex_id(), "flip");
}

Polyhedron swap_blocks_holes(const Polyhedron& p) {
  FacePartition part;
  part.discs = p.discs();
  for (const Block& b : p.blocks()) part.holes.push_back({b.boundary});
  for (const Hole& h : p.holes()) {
    part.blocks.push_back({h.boundary, double_fan_braces_avoiding(p.surface_graph(), h.boundary)});
  }
  return rebuild(std::move(part), p.next_vertex_id(), "swap");
}

// ---- graph-level ---------------------------------------------------------

Graph graph_vertex_split(const Graph& g, const GraphSplit& s) {
  if (!g.has_vertex(s.x)) throw PreconditionError("split vertex " + vs(s.x) + " not present");
  const auto& nx = g.neighbors(s.x);
  if (s.a == s.b || !nx.count(s.a) || !nx.count(s.b)) {
    throw PreconditionError("split of " + vs(s.x) + " needs two distinct kept neighbours");
  }
  for (VertexId w : s.moved) {
    if (!nx.count(w) || w == s.a || w == s.b) {
      throw PreconditionError("moved vertex " + vs(w) + " is not a free neighbour of " + vs(s.x));
    }
  }
  const VertexId y = s.new_id < 0 ? g.next_free_id() : s.new_id;
  if (g.has_vertex(y)) throw PreconditionError("vertex id " + vs(y) + " already in use");
  Graph out = g;
  for (VertexId w : s.moved) {
    out.remove_edge(Edge(s.x, w));
    out.add_edge(Edge(y, w));
  }
  out.add_edge(Edge(s.x, y));
  out.add_edge(Edge(y, s.a));
  out.add_edge(Edge(y, s.b));
  return out;
}

Graph replay_splits(Graph g, const std::vector<GraphSplit>& seq) {
  for (const GraphSplit& s : seq) g = graph_vertex_split(g, s);
  return g;
}

namespace {

struct Strip {
  std::vector<VertexId> verts;
  std::map<VertexId, VertexId> dup;  // split vertices only
  std::map<VertexId, std::set<VertexId>> sel;

  VertexId prime(VertexId v) const {
    auto it = dup.find(v);
    return it == dup.end() ? v : it->second;
  }
  bool split(VertexId v) const { return dup.count(v) != 0; }
  bool selects(VertexId i, VertexId w) const {
    auto it = sel.find(i);
    return it != sel.end() && it->second.count(w);
  }
};

void check_walk(const Graph& g, const std::vector<VertexId>& w, bool closed, const char* what) {
  if (std::set<VertexId>(w.begin(), w.end()).size() != w.size()) {
    throw PreconditionError(std::string(what) + " repeats a vertex");
  }
  const std::size_t n = w.size();
  for (std::size_t i = 0; i + (closed ? 0 : 1) < n; ++i) {
    if (!g.has_edge(Edge(w[i], w[(i + 1) % n]))) {
      throw PreconditionError(std::string(what) + " edge " + to_string(Edge(w[i], w[(i + 1) % n])) +
                              " missing");
    }
  }
}

void check_selections(const Graph& g, const Strip& s,
                      const std::map<VertexId, std::set<VertexId>>& on_walk_nbrs) {
  for (const auto& [i, ws] : s.sel) {
    auto it = on_walk_nbrs.find(i);
    if (it == on_walk_nbrs.end()) throw PreconditionError("selection at " + vs(i) + " off the split");
    if (!ws.empty() && !s.split(i)) {
      throw PreconditionError("selection at " + vs(i) + " but " + vs(i) + " is not duplicated");
    }
    for (VertexId w : ws) {
      if (!g.has_edge(Edge(i, w))) throw PreconditionError("selected edge " + to_string(Edge(i, w)) + " missing");
      if (it->second.count(w)) {
        throw PreconditionError("selection at " + vs(i) + " contains walk edge " + to_string(Edge(i, w)));
      }
    }
  }
  std::set<VertexId> ids;
  for (const auto& [i, d] : s.dup) {
    if (g.has_vertex(d) || !ids.insert(d).second) {
      throw PreconditionError("duplicate id " + vs(d) + " is not fresh");
    }
  }
}

/// Moves every selected edge to the duplicated endpoint(s).
void move_selected(const Strip& s, Graph& out) {
  std::set<Edge> done;
  for (const auto& [i, ws] : s.sel) {
    for (VertexId w : ws) {
      const Edge e(i, w);
      if (!done.insert(e).second) continue;
      out.remove_edge(e);
      const VertexId w2 = s.selects(w, i) ? s.prime(w) : w;
      out.add_edge(Edge(s.prime(i), w2));
    }
  }
}

/// Current name of the far end of selected edge (i, w) at the time i splits.
VertexId far_end(const Strip& s, VertexId i, VertexId w, const std::set<VertexId>& processed) {
  return (processed.count(w) && s.selects(w, i)) ? s.prime(w) : w;
}

Strip make_cycle_strip(const Graph& g, const CycleSplitSpec& spec) {
  const auto& c = spec.cycle;
  if (c.size() < 3) throw PreconditionError("cycle needs at least three vertices");
  check_walk(g, c, true, "cycle");
  Strip s{c, {}, spec.selections};
  for (const auto& [i, d] : spec.duplicate) {
    if (std::find(c.begin(), c.end(), i) == c.end()) throw PreconditionError(vs(i) + " is not on the cycle");
    if (d != i) s.dup[i] = d;
  }
  if (s.dup.empty()) throw PreconditionError("cycle split duplicates no vertex");
  std::map<VertexId, std::set<VertexId>> walk;
  for (std::size_t i = 0; i < c.size(); ++i) {
    walk[c[i]] = {c[(i + c.size() - 1) % c.size()], c[(i + 1) % c.size()]};
  }
  check_selections(g, s, walk);
  return s;
}

Strip make_path_strip(const Graph& g, const PathSplitSpec& spec) {
  const auto& p = spec.path;
  if (p.size() < 3) throw PreconditionError("path split needs a path of length at least 2");
  check_walk(g, p, false, "path");
  if (g.has_edge(Edge(p.front(), p.back()))) {
    throw PreconditionError("path ends " + vs(p.front()) + "," + vs(p.back()) + " are adjacent");
  }
  Strip s{p, {}, spec.selections};
  VertexId next = g.next_free_id();
  for (const auto& [i, d] : spec.duplicate) next = std::max(next, d + 1);
  for (std::size_t k = 1; k + 1 < p.size(); ++k) {
    auto it = spec.duplicate.find(p[k]);
    s.dup[p[k]] = it == spec.duplicate.end() ? next++ : it->second;
  }
  for (const auto& [i, d] : spec.duplicate) {
    if (!s.dup.count(i)) throw PreconditionError(vs(i) + " is not an interior path vertex");
  }
  std::map<VertexId, std::set<VertexId>> walk;
  for (std::size_t k = 1; k + 1 < p.size(); ++k) walk[p[k]] = {p[k - 1], p[k + 1]};
  check_selections(g, s, walk);
  return s;
}

}  // namespace

Graph cycle_split(const Graph& g, const CycleSplitSpec& spec) {
  const Strip s = make_cycle_strip(g, spec);
  Graph out = g;
  move_selected(s, out);
  const auto& c = s.verts;
  const std::size_t k = c.size();
  for (std::size_t j = 0; j < k; ++j) {
    const VertexId i = c[j];
    const VertexId n = c[(j + 1) % k];
    if (s.split(i)) out.add_edge(Edge(i, s.prime(i)));
    if (s.split(i) || s.split(n)) out.add_edge(Edge(s.prime(i), s.prime(n)));
    if (s.split(i) && s.split(n)) out.add_edge(Edge(s.prime(i), n));
  }
  return out;
}

std::vector<GraphSplit> cycle_split_sequence(const Graph& g, const CycleSplitSpec& spec) {
  const Strip s = make_cycle_strip(g, spec);
  const auto& c = s.verts;
  const std::size_t k = c.size();
  std::size_t start = 0;
  while (!s.split(c[start])) ++start;
  std::vector<GraphSplit> seq;
  std::set<VertexId> processed;
  for (std::size_t t = 0; t < k; ++t) {
    const std::size_t j = (start + t) % k;
    const VertexId i = c[j];
    if (!s.split(i)) continue;
    const VertexId prev = c[(j + k - 1) % k];
    const VertexId next = c[(j + 1) % k];
    GraphSplit step;
    step.x = i;
    step.a = processed.count(prev) ? s.prime(prev) : prev;
    step.b = next;
    step.new_id = s.prime(i);
    auto sel = s.sel.find(i);
    if (sel != s.sel.end()) {
      for (VertexId w : sel->second) step.moved.insert(far_end(s, i, w, processed));
    }
    if (processed.count(next)) step.moved.insert(s.prime(next));  // closing the ring
    seq.push_back(step);
    processed.insert(i);
  }
  return seq;
}

Graph path_split(const Graph& g, const PathSplitSpec& spec) {
  const Strip s = make_path_strip(g, spec);
  Graph out = g;
  move_selected(s, out);
  const auto& p = s.verts;
  for (std::size_t j = 0; j + 1 < p.size(); ++j) {
    const VertexId i = p[j];
    const VertexId n = p[j + 1];
    if (s.split(i)) out.add_edge(Edge(i, s.prime(i)));
    out.add_edge(Edge(s.prime(i), s.prime(n)));
    if (s.split(i) && s.split(n)) out.add_edge(Edge(s.prime(i), n));
  }
  return out;
}

std::vector<GraphSplit> path_split_sequence(const Graph& g, const PathSplitSpec& spec) {
  const Strip s = make_path_strip(g, spec);
  const auto& p = s.verts;
  std::vector<GraphSplit> seq;
  std::set<VertexId> processed;
  for (std::size_t j = 1; j + 1 < p.size(); ++j) {
    const VertexId i = p[j];
    GraphSplit step{i, s.prime(p[j - 1]), p[j + 1], {}, s.prime(i)};
    auto sel = s.sel.find(i);
    if (sel != s.sel.end()) {
      for (VertexId w : sel->second) step.moved.insert(far_end(s, i, w, processed));
    }
    seq.push_back(step);
    processed.insert(i);
  }
  return seq;
}

}  // namespace bhp
