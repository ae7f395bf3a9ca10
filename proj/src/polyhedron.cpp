#include "bhp/polyhedron.hpp"

#include <algorithm>

#include "bhp/error.hpp"

namespace bhp {

std::string to_string(const FaceLabel& label) {
  switch (label.kind) {
    case FaceLabel::Kind::Block: return "block " + std::to_string(label.index);
    case FaceLabel::Kind::Hole: return "hole " + std::to_string(label.index);
    case FaceLabel::Kind::Disc: return "disc " + std::to_string(label.index);
  }
  return "?";
}

Triangle canonical_triangle(Triangle t) {
  auto it = std::min_element(t.begin(), t.end());
  std::rotate(t.begin(), it, t.end());
  return t;
}

namespace {

std::set<Edge> cycle_edges(const Face& f) {
  std::set<Edge> out;
  for (std::size_t i = 0; i < f.size(); ++i) out.insert(Edge(f[i], f[(i + 1) % f.size()]));
  return out;
}

}  // namespace

Polyhedron::Polyhedron(TopologicalGraph topology, FacePartition partition, VertexId next_id)
    : topology_(std::move(topology)), partition_(std::move(partition)) {
  VertexId max_v = -1;
  for (VertexId v : topology_.vertices()) max_v = std::max(max_v, v);
  next_id_ = std::max(next_id, max_v + 1);
  validate_and_index();
}

Polyhedron Polyhedron::from_partition(FacePartition partition, VertexId next_id) {
  std::vector<Face> faces;
  for (const Block& b : partition.blocks) faces.push_back(b.boundary);
  for (const Hole& h : partition.holes) faces.push_back(h.boundary);
  for (const auto& [id, disc] : partition.discs) {
    for (const Triangle& t : disc.triangles) faces.push_back(Face(t.begin(), t.end()));
  }
  auto topo = TopologicalGraph::from_faces(faces);
  return Polyhedron(std::move(topo), std::move(partition), next_id);
}

void Polyhedron::validate_and_index() {
  // Canonical form.
  for (Block& b : partition_.blocks) {
    b.boundary = canonical_cycle(std::move(b.boundary));
    std::sort(b.braces.begin(), b.braces.end());
  }
  for (Hole& h : partition_.holes) h.boundary = canonical_cycle(std::move(h.boundary));
  for (auto& [id, disc] : partition_.discs) {
    for (Triangle& t : disc.triangles) t = canonical_triangle(t);
    std::sort(disc.triangles.begin(), disc.triangles.end());
  }

  // Declared faces must be exactly the faces of the embedding.
  std::map<Face, int> derived;
  for (const Face& f : topology_.faces()) ++derived[f];
  auto claim = [&](const Face& f, FaceLabel label) {
    if (f.size() < 3) throw PreconditionError(to_string(label) + " has fewer than 3 vertices");
    auto it = derived.find(f);
    if (it == derived.end() || it->second == 0) {
      std::string s;
      for (VertexId v : f) s += " " + std::to_string(v);
      throw PreconditionError(to_string(label) + " cycle (" + s.substr(1) +
                              ") is not a face of the embedding");
    }
    --it->second;
    for (std::size_t i = 0; i < f.size(); ++i) {
      half_edge_label_[{f[i], f[(i + 1) % f.size()]}] = label;
    }
  };
  for (std::size_t i = 0; i < partition_.blocks.size(); ++i) {
    claim(partition_.blocks[i].boundary, FaceLabel::block(static_cast<int>(i)));
  }
  for (std::size_t i = 0; i < partition_.holes.size(); ++i) {
    claim(partition_.holes[i].boundary, FaceLabel::hole(static_cast<int>(i)));
  }
  for (const auto& [id, disc] : partition_.discs) {
    if (disc.triangles.empty()) throw PreconditionError("disc " + std::to_string(id) + " is empty");
    for (const Triangle& t : disc.triangles) claim(Face(t.begin(), t.end()), FaceLabel::disc(id));
  }
  for (const auto& [f, left] : derived) {
    if (left != 0) {
      std::string s;
      for (VertexId v : f) s += " " + std::to_string(v);
      throw PreconditionError("face (" + s.substr(1) + ") is not assigned to a block, hole or disc");
    }
  }

  surface_ = topology_.graph();
  graph_ = surface_;

  // Discs: boundary cycle from half-edges whose twin lies outside the disc.
  for (const auto& [id, disc] : partition_.discs) {
    DiscInfo info;
    std::set<std::pair<VertexId, VertexId>> halves;
    for (const Triangle& t : disc.triangles) {
      for (int i = 0; i < 3; ++i) {
        halves.insert({t[i], t[(i + 1) % 3]});
        info.vertices.insert(t[i]);
        info.edges.insert(Edge(t[i], t[(i + 1) % 3]));
      }
    }
    std::map<VertexId, VertexId> next;
    for (const auto& [a, b] : halves) {
      if (halves.count({b, a})) continue;
      if (!next.emplace(a, b).second) {
        throw PreconditionError("disc " + std::to_string(id) + " is pinched at vertex " +
                                std::to_string(a));
      }
    }
    if (next.empty()) throw PreconditionError("disc " + std::to_string(id) + " has no boundary");
    VertexId start = next.begin()->first;
    VertexId cur = start;
    do {
      info.boundary.push_back(cur);
      auto it = next.find(cur);
      if (it == next.end() || info.boundary.size() > next.size()) {
        throw PreconditionError("disc " + std::to_string(id) + " boundary is not a cycle");
      }
      cur = it->second;
    } while (cur != start);
    if (info.boundary.size() != next.size()) {
      throw PreconditionError("disc " + std::to_string(id) + " boundary is not a single cycle");
    }
    const long chi = static_cast<long>(info.vertices.size()) -
                     static_cast<long>(info.edges.size()) +
                     static_cast<long>(disc.triangles.size());
    if (chi != 1) throw PreconditionError("disc " + std::to_string(id) + " is not a disc");
    info.boundary_set.insert(info.boundary.begin(), info.boundary.end());
    for (VertexId v : info.vertices) {
      if (!info.boundary_set.count(v)) info.interior.insert(v);
    }
    disc_info_.emplace(id, std::move(info));
  }

  // Braces.
  brace_count_ = 0;
  for (std::size_t i = 0; i < partition_.blocks.size(); ++i) {
    const Block& b = partition_.blocks[i];
    const std::set<VertexId> on(b.boundary.begin(), b.boundary.end());
    const long n = static_cast<long>(b.boundary.size());
    if (static_cast<long>(b.braces.size()) != 2 * n - 6) {
      throw PreconditionError("block " + std::to_string(i) + " has " +
                              std::to_string(b.braces.size()) + " braces, expected " +
                              std::to_string(2 * n - 6));
    }
    for (const Edge& e : b.braces) {
      if (!on.count(e.u) || !on.count(e.v)) {
        throw PreconditionError("brace " + to_string(e) + " leaves block " + std::to_string(i));
      }
      if (surface_.has_edge(e) || braces_.count(e) || e.u == e.v) {
        throw PreconditionError("brace " + to_string(e) + " duplicates an existing edge");
      }
      braces_.insert(e);
      graph_.add_edge(e);
      ++brace_count_;
    }
  }
}

FaceLabel Polyhedron::label_left(VertexId u, VertexId v) const {
  auto it = half_edge_label_.find({u, v});
  if (it == half_edge_label_.end()) {
    throw PreconditionError("no face on directed edge (" + std::to_string(u) + "," +
                            std::to_string(v) + ")");
  }
  return it->second;
}

std::vector<std::pair<FaceLabel, Face>> Polyhedron::labelled_faces() const {
  std::vector<std::pair<FaceLabel, Face>> out;
  for (std::size_t i = 0; i < blocks().size(); ++i) {
    out.emplace_back(FaceLabel::block(static_cast<int>(i)), blocks()[i].boundary);
  }
  for (std::size_t i = 0; i < holes().size(); ++i) {
    out.emplace_back(FaceLabel::hole(static_cast<int>(i)), holes()[i].boundary);
  }
  for (const auto& [id, info] : disc_info_) out.emplace_back(FaceLabel::disc(id), info.boundary);
  return out;
}

std::set<FaceLabel> Polyhedron::labels_at(VertexId v) const {
  std::set<FaceLabel> out;
  for (VertexId w : topology_.rotation_at(v)) out.insert(label_left(v, w));
  return out;
}

std::set<VertexId> Polyhedron::face_vertices(FaceLabel label) const {
  if (label.is_disc()) return disc_info_.at(label.index).vertices;
  return boundary_vertices(label);
}

std::set<VertexId> Polyhedron::boundary_vertices(FaceLabel label) const {
  switch (label.kind) {
    case FaceLabel::Kind::Block: {
      const Face& f = blocks().at(label.index).boundary;
      return {f.begin(), f.end()};
    }
    case FaceLabel::Kind::Hole: {
      const Face& f = holes().at(label.index).boundary;
      return {f.begin(), f.end()};
    }
    case FaceLabel::Kind::Disc: return disc_info_.at(label.index).boundary_set;
  }
  return {};
}

std::set<Edge> Polyhedron::boundary_edges(FaceLabel label) const {
  switch (label.kind) {
    case FaceLabel::Kind::Block: return cycle_edges(blocks().at(label.index).boundary);
    case FaceLabel::Kind::Hole: return cycle_edges(holes().at(label.index).boundary);
    case FaceLabel::Kind::Disc: return cycle_edges(disc_info_.at(label.index).boundary);
  }
  return {};
}

const Face& Polyhedron::disc_boundary(DiscId d) const {
  auto it = disc_info_.find(d);
  if (it == disc_info_.end()) throw PreconditionError("no disc " + std::to_string(d));
  return it->second.boundary;
}

const std::set<VertexId>& Polyhedron::disc_interior(DiscId d) const {
  auto it = disc_info_.find(d);
  if (it == disc_info_.end()) throw PreconditionError("no disc " + std::to_string(d));
  return it->second.interior;
}

const std::set<Edge>& Polyhedron::disc_edges(DiscId d) const {
  auto it = disc_info_.find(d);
  if (it == disc_info_.end()) throw PreconditionError("no disc " + std::to_string(d));
  return it->second.edges;
}

std::optional<DiscId> Polyhedron::disc_containing_interior(VertexId v) const {
  for (const auto& [id, info] : disc_info_) {
    if (info.interior.count(v)) return id;
  }
  return std::nullopt;
}

std::vector<BoundaryPath> Polyhedron::shared_paths(FaceLabel a, FaceLabel b) const {
  std::vector<BoundaryPath> out;
  if (a == b) return out;
  std::set<Edge> shared;
  {
    auto ea = boundary_edges(a);
    auto eb = boundary_edges(b);
    std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(),
                          std::inserter(shared, shared.end()));
  }
  std::map<VertexId, std::vector<VertexId>> adj;
  for (const Edge& e : shared) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::set<Edge> used;
  auto walk = [&](VertexId start) {
    BoundaryPath p{a, b, {start}};
    VertexId cur = start;
    while (true) {
      VertexId nxt = -1;
      for (VertexId w : adj[cur]) {
        if (!used.count(Edge(cur, w))) {
          nxt = w;
          break;
        }
      }
      if (nxt < 0) break;
      used.insert(Edge(cur, nxt));
      p.vertices.push_back(nxt);
      cur = nxt;
    }
    out.push_back(std::move(p));
  };
  for (const auto& [v, nbrs] : adj) {
    if (nbrs.size() == 1 && !used.count(Edge(v, nbrs[0]))) walk(v);
  }
  for (const auto& [v, nbrs] : adj) {
    for (VertexId w : nbrs) {
      if (!used.count(Edge(v, w))) walk(v);
    }
  }
  return out;
}

std::vector<BoundaryPath> Polyhedron::disc_disc_paths() const {
  std::vector<BoundaryPath> out;
  for (auto i = disc_info_.begin(); i != disc_info_.end(); ++i) {
    for (auto j = std::next(i); j != disc_info_.end(); ++j) {
      auto ps = shared_paths(FaceLabel::disc(i->first), FaceLabel::disc(j->first));
      out.insert(out.end(), ps.begin(), ps.end());
    }
  }
  return out;
}

}  // namespace bhp
