#include "bhp/predicates.hpp"

#include <algorithm>
#include <sstream>

#include "bhp/error.hpp"

namespace bhp {

namespace {

bool is_face_triangle(const Polyhedron& p, VertexId a, VertexId b, VertexId c) {
  // The face left of a->b is the triangle iff it continues to c and back.
  const auto& t = p.topology();
  auto closes = [&](VertexId x, VertexId y, VertexId z) { return t.pred(y, x) == z && t.pred(z, y) == x; };
  return closes(a, b, c) || closes(b, a, c);
}

std::set<VertexId> intersect(const std::set<VertexId>& a, const std::set<VertexId>& b) {
  std::set<VertexId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

std::string name(FaceLabel l) { return to_string(l); }

}  // namespace

bool is_nonfacial_triangle(const Polyhedron& p, VertexId a, VertexId b, VertexId c) {
  const auto& g = p.surface_graph();
  if (!g.has_edge(Edge(a, b)) || !g.has_edge(Edge(b, c)) || !g.has_edge(Edge(a, c))) {
    throw PreconditionError("triple (" + std::to_string(a) + "," + std::to_string(b) + "," +
                            std::to_string(c) + ") is not a 3-cycle of the surface");
  }
  return !is_face_triangle(p, a, b, c);
}

std::vector<VertexId> short_witnesses(const Polyhedron& p, Edge e) {
  const auto& g = p.surface_graph();
  std::vector<VertexId> out;
  const auto& nu = g.neighbors(e.u);
  const auto& nv = g.neighbors(e.v);
  for (VertexId w : nu) {
    if (nv.count(w) && !is_face_triangle(p, e.u, e.v, w)) out.push_back(w);
  }
  return out;
}

bool is_long_edge(const Polyhedron& p, Edge e) {
  if (!p.surface_graph().has_edge(e)) throw PreconditionError("no surface edge " + to_string(e));
  return short_witnesses(p, e).empty();
}

std::vector<Edge> unclean_chords(const Polyhedron& p, DiscId d) {
  const Face& boundary = p.disc_boundary(d);
  const std::set<VertexId> on(boundary.begin(), boundary.end());
  const auto& mine = p.disc_edges(d);
  std::vector<Edge> out;
  for (VertexId u : boundary) {
    for (VertexId w : p.graph().neighbors(u)) {
      if (u < w && on.count(w) && !mine.count(Edge(u, w))) out.emplace_back(u, w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool has_clean_boundary(const Polyhedron& p, DiscId d) { return unclean_chords(p, d).empty(); }

bool is_well_attached(const Polyhedron& p, DiscId a, DiscId b, std::string* why) {
  auto reject = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  const auto la = FaceLabel::disc(a);
  const auto lb = FaceLabel::disc(b);
  const auto paths = p.shared_paths(la, lb);
  if (paths.size() != 1) return reject(std::to_string(paths.size()) + " shared paths");
  const BoundaryPath& path = paths[0];
  const std::set<VertexId> on_path(path.vertices.begin(), path.vertices.end());
  if (intersect(p.face_vertices(la), p.face_vertices(lb)) != on_path) {
    return reject("intersection is more than the shared path");
  }
  if (path.closed()) {
    if (p.face_vertices(la).size() + p.face_vertices(lb).size() - on_path.size() ==
            p.vertex_count() &&
        p.discs().size() == 2 && p.blocks().empty() && p.holes().empty()) {
      return true;
    }
    return reject("closed intersection");
  }
  std::set<VertexId> both = p.face_vertices(la);
  for (VertexId v : p.face_vertices(lb)) both.insert(v);
  for (std::size_t i = 1; i + 1 < path.vertices.size(); ++i) {
    for (VertexId w : p.graph().neighbors(path.vertices[i])) {
      if (!both.count(w)) {
        return reject("path vertex " + std::to_string(path.vertices[i]) + " sees " +
                      std::to_string(w) + " outside the two discs");
      }
    }
  }
  const auto pa = p.boundary_edges(la).size();
  const auto pb = p.boundary_edges(lb).size();
  if (pa <= path.length() || pb <= path.length()) return reject("a disc has no boundary off the path");
  return true;
}

WellDesignedReport check_well_designed(const Polyhedron& p) {
  WellDesignedReport r;
  std::vector<DiscId> ids;
  for (const auto& [id, _] : p.discs()) ids.push_back(id);

  std::set<std::pair<DiscId, DiscId>> attached_ok;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      const auto ps = p.shared_paths(FaceLabel::disc(ids[i]), FaceLabel::disc(ids[j]));
      if (ps.empty()) continue;
      std::string why;
      if (is_well_attached(p, ids[i], ids[j], &why)) {
        attached_ok.insert({ids[i], ids[j]});
      } else {
        r.well_attached.fail("discs " + std::to_string(ids[i]) + "," + std::to_string(ids[j]) +
                             ": " + why);
      }
    }
  }

  const auto faces = p.labelled_faces();
  for (DiscId d : ids) {
    const auto ld = FaceLabel::disc(d);
    const auto dv = p.face_vertices(ld);
    const auto db = p.boundary_vertices(ld);
    for (const auto& [other, _] : faces) {
      if (other == ld) continue;
      const auto common = intersect(dv, p.face_vertices(other));
      if (common.empty()) continue;
      const auto ps = p.shared_paths(ld, other);
      bool ok = common.size() == 1 && ps.empty();
      if (ps.size() == 1) {
        ok = std::set<VertexId>(ps[0].vertices.begin(), ps[0].vertices.end()) == common;
      }
      if (!ok) {
        r.well_surrounded.fail("contact: disc " + std::to_string(d) + " meets " + name(other) +
                               " in " + std::to_string(common.size()) + " vertices and " +
                               std::to_string(ps.size()) + " paths");
        continue;
      }
      if (other.is_disc() && !ps.empty() && ps[0].length() > 1) {
        auto key = std::minmax(d, other.index);
        if (!attached_ok.count({key.first, key.second})) {
          r.well_surrounded.fail("long path: disc " + std::to_string(d) + " shares a long path with " +
                                 name(other) + " that is not well-attached");
        }
      }
    }
    // Chords between boundary vertices must lie in a face touching D.
    for (VertexId u : db) {
      for (VertexId w : p.graph().neighbors(u)) {
        if (u > w || !db.count(w)) continue;
        const Edge e(u, w);
        bool found = p.disc_edges(d).count(e) != 0;
        for (std::size_t bi = 0; !found && bi < p.blocks().size(); ++bi) {
          const auto& br = p.blocks()[bi].braces;
          found = std::find(br.begin(), br.end(), e) != br.end();
        }
        if (!found && p.surface_graph().has_edge(e)) found = true;  // every surface edge borders a face
        if (!found) {
          r.well_surrounded.fail("chord: disc " + std::to_string(d) + " chord " + to_string(e) +
                                 " lies in no face");
        }
      }
    }
  }

  for (VertexId v : p.topology().vertices()) {
    if (p.labels_at(v).empty()) r.coverage.fail("vertex " + std::to_string(v) + " in no face");
  }
  return r;
}

std::string WellDesignedReport::to_text() const {
  std::ostringstream out;
  auto emit = [&](const char* key, const ConditionResult& c) {
    out << key << " = " << (c.pass ? "pass" : "fail") << "\n";
    for (const auto& w : c.witnesses) out << "  " << w << "\n";
  };
  emit("well_attached", well_attached);
  emit("well_surrounded", well_surrounded);
  emit("vertex_coverage", coverage);
  return out.str();
}

}  // namespace bhp
