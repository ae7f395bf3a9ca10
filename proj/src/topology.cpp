#include "bhp/topology.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "bhp/error.hpp"

namespace bhp {

namespace {

std::size_t position_of(const std::vector<VertexId>& ring, VertexId w, VertexId at) {
  auto it = std::find(ring.begin(), ring.end(), w);
  if (it == ring.end()) {
    throw PreconditionError("vertex " + std::to_string(w) + " is not a neighbour of " +
                            std::to_string(at));
  }
  return static_cast<std::size_t>(it - ring.begin());
}

}  // namespace

Face canonical_cycle(Face cycle) {
  if (cycle.empty()) return cycle;
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  return cycle;
}

std::vector<Face> derive_faces(const Rotation& rotation) {
  std::size_t directed = 0;
  for (const auto& [v, ring] : rotation) {
    std::set<VertexId> distinct(ring.begin(), ring.end());
    if (distinct.size() != ring.size()) {
      throw PreconditionError("rotation at " + std::to_string(v) + " repeats a neighbour");
    }
    for (VertexId w : ring) {
      if (w == v) throw PreconditionError("self-loop at vertex " + std::to_string(v));
      auto it = rotation.find(w);
      if (it == rotation.end() ||
          std::find(it->second.begin(), it->second.end(), v) == it->second.end()) {
        throw PreconditionError("rotation is not symmetric at edge {" + std::to_string(v) +
                                "," + std::to_string(w) + "}");
      }
    }
    directed += ring.size();
  }

  std::set<std::pair<VertexId, VertexId>> used;
  std::vector<Face> faces;
  for (const auto& [v, ring] : rotation) {
    for (VertexId w : ring) {
      if (used.count({v, w})) continue;
      Face face;
      VertexId a = v;
      VertexId b = w;
      while (used.insert({a, b}).second) {
        face.push_back(a);
        const auto& rb = rotation.at(b);
        std::size_t i = position_of(rb, a, b);
        VertexId c = rb[(i + rb.size() - 1) % rb.size()];
        a = b;
        b = c;
      }
      if (a != v || b != w) throw PreconditionError("face tracing did not close");
      faces.push_back(canonical_cycle(std::move(face)));
    }
  }

  const long v_count = static_cast<long>(rotation.size());
  const long e_count = static_cast<long>(directed / 2);
  const long f_count = static_cast<long>(faces.size());
  if (v_count - e_count + f_count != 2) {
    throw PreconditionError("embedding is not spherical: |V|-|E|+|F| = " +
                            std::to_string(v_count - e_count + f_count));
  }
  return faces;
}

TopologicalGraph::TopologicalGraph(Rotation rotation) : rotation_(std::move(rotation)) {
  for (auto& [v, ring] : rotation_) ring = canonical_cycle(std::move(ring));
  std::size_t directed = 0;
  for (const auto& [v, ring] : rotation_) directed += ring.size();
  edge_count_ = directed / 2;
  faces_ = derive_faces(rotation_);
  if (!is_connected(graph())) throw PreconditionError("embedded graph is disconnected");
}

TopologicalGraph TopologicalGraph::from_faces(const std::vector<Face>& faces) {
  // succ_at[v][w] = u for every corner (u, v, w) of a face.
  std::map<VertexId, std::map<VertexId, VertexId>> succ_at;
  std::set<std::pair<VertexId, VertexId>> directed;
  for (const Face& f : faces) {
    const std::size_t k = f.size();
    if (k < 3) throw PreconditionError("face with fewer than three vertices");
    if (std::set<VertexId>(f.begin(), f.end()).size() != k) {
      throw PreconditionError("face repeats a vertex");
    }
    for (std::size_t i = 0; i < k; ++i) {
      VertexId u = f[(i + k - 1) % k];
      VertexId v = f[i];
      VertexId w = f[(i + 1) % k];
      if (!directed.insert({v, w}).second) {
        throw PreconditionError("directed edge (" + std::to_string(v) + "," +
                                std::to_string(w) + ") used by two faces");
      }
      succ_at[v][w] = u;
    }
  }
  Rotation rotation;
  for (const auto& [v, succ] : succ_at) {
    std::vector<VertexId> ring;
    VertexId start = succ.begin()->first;
    VertexId cur = start;
    do {
      ring.push_back(cur);
      auto it = succ.find(cur);
      if (it == succ.end()) {
        throw PreconditionError("faces around vertex " + std::to_string(v) + " do not close");
      }
      cur = it->second;
    } while (cur != start && ring.size() <= succ.size());
    if (ring.size() != succ.size()) {
      throw PreconditionError("vertex " + std::to_string(v) + " is not a manifold point");
    }
    rotation.emplace(v, std::move(ring));
  }
  return TopologicalGraph(std::move(rotation));
}

const std::vector<VertexId>& TopologicalGraph::rotation_at(VertexId v) const {
  auto it = rotation_.find(v);
  if (it == rotation_.end()) throw PreconditionError("unknown vertex " + std::to_string(v));
  return it->second;
}

VertexId TopologicalGraph::succ(VertexId v, VertexId w) const {
  const auto& ring = rotation_at(v);
  return ring[(position_of(ring, w, v) + 1) % ring.size()];
}

VertexId TopologicalGraph::pred(VertexId v, VertexId w) const {
  const auto& ring = rotation_at(v);
  return ring[(position_of(ring, w, v) + ring.size() - 1) % ring.size()];
}

bool TopologicalGraph::has_edge(Edge e) const {
  auto it = rotation_.find(e.u);
  return it != rotation_.end() &&
         std::find(it->second.begin(), it->second.end(), e.v) != it->second.end();
}

std::vector<VertexId> TopologicalGraph::vertices() const {
  std::vector<VertexId> out;
  for (const auto& [v, _] : rotation_) out.push_back(v);
  return out;
}

std::vector<Edge> TopologicalGraph::edges() const {
  std::vector<Edge> out;
  for (const auto& [v, ring] : rotation_) {
    for (VertexId w : ring) {
      if (v < w) out.emplace_back(v, w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph TopologicalGraph::graph() const {
  Graph g;
  for (const auto& [v, _] : rotation_) g.add_vertex(v);
  for (const Edge& e : edges()) g.add_edge(e);
  return g;
}

}  // namespace bhp
