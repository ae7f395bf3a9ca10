#pragma once

#include <map>
#include <vector>

#include "bhp/graph.hpp"

namespace bhp {

/// Oriented face cycle. Consecutive entries are adjacent; the last wraps to the first.
using Face = std::vector<VertexId>;

/// Counter-clockwise cyclic order of neighbours at every vertex.
using Rotation = std::map<VertexId, std::vector<VertexId>>;

/// Rotates a cycle so it starts at its smallest vertex, keeping orientation.
Face canonical_cycle(Face cycle);

/// Traces faces of a rotation system. The face to the left of u->v continues
/// with v->pred_v(u). Throws PreconditionError if the embedding is not a
/// connected sphere (|V| - |E| + |F| != 2) or the rotation is inconsistent.
std::vector<Face> derive_faces(const Rotation& rotation);

/// Sphere-embedded graph defined by its rotation system. Immutable; faces are
/// derived once on construction.
class TopologicalGraph {
 public:
  TopologicalGraph() = default;
  explicit TopologicalGraph(Rotation rotation);

  /// Builds the rotation system whose faces are exactly `faces`. Every
  /// directed edge must occur in exactly one face.
  static TopologicalGraph from_faces(const std::vector<Face>& faces);

  const Rotation& rotation() const { return rotation_; }
  const std::vector<VertexId>& rotation_at(VertexId v) const;
  const std::vector<Face>& faces() const { return faces_; }

  /// Neighbour following / preceding `w` in the counter-clockwise order at `v`.
  VertexId succ(VertexId v, VertexId w) const;
  VertexId pred(VertexId v, VertexId w) const;

  bool has_vertex(VertexId v) const { return rotation_.count(v) != 0; }
  bool has_edge(Edge e) const;
  std::size_t vertex_count() const { return rotation_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::vector<VertexId> vertices() const;
  std::vector<Edge> edges() const;
  Graph graph() const;

  bool operator==(const TopologicalGraph& other) const { return rotation_ == other.rotation_; }

 private:
  Rotation rotation_;
  std::vector<Face> faces_;
  std::size_t edge_count_ = 0;
};

}  // namespace bhp
