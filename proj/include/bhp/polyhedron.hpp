#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bhp/graph.hpp"
#include "bhp/topology.hpp"

namespace bhp {

using DiscId = int;
using Triangle = std::array<VertexId, 3>;

/// Face filled with an isostatic subgraph: the boundary cycle plus braces.
struct Block {
  Face boundary;
  std::vector<Edge> braces;

  bool operator==(const Block&) const = default;
};

/// Face left empty apart from its boundary cycle.
struct Hole {
  Face boundary;

  bool operator==(const Hole&) const = default;
};

/// Surface face triangulated on its boundary and interior vertices.
/// Triangles are oriented like the faces of the embedding.
struct TriangulatedDisc {
  std::vector<Triangle> triangles;

  bool operator==(const TriangulatedDisc&) const = default;
};

struct FacePartition {
  std::vector<Block> blocks;
  std::vector<Hole> holes;
  std::map<DiscId, TriangulatedDisc> discs;

  bool operator==(const FacePartition&) const = default;
};

/// Which partition class a face of the embedding belongs to.
struct FaceLabel {
  enum class Kind { Block, Hole, Disc };
  Kind kind = Kind::Disc;
  int index = 0;  // block/hole position, or disc id

  static FaceLabel block(int i) { return {Kind::Block, i}; }
  static FaceLabel hole(int i) { return {Kind::Hole, i}; }
  static FaceLabel disc(DiscId d) { return {Kind::Disc, d}; }

  bool is_disc() const { return kind == Kind::Disc; }
  auto operator<=>(const FaceLabel&) const = default;
};

std::string to_string(const FaceLabel& label);

/// Maximal run of edges shared by two faces, ordered from one end to the other.
/// A closed intersection repeats its first vertex at the end.
struct BoundaryPath {
  FaceLabel first;
  FaceLabel second;
  std::vector<VertexId> vertices;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  bool closed() const { return vertices.size() > 1 && vertices.front() == vertices.back(); }
};

/// Triangle as an oriented face cycle starting at its smallest vertex.
Triangle canonical_triangle(Triangle t);

/// Block-and-hole polyhedron: a sphere-embedded graph whose faces are
/// partitioned into blocks, holes and triangulated discs. Values are
/// immutable; transforms build new ones.
class Polyhedron {
 public:
  Polyhedron() = default;

  /// Validates that the declared faces are exactly the faces of `topology`,
  /// with matching orientation. Canonicalises the partition.
  Polyhedron(TopologicalGraph topology, FacePartition partition, VertexId next_id = 0);

  /// Builds the rotation system from the declared faces.
  static Polyhedron from_partition(FacePartition partition, VertexId next_id = 0);

  const TopologicalGraph& topology() const { return topology_; }
  const FacePartition& partition() const { return partition_; }
  const std::vector<Block>& blocks() const { return partition_.blocks; }
  const std::vector<Hole>& holes() const { return partition_.holes; }
  const std::map<DiscId, TriangulatedDisc>& discs() const { return partition_.discs; }
  bool has_disc(DiscId d) const { return partition_.discs.count(d) != 0; }

  std::size_t vertex_count() const { return topology_.vertex_count(); }
  /// Surface edges plus block braces.
  std::size_t edge_count() const { return topology_.edge_count() + brace_count_; }
  /// Full bar graph: surface edges plus block braces.
  const Graph& graph() const { return graph_; }
  /// Edges of the embedding only (no braces).
  const Graph& surface_graph() const { return surface_; }

  /// Smallest identifier no vertex of this value or its ancestors has used.
  VertexId next_vertex_id() const { return next_id_; }

  /// Label of the face on the left of the directed edge u->v.
  FaceLabel label_left(VertexId u, VertexId v) const;
  /// Oriented face cycle carrying `label` (a disc yields its boundary).
  std::vector<std::pair<FaceLabel, Face>> labelled_faces() const;
  /// Partition classes incident to `v` (blocks, holes, discs).
  std::set<FaceLabel> labels_at(VertexId v) const;
  /// Vertices of a block/hole boundary or of a whole disc.
  std::set<VertexId> face_vertices(FaceLabel label) const;
  /// Boundary vertices of a block, hole or disc.
  std::set<VertexId> boundary_vertices(FaceLabel label) const;
  /// Boundary edges of a block, hole or disc (braces excluded).
  std::set<Edge> boundary_edges(FaceLabel label) const;

  /// Oriented boundary cycle of a disc.
  const Face& disc_boundary(DiscId d) const;
  const std::set<VertexId>& disc_interior(DiscId d) const;
  /// Every edge of the disc triangulation, boundary edges included.
  const std::set<Edge>& disc_edges(DiscId d) const;
  /// The disc whose interior contains `v`, if any.
  std::optional<DiscId> disc_containing_interior(VertexId v) const;

  /// Maximal shared boundary runs between two distinct partition classes.
  std::vector<BoundaryPath> shared_paths(FaceLabel a, FaceLabel b) const;
  /// Every pair of distinct discs sharing at least one edge, with their path(s).
  std::vector<BoundaryPath> disc_disc_paths() const;

  bool is_brace(Edge e) const { return braces_.count(e) != 0; }

  /// Structural equality (ignores next_vertex_id).
  bool operator==(const Polyhedron& other) const {
    return topology_ == other.topology_ && partition_ == other.partition_;
  }

 private:
  struct DiscInfo {
    Face boundary;
    std::set<VertexId> boundary_set;
    std::set<VertexId> interior;
    std::set<VertexId> vertices;
    std::set<Edge> edges;
  };

  void validate_and_index();

  TopologicalGraph topology_;
  FacePartition partition_;
  VertexId next_id_ = 0;
  std::size_t brace_count_ = 0;
  Graph graph_;
  Graph surface_;
  std::map<std::pair<VertexId, VertexId>, FaceLabel> half_edge_label_;
  std::map<DiscId, DiscInfo> disc_info_;
  std::set<Edge> braces_;
};

}  // namespace bhp
