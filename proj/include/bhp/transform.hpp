#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "bhp/graph.hpp"
#include "bhp/polyhedron.hpp"

namespace bhp {

/// Surface vertex split of x. `first` and `second` stay adjacent to both x
/// and the new vertex; `moved` is the contiguous counter-clockwise run of
/// x's neighbours strictly between them, handed over to the new vertex.
/// The classic two-edge split is the case where `moved` is everything else.
struct SplitSpec {
  VertexId x = -1;
  VertexId first = -1;
  VertexId second = -1;
  std::vector<VertexId> moved;
  VertexId new_id = -1;                // -1: next unused id
  std::optional<DiscId> first_disc;    // disc of triangle (x, first, new)
  std::optional<DiscId> second_disc;   // disc of triangle (x, new, second)
};

struct ContractionMove {
  VertexId keep = -1;
  VertexId removed = -1;
  VertexId first = -1;   // third vertex of the triangle left of removed->keep
  VertexId second = -1;  // third vertex of the triangle left of keep->removed
  std::vector<VertexId> run;  // removed's neighbours ccw from first to second, exclusive
  DiscId first_disc = -1;
  DiscId second_disc = -1;
  std::vector<VertexId> witness;  // common neighbours found when contracting

  bool operator==(const ContractionMove&) const = default;
};

Polyhedron vertex_split(const Polyhedron& p, const SplitSpec& spec);

/// Contracts {keep, removed} into `keep`. The edge must be long and lie in
/// two disc triangles.
Polyhedron contract_edge(const Polyhedron& p, VertexId keep, VertexId removed,
                         ContractionMove* move = nullptr);

SplitSpec invert(const ContractionMove& move);

/// Inserts a vertex on an edge shared by two different discs.
Polyhedron subdivide_boundary_edge(const Polyhedron& p, Edge e, VertexId new_id = -1);

/// Places a 3-valent vertex inside a triangle of disc d.
Polyhedron insert_interior_vertex(const Polyhedron& p, DiscId d, Triangle t, VertexId new_id = -1);

/// Replaces an interior edge of disc d by the opposite diagonal.
Polyhedron flip_edge(const Polyhedron& p, DiscId d, Edge e);

/// Blocks become holes; holes become blocks braced by the double fan.
Polyhedron swap_blocks_holes(const Polyhedron& p);

// ---- graph-level moves -------------------------------------------------

/// Vertex split on an abstract graph: x keeps a and b, which the new vertex
/// also joins; `moved` neighbours go to the new vertex.
struct GraphSplit {
  VertexId x = -1;
  VertexId a = -1;
  VertexId b = -1;
  std::set<VertexId> moved;
  VertexId new_id = -1;

  bool operator==(const GraphSplit&) const = default;
};

Graph graph_vertex_split(const Graph& g, const GraphSplit& s);

struct CycleSplitSpec {
  std::vector<VertexId> cycle;                       // C_k = (1..k)
  std::map<VertexId, std::set<VertexId>> selections;  // S_i as far endpoints
  std::map<VertexId, VertexId> duplicate;             // i -> i'; missing means i' = i
};

/// Cycle split G * (C_k, S) with the antiprism strip between C_k and C'_k.
Graph cycle_split(const Graph& g, const CycleSplitSpec& spec);

/// The vertex-split sequence that builds cycle_split(g, spec) from g.
std::vector<GraphSplit> cycle_split_sequence(const Graph& g, const CycleSplitSpec& spec);

struct PathSplitSpec {
  std::vector<VertexId> path;                         // 1..k, k >= 3
  std::map<VertexId, std::set<VertexId>> selections;  // S_i for interior vertices
  std::map<VertexId, VertexId> duplicate;             // interior i -> i'; missing: next ids
};

Graph path_split(const Graph& g, const PathSplitSpec& spec);
std::vector<GraphSplit> path_split_sequence(const Graph& g, const PathSplitSpec& spec);

Graph replay_splits(Graph g, const std::vector<GraphSplit>& seq);

}  // namespace bhp
