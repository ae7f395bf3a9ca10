#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace bhp {

/// Vertex identifiers are stable integers; transforms never reuse one.
using VertexId = int;

/// Undirected edge, always stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool has(VertexId x) const { return u == x || v == x; }
  VertexId other(VertexId x) const { return x == u ? v : u; }

  auto operator<=>(const Edge&) const = default;
};

std::string to_string(const Edge& e);

/// Simple undirected graph (no loops, no parallel edges).
class Graph {
 public:
  Graph() = default;
  Graph(const std::vector<VertexId>& vertices, const std::vector<Edge>& edges);

  void add_vertex(VertexId v);
  /// Adds both endpoints if needed; throws on loops and parallel edges.
  void add_edge(Edge e);
  void remove_edge(Edge e);
  void remove_vertex(VertexId v);

  bool has_vertex(VertexId v) const { return adj_.count(v) != 0; }
  bool has_edge(Edge e) const;
  const std::set<VertexId>& neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  std::vector<VertexId> vertices() const;
  std::vector<Edge> edges() const;
  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  /// Largest identifier in use plus one (0 for the empty graph).
  VertexId next_free_id() const;

  /// Subgraph induced on `keep`.
  Graph induced(const std::set<VertexId>& keep) const;

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

 private:
  std::map<VertexId, std::set<VertexId>> adj_;
  std::size_t edge_count_ = 0;
};

/// Connected components of `g` after deleting `removed`.
std::vector<std::set<VertexId>> components_without(const Graph& g,
                                                   const std::set<VertexId>& removed);

bool is_connected(const Graph& g);

/// Brute-force check over all vertex pairs; fine for desk-scale inputs.
bool is_three_connected(const Graph& g);

}  // namespace bhp
