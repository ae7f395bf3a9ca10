#include "bhp/graph.hpp"

#include <algorithm>
#include <deque>

#include "bhp/error.hpp"

namespace bhp {

std::string to_string(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

Graph::Graph(const std::vector<VertexId>& vertices, const std::vector<Edge>& edges) {
  for (VertexId v : vertices) add_vertex(v);
  for (const Edge& e : edges) add_edge(e);
}

void Graph::add_vertex(VertexId v) { adj_[v]; }

void Graph::add_edge(Edge e) {
  if (e.u == e.v) throw PreconditionError("self-loop at vertex " + std::to_string(e.u));
  auto& nu = adj_[e.u];
  if (!nu.insert(e.v).second) throw PreconditionError("parallel edge " + to_string(e));
  adj_[e.v].insert(e.u);
  ++edge_count_;
}

void Graph::remove_edge(Edge e) {
  auto it = adj_.find(e.u);
  if (it == adj_.end() || it->second.erase(e.v) == 0) {
    throw PreconditionError("edge " + to_string(e) + " not in graph");
  }
  adj_[e.v].erase(e.u);
  --edge_count_;
}

void Graph::remove_vertex(VertexId v) {
  auto it = adj_.find(v);
  if (it == adj_.end()) return;
  for (VertexId w : it->second) adj_[w].erase(v);
  edge_count_ -= it->second.size();
  adj_.erase(it);
}

bool Graph::has_edge(Edge e) const {
  auto it = adj_.find(e.u);
  return it != adj_.end() && it->second.count(e.v) != 0;
}

const std::set<VertexId>& Graph::neighbors(VertexId v) const {
  static const std::set<VertexId> kEmpty;
  auto it = adj_.find(v);
  return it == adj_.end() ? kEmpty : it->second;
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(adj_.size());
  for (const auto& [v, _] : adj_) out.push_back(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (const auto& [v, nbrs] : adj_) {
    for (VertexId w : nbrs) {
      if (v < w) out.emplace_back(v, w);
    }
  }
  return out;
}

VertexId Graph::next_free_id() const { return adj_.empty() ? 0 : adj_.rbegin()->first + 1; }

Graph Graph::induced(const std::set<VertexId>& keep) const {
  Graph out;
  for (VertexId v : keep) {
    if (has_vertex(v)) out.add_vertex(v);
  }
  for (const Edge& e : edges()) {
    if (keep.count(e.u) && keep.count(e.v)) out.add_edge(e);
  }
  return out;
}

std::vector<std::set<VertexId>> components_without(const Graph& g,
                                                   const std::set<VertexId>& removed) {
  std::vector<std::set<VertexId>> out;
  std::set<VertexId> seen(removed);
  for (VertexId start : g.vertices()) {
    if (seen.count(start)) continue;
    std::set<VertexId> comp;
    std::deque<VertexId> queue{start};
    seen.insert(start);
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      comp.insert(v);
      for (VertexId w : g.neighbors(v)) {
        if (seen.insert(w).second) queue.push_back(w);
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return components_without(g, {}).size() <= 1; }

bool is_three_connected(const Graph& g) {
  if (g.vertex_count() < 4) return false;
  if (!is_connected(g)) return false;
  const auto verts = g.vertices();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (components_without(g, {verts[i], verts[j]}).size() > 1) return false;
    }
  }
  return true;
}

}  // namespace bhp
