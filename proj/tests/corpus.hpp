#pragma once

#include <random>
#include <vector>

#include "bhp/generators.hpp"
#include "bhp/graph.hpp"

namespace corpus {

inline bhp::Graph complete(int n) {
  bhp::Graph g;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge({i, j});
  return g;
}

inline bhp::Graph random_graph(int n, int m, std::mt19937_64& rng) {
  bhp::Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(i);
  for (int tries = 0; static_cast<int>(g.edge_count()) < m && tries < 1000; ++tries) {
    const int a = static_cast<int>(rng() % n);
    const int b = static_cast<int>(rng() % n);
    if (a != b && !g.has_edge({a, b})) g.add_edge({a, b});
  }
  return g;
}

/// Bar graphs of the fixtures and generators used across the test suite,
/// plus every induced subgraph on at least three vertices and every
/// single-edge deletion, restricted to at most `max_vertices` vertices.
inline std::vector<bhp::Graph> small_graphs(std::size_t max_vertices) {
  std::vector<bhp::Graph> seeds;
  for (int n = 3; n <= 9; ++n) seeds.push_back(complete(n));
  for (int n = 3; n <= 5; ++n) seeds.push_back(bhp::make_tower(n).graph());
  for (int n = 3; n <= 5; ++n) seeds.push_back(bhp::make_cylinder(n, n, n).graph());
  seeds.push_back(bhp::make_cylinder(4, 3, 4).graph());
  seeds.push_back(bhp::fixtures::double_banana());
  seeds.push_back(bhp::fixtures::twin_block_sphere().graph());
  for (int n = 4; n <= 9; ++n)
    for (std::uint64_t s = 1; s <= 3; ++s) seeds.push_back(bhp::random_triangulated_sphere(n, s).graph());

  std::vector<bhp::Graph> out;
  auto keep = [&](const bhp::Graph& g) {
    if (g.vertex_count() >= 3 && g.vertex_count() <= max_vertices) out.push_back(g);
  };
  for (const auto& g : seeds) {
    const auto verts = g.vertices();
    const std::size_t n = verts.size();
    if (n > 12) continue;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
      if (size < 3 || size > max_vertices) continue;
      std::set<bhp::VertexId> sub;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) sub.insert(verts[i]);
      keep(g.induced(sub));
    }
    if (n <= max_vertices) {
      for (const auto& e : g.edges()) {
        bhp::Graph h = g;
        h.remove_edge(e);
        keep(h);
      }
    }
  }
  return out;
}

}  // namespace corpus
