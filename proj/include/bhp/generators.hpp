#pragma once

#include <cstdint>
#include <vector>

#include "bhp/graph.hpp"
#include "bhp/polyhedron.hpp"

namespace bhp {

/// Fan from f[0] to f[2..n-2] plus fan from f[1] to f[3..n-1]: 2n-6 braces.
std::vector<Edge> double_fan_braces(const Face& boundary);

/// Double fan from the first rotation of `boundary` whose braces avoid the
/// edges of `g`. Throws if every rotation collides.
std::vector<Edge> double_fan_braces_avoiding(const Graph& g, const Face& boundary);

/// Block on the cycle 0..n-1 braced by the double fan.
Block double_fan_block(int n);

/// Cylinder C(m,k,n): holes H1 (m-gon, hole 0) and H2 (n-gon, hole 1)
/// joined by a triangulated tube whose narrowest ring has k vertices. The
/// tube is cut into k discs along k vertex-disjoint H1-H2 paths.
Polyhedron make_cylinder(int m, int k, int n);

/// Turns hole `index` into a block braced by the double fan.
Polyhedron block_hole(const Polyhedron& p, int index);

/// Proper n-tower: C(n,n,n) with H1 blocked.
Polyhedron make_tower(int n);

/// C(n,k,n) with H1 blocked; k < n gives a k-waist between block and hole.
Polyhedron make_defective_tower(int n, int k);

/// Triangulated sphere grown from K4 by face insertions and random flips.
TopologicalGraph random_triangulated_sphere(int n, std::uint64_t seed);

/// One triangle as disc 0, the rest of the sphere as disc 1.
Polyhedron sphere_polyhedron(const TopologicalGraph& t);

struct ExpandOps {
  int subdivisions = 0;
  int insertions = 0;
  int flips = 0;
};

/// Seeded expansion: subdivisions, then insertions, then flips.
Polyhedron expand(const Polyhedron& p, std::uint64_t seed, const ExpandOps& ops);

namespace fixtures {

/// Two braced triangles hinged at a and b; 8 vertices, 18 edges.
Graph double_banana();

/// Sphere with two braced 4-blocks and two 4-holes whose bar graph is the
/// double banana.
Polyhedron twin_block_sphere();

/// Hexagonal hole with three 4-blocks around a centre vertex.
Polyhedron hexagon_base();

/// hexagon_base with three vertex splits whose new triangles form discs.
Polyhedron hexagon_expanded();

}  // namespace fixtures

}  // namespace bhp
