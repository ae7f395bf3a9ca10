#include "doctest.h"

#include "bhp/bhp_format.hpp"
#include "bhp/generators.hpp"
#include "bhp/predicates.hpp"
#include "bhp/rigidity.hpp"

using namespace bhp;

TEST_CASE("double fan braces") {
  auto b = double_fan_braces({0, 1, 2, 3, 4, 5});
  CHECK(b.size() == 6);
  auto blk = double_fan_block(7);
  CHECK(blk.braces.size() == 8);
}

TEST_CASE("cylinder counts") {
  for (auto [m, k, n] : {std::array{4, 4, 4}, {4, 4, 8}, {8, 4, 4}, {8, 4, 8}, {5, 3, 6}}) {
    CAPTURE(m);
    CAPTURE(k);
    CAPTURE(n);
    auto p = make_cylinder(m, k, n);
    CHECK(p.holes().size() == 2);
    CHECK(p.blocks().empty());
    CHECK(p.discs().size() == static_cast<std::size_t>(k));
    CHECK(p.holes()[0].boundary.size() == static_cast<std::size_t>(m));
    CHECK(p.holes()[1].boundary.size() == static_cast<std::size_t>(n));
    CHECK(idof(p.graph()) == m + n - 6);
    CHECK(check_well_designed(p).ok());
    CHECK(parse_bhp(serialize_bhp(p)) == p);
  }
}

TEST_CASE("towers") {
  for (int n = 3; n <= 8; ++n) {
    auto t = make_tower(n);
    CHECK(t.blocks().size() == 1);
    CHECK(t.holes().size() == 1);
    CHECK(analyze_rigidity(t.graph()).isostatic);
  }
  auto bad = make_defective_tower(6, 3);
  CHECK(idof(bad.graph()) > 0);
}

TEST_CASE("block_hole blocks a hole") {
  auto p = block_hole(make_cylinder(4, 4, 8), 0);
  CHECK(p.blocks().size() == 1);
  CHECK(p.holes().size() == 1);
  auto rep = analyze_rigidity(p.graph());
  CHECK(rep.idof == 4);
  CHECK(rep.independent);
}

TEST_CASE("random spheres are deterministic") {
  auto a = random_triangulated_sphere(50, 42);
  auto b = random_triangulated_sphere(50, 42);
  CHECK(a == b);
  auto p = sphere_polyhedron(a);
  CHECK(p.discs().size() == 2);
  CHECK(p.graph().edge_count() == 3 * 50 - 6);
}

TEST_CASE("expand keeps the polyhedron valid and rigidity unchanged") {
  auto base = make_tower(5);
  const long before = idof(base.graph());
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto e = expand(base, seed, {3, 3, 5});
    CHECK(e.vertex_count() == base.vertex_count() + 6);
    CHECK(parse_bhp(serialize_bhp(e)) == e);
    CHECK(idof(e.graph()) == before);
    CHECK(expand(base, seed, {3, 3, 5}) == e);
  }
}

TEST_CASE("fixtures") {
  auto s = fixtures::twin_block_sphere();
  CHECK(s.graph().vertex_count() == 8);
  CHECK(s.graph().edge_count() == 18);
  CHECK(analyze_rigidity(s.graph()).rank == 17);
  auto h = fixtures::hexagon_base();
  auto x = fixtures::hexagon_expanded();
  CHECK(x.vertex_count() == h.vertex_count() + 3);
  CHECK(x.discs().size() == 6);
}
