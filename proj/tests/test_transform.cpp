#include "doctest.h"

#include <random>

#include "bhp/bhp_format.hpp"
#include "bhp/error.hpp"
#include "bhp/generators.hpp"
#include "bhp/predicates.hpp"
#include "bhp/rigidity.hpp"
#include "bhp/transform.hpp"

using namespace bhp;

namespace {

Polyhedron tetra_sphere() {
  FacePartition part;
  part.discs[0].triangles = {{0, 1, 2}};
  part.discs[1].triangles = {{0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
  return Polyhedron::from_partition(part);
}

}  // namespace

TEST_CASE("vertex split on K4 adds a vertex and three edges") {
  auto p = tetra_sphere();
  const auto ring = p.topology().rotation_at(3);
  SplitSpec s{3, ring[0], ring[2], {ring[1]}};
  auto q = vertex_split(p, s);
  CHECK(q.vertex_count() == 5);
  CHECK(q.edge_count() == 9);
  CHECK(analyze_rigidity(q.graph()).isostatic);
  SUBCASE("non-contiguous run is rejected") {
    SplitSpec bad{3, ring[0], ring[1], {ring[2]}};
    CHECK_THROWS_AS(vertex_split(p, bad), PreconditionError);
  }
}

TEST_CASE("contract and split are inverse") {
  auto base = make_tower(5);
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    auto p = expand(base, seed, {2, 4, 6});
    int checked = 0;
    for (const Edge& e : p.surface_graph().edges()) {
      if (!is_long_edge(p, e)) continue;
      ContractionMove mv;
      Polyhedron q = p;
      try {
        q = contract_edge(p, e.u, e.v, &mv);
      } catch (const PreconditionError&) {
        continue;
      }
      CHECK(q.vertex_count() + 1 == p.vertex_count());
      CHECK(vertex_split(q, invert(mv)) == p);
      CHECK(serialize_bhp(vertex_split(q, invert(mv))) == serialize_bhp(p));
      ++checked;
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("contraction refuses short edges") {
  auto p = fixtures::hexagon_expanded();
  for (const Edge& e : p.surface_graph().edges()) {
    if (is_long_edge(p, e)) continue;
    if (!p.label_left(e.u, e.v).is_disc() || !p.label_left(e.v, e.u).is_disc()) continue;
    CHECK_THROWS_WITH_AS(contract_edge(p, e.u, e.v), doctest::Contains("3|V'| - 7"),
                         PreconditionError);
  }
}

TEST_CASE("subdivide, insert and flip") {
  auto p = make_tower(4);
  const auto paths = p.disc_disc_paths();
  REQUIRE(!paths.empty());
  const Edge e(paths.front().vertices[0], paths.front().vertices[1]);
  auto q = subdivide_boundary_edge(p, e);
  CHECK(q.vertex_count() == p.vertex_count() + 1);
  CHECK(q.edge_count() == p.edge_count() + 3);
  CHECK(analyze_rigidity(q.graph()).isostatic);

  const auto& [d, disc] = *q.discs().begin();
  auto r = insert_interior_vertex(q, d, disc.triangles.front());
  CHECK(r.edge_count() == q.edge_count() + 3);
  CHECK(r.disc_interior(d).size() == q.disc_interior(d).size() + 1);

  const VertexId m = r.next_vertex_id() - 1;
  const VertexId a = disc.triangles.front()[0];
  CHECK_THROWS_AS(flip_edge(r, d, Edge(a, m)), PreconditionError);  // degree 3 end
  auto s = insert_interior_vertex(r, d, r.discs().at(d).triangles.front());
  CHECK(s.edge_count() == r.edge_count() + 3);
}

TEST_CASE("swapping twice restores blocks and holes") {
  auto p = make_cylinder(4, 4, 6);
  auto t = block_hole(p, 0);
  auto s = swap_blocks_holes(t);
  CHECK(s.blocks().size() == t.holes().size());
  CHECK(s.holes().size() == t.blocks().size());
  auto back = swap_blocks_holes(s);
  CHECK(back.blocks().size() == 1);
  CHECK(back.blocks()[0].boundary == t.blocks()[0].boundary);
}

TEST_CASE("graph vertex split") {
  Graph k4;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) k4.add_edge({i, j});
  auto g = graph_vertex_split(k4, {0, 1, 2, {3}, 4});
  CHECK(g.edge_count() == 9);
  CHECK(g.has_edge({3, 4}));
  CHECK_FALSE(g.has_edge({0, 3}));
  CHECK(g.has_edge({0, 4}));
  CHECK(analyze_rigidity(g).isostatic);
}

TEST_CASE("cycle split matches its split sequence") {
  auto t = random_triangulated_sphere(30, 5);
  const Graph g = t.graph();
  // a facial-free 4-cycle around two adjacent vertices' link
  std::mt19937_64 rng(11);
  int done = 0;
  for (int attempt = 0; attempt < 400 && done < 20; ++attempt) {
    const auto verts = g.vertices();
    const VertexId c = verts[rng() % verts.size()];
    auto link = t.rotation_at(c);
    if (link.size() < 4) continue;
    const std::size_t k = 3 + rng() % std::min<std::size_t>(4, link.size() - 2);
    std::vector<VertexId> cyc;
    // the centre plus a run of its link closes a cycle
    cyc.push_back(c);
    for (std::size_t i = 0; i < k - 1; ++i) cyc.push_back(link[i]);
    CycleSplitSpec spec{cyc, {}, {}};
    VertexId next = g.next_free_id();
    for (VertexId v : cyc) {
      if (rng() % 2) spec.duplicate[v] = next++;
    }
    if (spec.duplicate.empty()) spec.duplicate[cyc[0]] = next++;
    for (auto [v, _] : spec.duplicate) {
      for (VertexId w : g.neighbors(v)) {
        if (std::find(cyc.begin(), cyc.end(), w) != cyc.end()) continue;
        if (rng() % 3 == 0) spec.selections[v].insert(w);
      }
    }
    Graph direct = cycle_split(g, spec);
    Graph replay = replay_splits(g, cycle_split_sequence(g, spec));
    CHECK(direct.edges() == replay.edges());
    CHECK(direct.edge_count() == g.edge_count() + 3 * spec.duplicate.size());
    ++done;
  }
  CHECK(done == 20);
}

TEST_CASE("cycle split preconditions") {
  Graph g = random_triangulated_sphere(10, 1).graph();
  const auto link = random_triangulated_sphere(10, 1).rotation_at(0);
  std::vector<VertexId> cyc{0, link[0], link[1]};
  CHECK_THROWS_AS(cycle_split(g, {cyc, {}, {}}), PreconditionError);
  CHECK_THROWS_AS(cycle_split(g, {cyc, {{0, {link[0]}}}, {{0, 50}}}), PreconditionError);
  CHECK_THROWS_AS(cycle_split(g, {cyc, {{link[0], {link[2]}}}, {{0, 50}}}), PreconditionError);
}

TEST_CASE("path split") {
  auto t = random_triangulated_sphere(20, 8);
  const Graph g = t.graph();
  const auto link = t.rotation_at(0);
  REQUIRE(link.size() >= 4);
  SUBCASE("length two path split is a vertex split") {
    const VertexId a = link[0];
    const VertexId b = link[2];
    if (!g.has_edge({a, b})) {
      std::set<VertexId> sel;
      for (VertexId w : g.neighbors(0)) {
        if (w != a && w != b && w != link[1]) sel.insert(w);
      }
      PathSplitSpec spec{{a, 0, b}, {{0, {link[1]}}}, {{0, 99}}};
      Graph ps = path_split(g, spec);
      Graph vsplit = graph_vertex_split(g, {0, a, b, {link[1]}, 99});
      CHECK(ps.edges() == vsplit.edges());
    }
  }
  SUBCASE("longer paths replay") {
    std::vector<VertexId> path{link[0], 0, link[2]};
    for (VertexId w : g.neighbors(link[2])) {
      if (w != 0 && !g.neighbors(0).count(w) && !g.has_edge({link[0], w})) {
        path.push_back(w);
        break;
      }
    }
    if (path.size() == 4 && !g.has_edge({path.front(), path.back()})) {
      PathSplitSpec spec{path, {}, {}};
      CHECK(path_split(g, spec).edges() == replay_splits(g, path_split_sequence(g, spec)).edges());
      CHECK(analyze_rigidity(path_split(g, spec)).isostatic);
    }
  }
  CHECK_THROWS_AS(path_split(g, {{link[0], 0, link[1]}, {}, {}}), PreconditionError);
}

TEST_CASE("predicates on small cases") {
  auto p = tetra_sphere();
  for (const Edge& e : p.surface_graph().edges()) CHECK(is_long_edge(p, e));
  auto h = fixtures::hexagon_base();
  CHECK(check_well_designed(h).ok());
  auto x = fixtures::hexagon_expanded();
  auto rep = check_well_designed(x);
  CHECK(rep.coverage.pass);
}
