#include "doctest.h"

#include "bhp/bhp_format.hpp"
#include "bhp/error.hpp"
#include "bhp/polyhedron.hpp"
#include "bhp/topology.hpp"

using namespace bhp;

namespace {

Rotation octahedron_rotation() {
  // +x 0, -x 1, +y 2, -y 3, +z 4, -z 5
  return {{0, {2, 4, 3, 5}}, {1, {4, 2, 5, 3}}, {2, {4, 0, 5, 1}},
          {3, {0, 4, 1, 5}}, {4, {0, 2, 1, 3}}, {5, {2, 0, 3, 1}}};
}

std::vector<Face> tetra_faces() { return {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}}; }

std::vector<Face> cube_faces() {
  // bit 0 = x, bit 1 = y, bit 2 = z
  return {{0, 2, 3, 1}, {4, 5, 7, 6}, {0, 1, 5, 4}, {2, 6, 7, 3}, {0, 4, 6, 2}, {1, 3, 7, 5}};
}

Polyhedron tetra_split() {
  FacePartition part;
  part.discs[0].triangles = {{0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
  part.discs[1].triangles = {{0, 1, 2}};
  return Polyhedron::from_partition(part);
}

}  // namespace

TEST_CASE("face tracing on platonic embeddings") {
  SUBCASE("tetrahedron") {
    auto t = TopologicalGraph::from_faces(tetra_faces());
    CHECK(t.faces().size() == 4);
    CHECK(derive_faces(t.rotation()).size() == 4);
    CHECK(t.edge_count() == 6);
  }
  SUBCASE("octahedron") {
    auto faces = derive_faces(octahedron_rotation());
    CHECK(faces.size() == 8);
    for (const auto& f : faces) CHECK(f.size() == 3);
  }
  SUBCASE("cube") {
    auto t = TopologicalGraph::from_faces(cube_faces());
    CHECK(t.faces().size() == 6);
    for (const auto& f : t.faces()) CHECK(f.size() == 4);
    CHECK(TopologicalGraph(t.rotation()) == t);
  }
  SUBCASE("every directed edge used once") {
    auto faces = derive_faces(octahedron_rotation());
    std::set<std::pair<int, int>> seen;
    for (const auto& f : faces) {
      for (std::size_t i = 0; i < f.size(); ++i) {
        CHECK(seen.insert({f[i], f[(i + 1) % f.size()]}).second);
      }
    }
    CHECK(seen.size() == 24);
  }
}

TEST_CASE("inconsistent rotations are rejected") {
  auto r = octahedron_rotation();
  std::swap(r[0][0], r[0][1]);
  CHECK_THROWS_AS(derive_faces(r), PreconditionError);
  Rotation asym = {{0, {1, 2}}, {1, {0}}, {2, {1}}};
  CHECK_THROWS_AS(derive_faces(asym), PreconditionError);
}

TEST_CASE("face builder reproduces the rotation") {
  auto t = TopologicalGraph(octahedron_rotation());
  auto back = TopologicalGraph::from_faces(t.faces());
  CHECK(back == t);
}

TEST_CASE("graph connectivity helpers") {
  auto g = TopologicalGraph::from_faces(cube_faces()).graph();
  CHECK(is_three_connected(g));
  Graph path({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}});
  CHECK_FALSE(is_three_connected(path));
  CHECK(components_without(path, {1}).size() == 2);
}

TEST_CASE("polyhedron partition validation") {
  auto p = tetra_split();
  CHECK(p.disc_boundary(0).size() == 3);
  CHECK(p.disc_interior(0) == std::set<VertexId>{3});
  CHECK(p.disc_interior(1).empty());
  CHECK(p.label_left(0, 1) == FaceLabel::disc(1));
  CHECK(p.label_left(1, 0) == FaceLabel::disc(0));
  auto paths = p.shared_paths(FaceLabel::disc(0), FaceLabel::disc(1));
  REQUIRE(paths.size() == 1);
  CHECK(paths[0].closed());
  CHECK(paths[0].length() == 3);

  FacePartition missing;
  missing.discs[0].triangles = {{0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
  auto topo = TopologicalGraph::from_faces(tetra_faces());
  CHECK_THROWS_AS(Polyhedron(topo, missing), PreconditionError);

  FacePartition braced;
  braced.blocks.push_back({{0, 1, 2, 3, 4}, {{0, 2}}});
  CHECK_THROWS_AS(Polyhedron::from_partition(braced), PreconditionError);
}

TEST_CASE("cube with a block and a hole") {
  FacePartition part;
  part.blocks.push_back({{0, 2, 3, 1}, {{0, 3}, {1, 2}}});
  part.holes.push_back({{4, 5, 7, 6}});
  part.discs[0].triangles = {{0, 1, 5}, {0, 5, 4}, {2, 6, 7}, {2, 7, 3},
                             {0, 4, 6}, {0, 6, 2}, {1, 3, 7}, {1, 7, 5}};
  // the four side quads form an annulus, not a disc
  CHECK_THROWS_AS(Polyhedron::from_partition(part), PreconditionError);
  part.discs[0].triangles = {{0, 1, 5}, {0, 5, 4}, {0, 4, 6}, {0, 6, 2}};
  part.discs[7].triangles = {{2, 6, 7}, {2, 7, 3}, {1, 3, 7}, {1, 7, 5}};
  auto p = Polyhedron::from_partition(part);
  CHECK(p.disc_disc_paths().size() == 2);
  CHECK(p.vertex_count() == 8);
  CHECK(p.edge_count() == 18);
  CHECK(p.graph().edge_count() == 18);
  CHECK(p.is_brace(Edge(0, 3)));
  CHECK(p.labels_at(0).size() == 2);
  auto text = serialize_bhp(p);
  auto q = parse_bhp(text);
  CHECK(q == p);
  CHECK(serialize_bhp(q) == text);
}

TEST_CASE("BHP round trip and diagnostics") {
  auto p = tetra_split();
  const auto text = serialize_bhp(p);
  CHECK(parse_bhp(text) == p);
  CHECK(serialize_bhp(parse_bhp(text)) == text);

  SUBCASE("comments and reversed cycles are accepted") {
    std::string t = "# tetra\n" + text;
    auto pos = t.find("triangle 0 1 2");
    REQUIRE(pos != std::string::npos);
    t.replace(pos, 14, "triangle 2 1 0  # mirrored");
    CHECK(parse_bhp(t) == p);
  }
  SUBCASE("bad token reports its line") {
    std::string t = text;
    auto pos = t.find("rotation\n");
    t.insert(pos + 9, "0 : 1 x 3\n");
    try {
      parse_bhp(t);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() > 3);
    }
  }
  SUBCASE("missing end") {
    CHECK_THROWS_AS(parse_bhp(text.substr(0, text.size() - 4)), ParseError);
  }
  SUBCASE("non-face triangle") {
    std::string t = text;
    auto pos = t.find("triangle 0 1 2");
    t.replace(pos, 14, "triangle 0 1 3");
    CHECK_THROWS_AS(parse_bhp(t), ParseError);
  }
  CHECK(hex64(fnv1a64("")) == "cbf29ce484222325");
  CHECK(hex64(fnv1a64("a")) == "af63dc4c8601ec8c");
}
