#include "doctest.h"

#include <random>

#include "bhp/error.hpp"
#include "bhp/generators.hpp"
#include "bhp/rigidity.hpp"

using namespace bhp;

namespace {

Graph complete(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge({i, j});
  return g;
}

}  // namespace

TEST_CASE("field arithmetic") {
  using namespace field;
  CHECK(mul(kPrime - 1, kPrime - 1) == 1);
  CHECK(add(kPrime - 1, 1) == 0);
  CHECK(sub(0, 1) == kPrime - 1);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    std::uint64_t a = 1 + rng() % (kPrime - 1);
    CHECK(mul(a, inv(a)) == 1);
  }
}

TEST_CASE("complete graphs") {
  CHECK(generic_rank(complete(3)) == 3);
  CHECK(generic_rank(complete(4)) == 6);
  CHECK(generic_rank(complete(5)) == 9);
  auto rep = analyze_rigidity(complete(5));
  CHECK(rep.idof == 0);
  CHECK_FALSE(rep.independent);
  CHECK(rep.redundant_edges.size() == 1);
  CHECK(analyze_rigidity(complete(4)).isostatic);
  CHECK_THROWS_AS(idof(complete(2)), PreconditionError);
}

TEST_CASE("triangulated spheres are isostatic") {
  for (int n : {4, 6, 12, 40}) {
    auto t = random_triangulated_sphere(n, 1000 + n);
    CHECK(t.graph().vertex_count() == static_cast<std::size_t>(n));
    CHECK(analyze_rigidity(t.graph()).isostatic);
  }
}

TEST_CASE("double banana is flexible despite the count") {
  Graph g = fixtures::double_banana();
  CHECK(g.vertex_count() == 8);
  CHECK(g.edge_count() == 18);
  auto rep = analyze_rigidity(g);
  CHECK(rep.rank == 17);
  CHECK(rep.idof == 1);
  CHECK(rep.redundant_edges.size() == 1);
}

TEST_CASE("edge independence and hole idof") {
  Graph g = complete(4);
  g.add_vertex(4);
  g.add_edge({0, 4});
  g.add_edge({1, 4});
  CHECK(edge_independent(g, {2, 4}));
  CHECK_THROWS_AS(edge_independent(g, {0, 4}), PreconditionError);
  g.add_edge({2, 4});
  CHECK_FALSE(edge_independent(g, {3, 4}));
  Graph path;
  path.add_edge({0, 1});
  path.add_edge({1, 2});
  path.add_edge({2, 3});
  CHECK(hole_idof(path, {0, 1, 2, 3}) == 3);
}

TEST_CASE("reports agree across seeds and jobs") {
  auto g = random_triangulated_sphere(30, 3).graph();
  KernelOptions a{3, 1, 1};
  KernelOptions b{3, 99, 3};
  CHECK(generic_rank(g, a) == generic_rank(g, b));
  auto rep = analyze_rigidity(g, b);
  CHECK(rep.trials == 3);
  CHECK(rep.agreeing == 3);
  CHECK_FALSE(rep.degenerate);
}
