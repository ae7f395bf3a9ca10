#include "doctest.h"

#include <random>

#include "bhp/counting.hpp"
#include "bhp/error.hpp"
#include "bhp/generators.hpp"
#include "bhp/rigidity.hpp"

using namespace bhp;

namespace {

Graph complete(int n) {
  Graph g;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge({i, j});
  return g;
}

Graph random_graph(int n, int m, std::mt19937_64& rng) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(i);
  for (int tries = 0; static_cast<int>(g.edge_count()) < m && tries < 1000; ++tries) {
    int a = static_cast<int>(rng() % n);
    int b = static_cast<int>(rng() % n);
    if (a != b && !g.has_edge({a, b})) g.add_edge({a, b});
  }
  return g;
}

}  // namespace

TEST_CASE("balance") {
  auto t = make_tower(4);
  CHECK(balance_check(t).balanced());
  CHECK(balance_check(t).block_sum == 1);
  auto h = fixtures::hexagon_base();
  CHECK(balance_check(h).block_sum == 3);
  CHECK(balance_check(h).hole_sum == 3);
  auto c = make_cylinder(5, 4, 4);
  auto b = block_hole(c, 0);
  CHECK_FALSE(balance_check(b).balanced());
}

TEST_CASE("sparsity") {
  CHECK(sparsity_check(complete(4)).sparse);
  auto k5 = sparsity_check(complete(5));
  CHECK_FALSE(k5.sparse);
  CHECK(k5.blocked_edge.has_value());
  CHECK(k5.violating_subset.size() >= 3);
  CHECK(sparsity_check(fixtures::double_banana()).sparse);
  CHECK(generic_rank(fixtures::double_banana()) == 17);
  for (int n = 3; n <= 8; ++n) CHECK(sparsity_check(make_tower(n).graph()).sparse);
}

TEST_CASE("pebble game agrees with subset enumeration") {
  std::mt19937_64 rng(2024);
  int failures = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 7);
    const int m = static_cast<int>(rng() % (3 * n));
    Graph g = random_graph(n, m, rng);
    auto r = sparsity_check(g);
    CHECK(r.sparse == sparse_by_subsets(g));
    if (!r.sparse) {
      ++failures;
      CHECK(generic_rank(g) < g.edge_count());
      const auto sub = g.induced(r.violating_subset);
      CHECK(sub.edge_count() + 1 > 3 * sub.vertex_count() - 6);
    }
  }
  CHECK(failures > 20);
}

TEST_CASE("separation") {
  CHECK(separation_check(make_tower(5)).ok());
  CHECK(separation_check(make_cylinder(6, 4, 5)).ok());
  auto twin = separation_check(fixtures::twin_block_sphere());
  CHECK_FALSE(twin.hole_hole.empty());
}

TEST_CASE("menger paths") {
  for (int n = 3; n <= 6; ++n) {
    auto t = make_tower(n);
    CHECK(menger_paths(t, FaceLabel::block(0), FaceLabel::hole(0)) == n);
  }
  for (int m = 3; m <= 8; ++m)
    for (int n = 3; n <= 8; ++n)
      for (int k = 3; k <= std::min(m, n); ++k) {
        auto c = make_cylinder(m, k, n);
        CHECK(menger_paths(c, FaceLabel::hole(0), FaceLabel::hole(1)) == k);
      }
  auto d = make_defective_tower(4, 3);
  CHECK(menger_paths(d, FaceLabel::block(0), FaceLabel::hole(0)) == 3);
  CHECK_THROWS_AS(menger_paths(d, FaceLabel::hole(0), FaceLabel::hole(0)), PreconditionError);
}

TEST_CASE("cut cycles") {
  SUBCASE("defective tower violates at c = 3") {
    auto d = make_defective_tower(5, 3);
    auto r = cut_cycle_check(d, 3);
    REQUIRE_FALSE(r.violations.empty());
    CHECK(r.violations.front().c() == 3);
    CHECK(std::max(r.violations.front().side_a, r.violations.front().side_b) == 2);
  }
  SUBCASE("proper towers have no short violations") {
    for (int n = 3; n <= 6; ++n) {
      auto r = cut_cycle_check(make_tower(n), 5);
      CHECK(r.violations.empty());
      CHECK(r.cycles_checked > 0);
    }
  }
  SUBCASE("face cycles are satisfied with equality") {
    auto t = make_tower(6);
    auto r = cut_cycle_check(t, 6, true);
    CHECK(r.violations.empty());
  }
  SUBCASE("edge-only cycles mirror the Menger bound") {
    for (int n = 4; n <= 6; ++n) {
      for (int k = 3; k < n; ++k) {
        auto d = make_defective_tower(n, k);
        auto r = cut_cycle_check(d, n - 1, true);
        CHECK_FALSE(r.violations.empty());
        int smallest = 100;
        for (const auto& v : r.violations) smallest = std::min(smallest, v.c());
        CHECK(smallest == k);
      }
      CHECK(cut_cycle_check(make_tower(n), n - 1, true).violations.empty());
    }
  }
  CHECK_THROWS_AS(cut_cycle_check(make_tower(4), 13), PreconditionError);
}
