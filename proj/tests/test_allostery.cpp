#include "doctest.h"

#include "bhp/allostery.hpp"
#include "bhp/error.hpp"
#include "bhp/generators.hpp"

using namespace bhp;

namespace {

std::vector<long> column(const TransmissionTrace& t, long TransmissionStep::*f) {
  std::vector<long> out;
  for (const auto& s : t.steps) out.push_back(s.*f);
  return out;
}

}  // namespace

TEST_CASE("block fill order") {
  CHECK(block_fill_order({0, 1, 2, 3}).size() == 2);
  CHECK(block_fill_order({0, 1, 2, 3, 4}).size() == 4);
  const auto eight = block_fill_order({0, 1, 2, 3, 4, 5, 6, 7});
  CHECK(eight.size() == 10);
  Graph ring;
  for (int i = 0; i < 8; ++i) ring.add_edge({i, (i + 1) % 8});
  CHECK(idof(ring) == 2 * (8 - 3));
  for (const Edge& e : eight) {
    CHECK(edge_independent(ring, e));
    ring.add_edge(e);
  }
  CHECK(idof(ring) == 0);
}

TEST_CASE("C(4,4,4) transmits at every step") {
  const auto t = run_transmission(make_cylinder(4, 4, 4));
  CHECK(column(t, &TransmissionStep::idof) == std::vector<long>{2, 1, 0});
  CHECK(column(t, &TransmissionStep::other_idof) == std::vector<long>{2, 1, 0});
  CHECK(column(t, &TransmissionStep::target_idof) == std::vector<long>{2, 1, 0});
  CHECK(t.transmitting_steps() == std::vector<int>{1, 2});
}

TEST_CASE("C(8,4,4) profile") {
  const auto t = run_transmission(make_cylinder(8, 4, 4));
  REQUIRE(t.steps.size() == 11);
  CHECK(t.steps[0].idof == 6);
  for (int i = 0; i <= 4; ++i) CHECK(t.steps[i].other_idof == 2);
  CHECK(t.steps[6].other_idof == 0);
  for (int i = 1; i <= 6; ++i) CHECK(t.steps[i].independent);
  for (int i = 7; i <= 10; ++i) CHECK_FALSE(t.steps[i].independent);

  TransmissionOptions stop;
  stop.stop_at_redundant = true;
  CHECK(run_transmission(make_cylinder(8, 4, 4), stop).steps.size() == 8);
}

TEST_CASE("C(4,4,8) keeps m - n idof after the block") {
  const auto t = run_transmission(make_cylinder(4, 4, 8));
  CHECK(t.steps.back().idof == 4);
  CHECK(t.steps.back().other_idof == 4);
}

TEST_CASE("idof drops exactly on independent additions") {
  for (auto [m, k, n] : {std::array{6, 4, 5}, {7, 3, 7}, {5, 5, 8}}) {
    const auto t = run_transmission(make_cylinder(m, k, n));
    for (std::size_t i = 1; i < t.steps.size(); ++i) {
      CHECK(t.steps[i].idof == t.steps[i - 1].idof - (t.steps[i].independent ? 1 : 0));
      CHECK(t.steps[i].other_idof <= t.steps[i - 1].other_idof);
    }
  }
}

TEST_CASE("full block on C(n,n,n) is isostatic") {
  for (int n = 4; n <= 7; ++n) {
    const auto t = run_transmission(make_cylinder(n, n, n));
    CHECK(t.steps.back().idof == 0);
    for (std::size_t i = 1; i < t.steps.size(); ++i) CHECK(t.steps[i].independent);
  }
}

TEST_CASE("waist decomposition") {
  SUBCASE("C(8,4,8)") {
    const auto r = waist_decomposition_check(make_cylinder(8, 4, 8));
    CHECK(r.applicable);
    CHECK(r.k == 4);
    CHECK(r.final_other_idof == 4);
    CHECK(r.expected_other_idof == 4);
    CHECK(r.side_rigid_after == 6);
    CHECK(r.component_rigid_after == 6);
    CHECK(r.measured_window == std::pair(5, 6));
    CHECK(r.formula_agrees);
    CHECK_FALSE(r.phrase_agrees);
    CHECK(r.to_text().find("warning") != std::string::npos);
  }
  SUBCASE("three-waist has nothing to transmit") {
    const auto r = waist_decomposition_check(make_cylinder(8, 3, 8));
    CHECK(r.applicable);
    CHECK_FALSE(r.measured_window);
    CHECK(r.formula_agrees);
    CHECK(r.final_other_idof == 5);
  }
  SUBCASE("no narrow waist") {
    CHECK_FALSE(waist_decomposition_check(make_cylinder(4, 4, 4)).applicable);
  }
}

TEST_CASE("explicit orders and preconditions") {
  const auto c = make_cylinder(5, 4, 5);
  TransmissionOptions o;
  o.order = {Edge(0, 2)};
  CHECK(run_transmission(c, o).steps.size() == 2);
  o.order = {Edge(0, 7)};
  CHECK_THROWS_AS(run_transmission(c, o), PreconditionError);
  o.order.clear();
  o.target_hole = 1;
  const auto t = run_transmission(c, o);
  CHECK(t.target_size == 5);
  CHECK_THROWS_AS(run_transmission(make_tower(4)), PreconditionError);
}
