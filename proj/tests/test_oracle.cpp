#include "doctest.h"

#include <random>

#include "bhp/counting.hpp"
#include "bhp/rigidity.hpp"
#include "corpus.hpp"
#include "rational_oracle.hpp"

TEST_CASE("rational elimination on known frameworks") {
  std::mt19937_64 rng(3);
  for (int n = 3; n <= 6; ++n) {
    const auto g = corpus::complete(n);
    const auto x = oracle::integer_config(g, rng);
    CHECK(oracle::rational_rank(g, x) == static_cast<std::size_t>(3 * n - 6));
  }
  bhp::Graph flat;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) flat.add_edge({i, j});
  std::map<bhp::VertexId, oracle::IntPoint> coplanar{{0, {0, 0, 0}}, {1, {1, 0, 0}}, {2, {0, 1, 0}}, {3, {1, 1, 0}}};
  CHECK(oracle::rational_rank(flat, coplanar) == 5);
  CHECK(oracle::modular_rank(flat, coplanar) == 5);
}

TEST_CASE("modular kernel agrees with rational elimination on a corpus sample") {
  std::mt19937_64 rng(4);
  const auto graphs = corpus::small_graphs(6);
  REQUIRE(graphs.size() > 100);
  for (std::size_t i = 0; i < graphs.size(); i += 7) {
    const auto& g = graphs[i];
    const auto x = oracle::integer_config(g, rng);
    const auto q = oracle::rational_rank(g, x);
    CHECK(q == oracle::modular_rank(g, x));
    CHECK(q == bhp::generic_rank(g));
  }
}

TEST_CASE("pebble game agrees with subsets on the corpus") {
  const auto graphs = corpus::small_graphs(8);
  for (std::size_t i = 0; i < graphs.size(); i += 5) CHECK(bhp::sparsity_check(graphs[i]).sparse == bhp::sparse_by_subsets(graphs[i]));
}
