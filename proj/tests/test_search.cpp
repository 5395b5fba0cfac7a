#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "satgraph/constructions.hpp"
#include "satgraph/search.hpp"
#include "satgraph/verify.hpp"

using namespace satgraph;

TEST_CASE("greedy saturation from the empty host(3,2)") {
  Host h(3, 2);
  Subgraph g = greedy_saturate(Subgraph(h), 3);
  // canonical order fills the V1 star first and ends at the 8-edge
  // bipartite maximum
  CHECK(g.edge_count() == 8);
  CHECK(verify_saturated(g, 3).is_saturated);
  CHECK(oracle::is_saturated(g, 3));
}

TEST_CASE("greedy fixed points") {
  auto art = build_g1(3, 3);
  Subgraph out = greedy_saturate(art.graph, 3);
  CHECK(out == art.graph);
}

TEST_CASE("greedy contract errors") {
  Host h(3, 2);
  CHECK_THROWS_AS(greedy_saturate(Subgraph::complete(h), 3), ContractError);

  Subgraph empty(h);
  std::vector<Edge> bogus = {Edge(0, 2)};
  CHECK_THROWS_AS(greedy_saturate(empty, 3, bogus), ContractError);
}

TEST_CASE("greedy output is always saturated") {
  std::mt19937_64 rng(1234);
  std::vector<Edge> order;
  int runs = 0;
  while (runs < 110) {
    Host h(3 + static_cast<int>(rng() % 3), 2 + static_cast<int>(rng() % 2));
    int t = 3 + static_cast<int>(rng() % 2);
    order = host_edges(h);
    for (std::size_t i = order.size(); i > 1; --i)
      std::swap(order[i - 1], order[rng() % i]);
    Subgraph g = greedy_saturate(Subgraph(h), t, order);
    CHECK(verify_saturated(g, t).is_saturated);
    ++runs;
  }
}

TEST_CASE("brute force on host(3,2)") {
  ExactResult res = brute_force_sat(Host(3, 2), 3);
  REQUIRE(res.min_size);
  CHECK(*res.min_size == 6);
  CHECK(res.sizes_exhausted == 5);
  CHECK_FALSE(res.wall_budget_hit);
  CHECK(res.subsets_examined > 0);
  REQUIRE(res.witness);
  CHECK(res.witness->edge_count() == 6);
  CHECK(verify_saturated(*res.witness, 3).is_saturated);
  CHECK(oracle::is_saturated(*res.witness, 3));
}

TEST_CASE("brute force when the host itself is K_t-free") {
  // K_4 never fits in three parts, so the only K_4-saturated subgraph is the
  // host itself
  ExactResult res = brute_force_sat(Host(3, 2), 4);
  REQUIRE(res.min_size);
  CHECK(*res.min_size == 12);
  CHECK(res.witness->edge_count() == 12);
}

TEST_CASE("disabling the prune changes nothing") {
  ExactBudget no_prune;
  no_prune.prune_kt = false;
  ExactResult slow = brute_force_sat(Host(3, 2), 3, no_prune);
  ExactResult fast = brute_force_sat(Host(3, 2), 3);
  REQUIRE(slow.min_size);
  CHECK(*slow.min_size == *fast.min_size);
  CHECK(*slow.witness == *fast.witness);
  CHECK(slow.subsets_examined >= fast.subsets_examined);
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_WITH_AS(brute_force_sat(Host(4, 3), 3),
                       doctest::Contains("cap of 30"), EnumerationCapError);
  ExactBudget raised;
  raised.edge_cap = 12;
  CHECK_NOTHROW(brute_force_sat(Host(3, 2), 3, raised));
}

TEST_CASE("budget trips leave a partial result") {
  ExactBudget tiny;
  tiny.max_subsets = 10;
  ExactResult res = brute_force_sat(Host(3, 3), 3, tiny);
  CHECK(res.wall_budget_hit);
  CHECK_FALSE(res.min_size);
  CHECK_FALSE(res.witness);
  CHECK(res.sizes_exhausted >= 0);
  CHECK(res.subsets_examined >= 10);
}

TEST_CASE("constructions upper-bound the exact value") {
  ExactResult res = brute_force_sat(Host(3, 2), 3);
  REQUIRE(res.min_size);
  CHECK(*res.min_size <= build_g1(3, 2).graph.edge_count());
  CHECK(*res.min_size <= build_g2(3, 2).graph.edge_count());
  CHECK(*res.min_size <= build_gknt(3, 2, 3).graph.edge_count());
  CHECK(*res.min_size <= build_hknt(3, 2, 3).graph.edge_count());
}

TEST_CASE("random greedy upper bound") {
  Host h(3, 2);
  HeuristicResult a = random_greedy_upper_bound(h, 3, 64, 42);
  HeuristicResult b = random_greedy_upper_bound(h, 3, 64, 42);
  CHECK(a.per_trial_sizes == b.per_trial_sizes);
  CHECK(a.best_size == b.best_size);
  CHECK(a.best_graph == b.best_graph);
  CHECK(a.per_trial_sizes.size() == 64);

  CHECK(a.best_size >= 6);   // the exact value
  CHECK(a.best_size <= 12);  // any saturated subgraph is an upper bound
  CHECK(verify_saturated(a.best_graph, 3).is_saturated);
  for (long long s : a.per_trial_sizes) CHECK(a.best_size <= s);

  HeuristicResult single = random_greedy_upper_bound(h, 3, 1, 7);
  CHECK(single.per_trial_sizes.size() == 1);
  CHECK(single.best_size == single.per_trial_sizes[0]);

  CHECK_THROWS_AS(random_greedy_upper_bound(h, 3, 0, 1), ParameterDomainError);

  // different seeds explore different orders
  HeuristicResult c = random_greedy_upper_bound(h, 3, 64, 43);
  CHECK(a.per_trial_sizes != c.per_trial_sizes);
}
