#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "satgraph/clique.hpp"
#include "satgraph/constructions.hpp"

using namespace satgraph;

namespace {

bool witness_is_clique(const Subgraph& g, const CliqueWitness& w) {
  for (std::size_t a = 0; a < w.vertices.size(); ++a)
    for (std::size_t b = a + 1; b < w.vertices.size(); ++b)
      if (!g.has_edge(w.vertices[a], w.vertices[b])) return false;
  return true;
}

}  // namespace

TEST_CASE("common neighborhoods") {
  Host h(3, 2);
  auto g2 = build_g2(3, 2);
  // v3^2 and v1^1 share nothing: N(v3^2) = {v1^1's side? no: {0's neighbours}}
  CHECK(common_neighborhood(g2.graph, h.locate(3, 2), h.locate(1, 1)).none());

  Subgraph empty(h);
  CHECK(common_neighborhood(empty, 0, 2).none());

  Subgraph full = Subgraph::complete(h);
  VertexSet both = common_neighborhood(full, h.locate(1, 1), h.locate(2, 1));
  CHECK(both.count() == 2);
  CHECK(both.test(h.locate(3, 1)));
  CHECK(both.test(h.locate(3, 2)));

  CHECK_THROWS_AS(common_neighborhood(full, 1, 1), IndexDomainError);
}

TEST_CASE("contains_clique edge cases") {
  Host h(3, 2);
  Subgraph empty(h);
  auto w0 = contains_clique(empty, VertexSet::full(6), 0);
  REQUIRE(w0);
  CHECK(w0->size() == 0);

  CHECK_FALSE(contains_clique(empty, VertexSet(6), 1));
  auto w1 = contains_clique(empty, VertexSet::full(6), 1);
  REQUIRE(w1);
  CHECK(w1->vertices == std::vector{0});

  CHECK_THROWS_AS(contains_clique(empty, VertexSet(6), -1),
                  ParameterDomainError);
}

TEST_CASE("g1 is triangle-free") {
  auto art = build_g1(4, 2);
  CHECK_FALSE(contains_clique(art.graph, VertexSet::full(8), 3));
  CHECK_FALSE(oracle::has_clique(art.graph, 3));
}

TEST_CASE("hknt at t=4 has triangles but no K4") {
  auto art = build_hknt(5, 2, 4);
  CHECK(art.graph.edge_count() == 25);
  CHECK_FALSE(contains_clique(art.graph, VertexSet::full(10), 4));
  CHECK_FALSE(oracle::has_clique(art.graph, 4));
  auto tri = contains_clique(art.graph, VertexSet::full(10), 3);
  REQUIRE(tri);
  CHECK(witness_is_clique(art.graph, *tri));
  // multipartite invariant: one vertex per part
  CHECK(art.graph.host().part_of(tri->vertices[0]) !=
        art.graph.host().part_of(tri->vertices[1]));
}

TEST_CASE("completes_kt") {
  Host h(3, 2);
  auto g1 = build_g1(3, 2);
  auto w = completes_kt(g1.graph, Edge(h.locate(1, 1), h.locate(2, 1)), 3);
  REQUIRE(w);
  CHECK(w->size() == 1);
  CHECK(h.part_of(w->vertices[0]) == 3);

  Subgraph empty(h);
  CHECK_FALSE(completes_kt(empty, Edge(0, 2), 3));

  Host h4(4, 2);
  auto g2 = build_g2(4, 2);
  auto w2 = completes_kt(g2.graph, Edge(h4.locate(1, 1), h4.locate(2, 1)), 3);
  REQUIRE(w2);
  int v = w2->vertices[0];
  CHECK((v == h4.locate(3, 2) || h4.part_of(v) == 4));

  CHECK_THROWS_AS(completes_kt(g1.graph, Edge(0, 4), 3), ContractError);
  CHECK_THROWS_AS(completes_kt(g1.graph, Edge(0, 2), 2), ParameterDomainError);
}

TEST_CASE("completes_kt agrees with insert-then-search") {
  std::mt19937_64 rng(7);
  int trials = 0;
  while (trials < 220) {
    Host h(3 + static_cast<int>(rng() % 3), 2 + static_cast<int>(rng() % 2));
    int t = 3 + static_cast<int>(rng() % 3);
    Subgraph g = oracle::random_kt_free(h, t, rng);
    auto missing = g.missing_edges();
    if (missing.empty()) continue;
    Edge e = missing[rng() % missing.size()];

    bool fast = completes_kt(g, e, t).has_value();
    Subgraph inserted = g;
    inserted.add_edge(e);
    bool slow = oracle::has_clique(inserted, t);
    CHECK(fast == slow);
    if (fast) {
      auto w = completes_kt(g, e, t);
      CHECK(witness_is_clique(g, *w));
      for (int v : w->vertices) {
        CHECK(g.has_edge(v, e.u));
        CHECK(g.has_edge(v, e.v));
      }
    }
    ++trials;
  }
}

TEST_CASE("contains_clique is monotone in the candidate set") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 60; ++round) {
    Host h(4, 3);
    Subgraph g = oracle::random_kt_free(h, 5, rng, 0.8);
    int s = 2 + static_cast<int>(rng() % 3);
    VertexSet small(h.vertex_count());
    for (int v = 0; v < h.vertex_count(); ++v)
      if (rng() & 1) small.set(v);
    VertexSet large = small;
    for (int v = 0; v < h.vertex_count(); ++v)
      if (rng() % 3 == 0) large.set(v);
    if (contains_clique(g, small, s)) CHECK(contains_clique(g, large, s));
  }
}
