#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "satgraph/constructions.hpp"
#include "satgraph/graph6.hpp"

using namespace satgraph;

namespace {

// Independent packer: collect the column-major upper-triangle bits through
// has_edge probes and assemble the characters by hand.
std::string pack_by_hand(const Subgraph& g) {
  int v_count = g.host().vertex_count();
  REQUIRE(v_count <= 62);
  std::vector<int> bits;
  for (int j = 1; j < v_count; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? 1 : 0);
  while (bits.size() % 6) bits.push_back(0);
  std::string out(1, static_cast<char>(63 + v_count));
  for (std::size_t at = 0; at < bits.size(); at += 6) {
    int value = 0;
    for (int b = 0; b < 6; ++b) value = value * 2 + bits[at + b];
    out += static_cast<char>(63 + value);
  }
  return out;
}

}  // namespace

TEST_CASE("known encodings") {
  Host h(3, 2);
  CHECK(encode_graph6(Subgraph(h)) == "E???");
  CHECK(encode_graph6(build_g2(3, 2).graph) == "EKU_");
}

TEST_CASE("encoder matches an independently packed bitstring") {
  for (const Subgraph& g :
       {build_g2(3, 2).graph, build_g1(3, 2).graph, build_g1(4, 3).graph,
        Subgraph::complete(Host(3, 2))})
    CHECK(encode_graph6(g) == pack_by_hand(g));
}

TEST_CASE("round trips") {
  Host h(3, 2);
  CHECK(decode_graph6("E???", h) == Subgraph(h));
  CHECK(decode_graph6("EKU_\n", h) == build_g2(3, 2).graph);

  std::mt19937_64 rng(31337);
  for (int round = 0; round < 40; ++round) {
    Host host(3 + static_cast<int>(rng() % 3), 2 + static_cast<int>(rng() % 2));
    Subgraph g = oracle::random_kt_free(host, 4, rng, 0.7);
    CHECK(decode_graph6(encode_graph6(g), host) == g);
  }

  for (int k = 3; k <= 7; ++k)
    for (int n = 2; n <= 4; ++n) {
      Subgraph g = build_g2(k, n).graph;
      CHECK(decode_graph6(encode_graph6(g), Host(k, n)) == g);
    }
}

TEST_CASE("extended header for more than 62 vertices") {
  Subgraph g = build_g1(3, 100).graph;
  std::string line = encode_graph6(g);
  CHECK(line[0] == '~');
  CHECK(decode_graph6(line, Host(3, 100)) == g);
}

TEST_CASE("decoding validates against the host") {
  Host h(3, 2);
  // a triangle on graph6 vertices {0,1,2}: vertices 0 and 1 share part 1
  CHECK_THROWS_AS(decode_graph6("Bw", h), MultipartiteViolationError);
  // 7 vertices cannot embed into a 6-vertex host
  CHECK_THROWS_AS(decode_graph6("F????", h), IndexDomainError);
}

TEST_CASE("malformed inputs carry byte offsets") {
  Host h(3, 2);
  CHECK_THROWS_AS(decode_graph6("", h), ParseError);
  CHECK_THROWS_AS(decode_graph6("E??", h), ParseError);     // truncated body
  CHECK_THROWS_AS(decode_graph6("E????", h), ParseError);   // trailing data
  CHECK_THROWS_AS(decode_graph6("E?\x07?", h), ParseError); // bad byte
  try {
    decode_graph6("E?\x07?", h);
  } catch (const ParseError& e) {
    CHECK(e.byte_offset == 2);
  }
  // nonzero padding: host(3,2) body has 15 bits, last char must end in 000
  CHECK_THROWS_AS(decode_graph6("E??@", h), ParseError);
}
