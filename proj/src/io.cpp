#include "satgraph/io.hpp"

#include <cstdio>

namespace satgraph {

using nlohmann::json;

json graph_to_json(const Subgraph& g) {
  json edges = json::array();
  int v_count = g.host().vertex_count();
  for (int u = 0; u < v_count; ++u)
    for (int v = g.neighbors(u).next_after(u); v >= 0;
         v = g.neighbors(u).next_after(v))
      edges.push_back(json::array({u, v}));
  return json{{"k", g.host().part_count()},
              {"n", g.host().part_size()},
              {"edges", std::move(edges)}};
}

Subgraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("n") ||
      !j.contains("edges") || !j["k"].is_number_integer() ||
      !j["n"].is_number_integer() || !j["edges"].is_array())
    throw ParseError("graph JSON needs integer k, n and an edges array", 0);
  Host host(j["k"].get<int>(), j["n"].get<int>());
  Subgraph g(host);
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw ParseError("each edge must be a [u, v] integer pair", 0);
    g.add_edge(e[0].get<int>(), e[1].get<int>());
  }
  return g;
}

json report_to_json(const SaturationReport& rep, const Subgraph& g) {
  json witness;
  if (rep.kt_witness) witness = rep.kt_witness->vertices;
  json non_completing = json::array();
  for (const Edge& e : rep.non_completing)
    non_completing.push_back(json::array({e.u, e.v}));
  return json{{"t", rep.t},
              {"kt_free", rep.kt_free},
              {"witness", std::move(witness)},
              {"non_completing", std::move(non_completing)},
              {"missing_checked", rep.missing_checked},
              {"is_saturated", rep.is_saturated},
              {"edge_count", g.edge_count()},
              {"host", {{"k", g.host().part_count()}, {"n", g.host().part_size()}}}};
}

json density_to_json(const Subgraph& g) {
  json rows = json::array();
  for (const PairDensity& row : density_profile(g))
    rows.push_back(json{{"part_a", row.part_a},
                        {"part_b", row.part_b},
                        {"edges", row.edges},
                        {"density", row.density}});
  return rows;
}

std::string density_to_csv(const Subgraph& g) {
  std::string out = "part_a,part_b,edges,density\n";
  char buf[96];
  for (const PairDensity& row : density_profile(g)) {
    std::snprintf(buf, sizeof buf, "%d,%d,%lld,%.6f\n", row.part_a, row.part_b,
                  row.edges, row.density);
    out += buf;
  }
  return out;
}

}  // namespace satgraph
