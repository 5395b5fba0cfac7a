#include "satgraph/verify.hpp"

#include <thread>

namespace satgraph {

FreenessResult is_kt_free(const Subgraph& g, int t) {
  if (t < 3)
    throw ParameterDomainError("clique order t must be >= 3 (got " +
                               std::to_string(t) + ")");
  auto witness =
      contains_clique(g, VertexSet::full(g.host().vertex_count()), t);
  if (witness) return {false, std::move(witness)};
  return {true, std::nullopt};
}

SaturationReport verify_saturated(const Subgraph& g, int t, int jobs) {
  SaturationReport rep;
  rep.t = t;
  auto freeness = is_kt_free(g, t);
  rep.kt_free = freeness.free;
  rep.kt_witness = std::move(freeness.witness);
  if (!rep.kt_free) {
    rep.is_saturated = false;
    return rep;
  }

  const std::vector<Edge> missing = g.missing_edges();
  rep.missing_checked = static_cast<long long>(missing.size());

  if (jobs <= 1 || missing.size() < 2048) {
    for (const Edge& e : missing)
      if (!completes_kt_exists(g, e, t)) rep.non_completing.push_back(e);
  } else {
    if (jobs > 256) jobs = 256;
    std::size_t total = missing.size();
    std::size_t chunk = (total + jobs - 1) / jobs;
    std::vector<std::vector<Edge>> found(jobs);
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
      std::size_t lo = w * chunk;
      std::size_t hi = std::min(total, lo + chunk);
      if (lo >= hi) break;
      workers.emplace_back([&, w, lo, hi] {
        for (std::size_t i = lo; i < hi; ++i)
          if (!completes_kt_exists(g, missing[i], t))
            found[w].push_back(missing[i]);
      });
    }
    for (auto& th : workers) th.join();
    // shards are contiguous ranges of the canonical list, so concatenation
    // in shard order reproduces the serial result exactly
    for (auto& part : found)
      rep.non_completing.insert(rep.non_completing.end(), part.begin(),
                                part.end());
  }

  rep.is_saturated = rep.kt_free && rep.non_completing.empty();
  return rep;
}

std::vector<PairDensity> density_profile(const Subgraph& g) {
  std::vector<PairDensity> rows;
  int k = g.host().part_count();
  double nn = static_cast<double>(g.host().part_size()) * g.host().part_size();
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      long long c = g.part_pair_edge_count(i, j);
      rows.push_back({i, j, c, static_cast<double>(c) / nn});
    }
  return rows;
}

}  // namespace satgraph
