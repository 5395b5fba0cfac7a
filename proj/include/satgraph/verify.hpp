#pragma once

#include <optional>
#include <vector>

#include "satgraph/clique.hpp"

namespace satgraph {

struct FreenessResult {
  bool free;
  std::optional<CliqueWitness> witness;  // a K_t when free is false
};

// K_t-freeness of the whole subgraph.  t >= 3 required.
FreenessResult is_kt_free(const Subgraph& g, int t);

// Verdict of the saturation check.  A subgraph is K_t-saturated when it is
// K_t-free and every absent host edge would close a K_t.  When freeness
// fails, the maximality scan is skipped: non_completing stays empty and
// missing_checked is 0.
struct SaturationReport {
  int t = 0;
  bool kt_free = false;
  std::optional<CliqueWitness> kt_witness;
  std::vector<Edge> non_completing;  // canonical order, complete (no early exit)
  long long missing_checked = 0;
  bool is_saturated = false;
};

// jobs > 1 shards the missing-edge scan over worker threads; results are
// merged back into canonical order, so the report is identical for any job
// count.
SaturationReport verify_saturated(const Subgraph& g, int t, int jobs = 1);

struct PairDensity {
  int part_a, part_b;  // 1-based, part_a < part_b
  long long edges;
  double density;  // edges / n^2
};

// One row per unordered part pair, in lexicographic pair order.
std::vector<PairDensity> density_profile(const Subgraph& g);

}  // namespace satgraph
