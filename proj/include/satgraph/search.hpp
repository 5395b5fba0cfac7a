#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "satgraph/subgraph.hpp"

namespace satgraph {

// Adds missing edges that close no K_t, scanning `order` until a full pass
// adds nothing.  The result is a maximal K_t-free subgraph of the host,
// which is exactly a K_t-saturated one.  `order` must be a permutation of
// the input's missing edges; the input must be K_t-free (ContractError
// otherwise, with a witness in the message).
Subgraph greedy_saturate(const Subgraph& start, int t,
                         std::span<const Edge> order);

// Same, with the canonical ascending edge order.
Subgraph greedy_saturate(const Subgraph& start, int t);

struct HeuristicResult {
  long long best_size;
  Subgraph best_graph;
  std::vector<long long> per_trial_sizes;
};

// Runs greedy_saturate from the empty subgraph under `trials` shuffled edge
// orders derived deterministically from `seed`; keeps the smallest result
// (first trial wins ties).  Identical inputs give identical outputs on any
// platform: the shuffle draws from mt19937_64 through an explicit rejection
// sampler rather than distribution objects.
HeuristicResult random_greedy_upper_bound(const Host& host, int t, int trials,
                                          std::uint64_t seed);

struct ExactBudget {
  long long edge_cap = 30;           // refuse hosts with more edges than this
  std::uint64_t max_subsets = 0;     // 0 = unlimited leaf checks
  double max_seconds = 0.0;          // 0 = no wall-clock limit
  bool prune_kt = true;              // test knob; disabling must not change results
};

struct ExactResult {
  std::optional<long long> min_size;
  std::optional<Subgraph> witness;
  std::uint64_t subsets_examined = 0;  // complete candidate subsets tested
  long long sizes_exhausted = -1;      // largest cardinality fully enumerated
  bool wall_budget_hit = false;        // either budget tripped
};

// Exact sat(K_t, host) by enumerating edge subsets in increasing
// cardinality; within a cardinality, subsets are generated in lexicographic
// order over canonical edge indices, and any partial subset that already
// closes a K_t is pruned with its whole extension subtree.  The first
// success is therefore the lexicographically least witness of minimum size.
// Throws EnumerationCapError when the host exceeds budget.edge_cap.
ExactResult brute_force_sat(const Host& host, int t,
                            const ExactBudget& budget = {});

}  // namespace satgraph
