#include "satgraph/clique.hpp"

#include <algorithm>

namespace satgraph {

namespace {

// Distinct parts among the members, counting stops at `limit`.  Part-major
// layout means members arrive in nondecreasing part order, so one forward
// scan that jumps to the end of each part suffices.
int distinct_parts(const VertexSet& s, int part_size, int limit) {
  int count = 0;
  int v = s.first();
  while (v >= 0 && count < limit) {
    ++count;
    int part_end = (v / part_size + 1) * part_size;
    v = s.next_after(part_end - 1);
  }
  return count;
}

bool find_clique(const Subgraph& g, VertexSet cands, int need,
                 std::vector<int>& acc) {
  if (need == 0) return true;
  if (cands.count() < need) return false;
  if (distinct_parts(cands, g.host().part_size(), need) < need) return false;
  if (need == 1) {
    acc.push_back(cands.first());
    return true;
  }
  // pivot = candidate with the most candidate neighbours, ties to the lowest
  // id; only candidates outside N(pivot) start a branch
  int pivot = -1, pivot_deg = -1;
  for (int v = cands.first(); v >= 0; v = cands.next_after(v)) {
    int d = g.neighbors(v).intersection_count(cands);
    if (d > pivot_deg) {
      pivot_deg = d;
      pivot = v;
    }
  }
  const VertexSet& pivot_nbrs = g.neighbors(pivot);
  for (int v = cands.first(); v >= 0; v = cands.next_after(v)) {
    if (pivot_nbrs.test(v)) continue;
    acc.push_back(v);
    if (find_clique(g, cands & g.neighbors(v), need - 1, acc)) return true;
    acc.pop_back();
    // a failed branch rules v out of every clique still reachable here
    cands.reset(v);
  }
  return false;
}

}  // namespace

VertexSet common_neighborhood(const Subgraph& g, int u, int v) {
  g.host().check_vertex(u);
  g.host().check_vertex(v);
  if (u == v)
    throw IndexDomainError("common neighborhood needs two distinct vertices");
  return g.neighbors(u) & g.neighbors(v);
}

std::optional<CliqueWitness> contains_clique(const Subgraph& g,
                                             const VertexSet& candidates,
                                             int s) {
  if (s < 0)
    throw ParameterDomainError("clique size must be >= 0 (got " +
                               std::to_string(s) + ")");
  std::vector<int> acc;
  acc.reserve(s);
  if (!find_clique(g, candidates, s, acc)) return std::nullopt;
  std::sort(acc.begin(), acc.end());
  return CliqueWitness{std::move(acc)};
}

std::optional<CliqueWitness> completes_kt(const Subgraph& g, Edge e, int t) {
  if (t < 3)
    throw ParameterDomainError("clique order t must be >= 3 (got " +
                               std::to_string(t) + ")");
  if (g.has_edge(e))  // also validates that e is a host edge
    throw ContractError("edge (" + std::to_string(e.u) + ", " +
                        std::to_string(e.v) + ") is already present");
  return contains_clique(g, common_neighborhood(g, e.u, e.v), t - 2);
}

bool completes_kt_exists(const Subgraph& g, Edge e, int t) {
  if (t == 3) return g.neighbors(e.u).intersects(g.neighbors(e.v));
  std::vector<int> acc;
  return find_clique(g, g.neighbors(e.u) & g.neighbors(e.v), t - 2, acc);
}

}  // namespace satgraph
