#pragma once

#include <optional>
#include <vector>

#include "satgraph/subgraph.hpp"

namespace satgraph {

// A clique found by the search engine; vertices are sorted ascending and are
// pairwise adjacent in the subgraph that produced the witness.
struct CliqueWitness {
  std::vector<int> vertices;
  int size() const { return static_cast<int>(vertices.size()); }
};

// {w : w adjacent to both u and v}.  Requires u != v.
VertexSet common_neighborhood(const Subgraph& g, int u, int v);

// Exact existence search for an s-clique induced on `candidates`.  s = 0
// always succeeds with an empty witness; s = 1 succeeds iff candidates is
// nonempty.  Branch-and-bound with a pivot, plus the multipartite prune: a
// clique uses at most one vertex per part, so branches whose candidate set
// spans fewer parts than the remaining demand are dead.  Exploration is
// deterministic (ascending flat ids, pivot ties broken low), so the witness
// never depends on scheduling.
std::optional<CliqueWitness> contains_clique(const Subgraph& g,
                                             const VertexSet& candidates,
                                             int s);

// Does adding the missing edge e create a K_t?  On success returns the
// (t-2)-clique found inside the endpoints' common neighborhood.  Throws
// ContractError if e is already present.
std::optional<CliqueWitness> completes_kt(const Subgraph& g, Edge e, int t);

// Fast-path used by the search loops: same question as completes_kt but no
// witness and no precondition checks (caller guarantees e is a missing host
// edge and t >= 3).
bool completes_kt_exists(const Subgraph& g, Edge e, int t);

}  // namespace satgraph
