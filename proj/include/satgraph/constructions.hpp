#pragma once

#include <string>
#include <vector>

#include "satgraph/subgraph.hpp"

namespace satgraph {

// The six construction families.  G1/G2 are the two triangle-saturation
// families (t fixed at 3); Gknt/Hknt generalize them to K_t; Fknt builds hub
// cliques over the (t-2)-subsets of [t] and completes greedily; Iknt starts
// from paired hub vertices and deletes triangles.
enum class Kind { G1, G2, Gknt, Hknt, Fknt, Iknt };

const char* kind_name(Kind kind);
Kind kind_from_name(const std::string& name);  // throws ParameterDomainError

struct ConstructionSpec {
  Kind kind;
  int k = 0;
  int n = 0;
  int t = 3;  // must be 3 for G1/G2
};

// Throws ParameterDomainError when the parameters are inadmissible:
//   G1, G2:  k >= 3, n >= 2, t == 3
//   Gknt:    t >= 3, k >= max(3, 2t-4)
//   Hknt:    t >= 3, k >= 2t-3
//   Fknt:    t >= 4, k >= t, n >= C(t-1, 2)  (fresh-vertex supply)
//   Iknt:    t even, t >= 6, k >= 3(t-2)/2
void validate(const ConstructionSpec& spec);

struct ConstructionArtifacts {
  Subgraph graph;
  std::vector<int> hubs;               // the hub set S, ascending flat ids
  std::vector<Edge> completion_edges;  // greedy additions (Fknt only)
  std::vector<std::string> notes;      // interpretive choices applied
};

ConstructionArtifacts build(const ConstructionSpec& spec);

ConstructionArtifacts build_g1(int k, int n);
ConstructionArtifacts build_g2(int k, int n);
ConstructionArtifacts build_gknt(int k, int n, int t);
ConstructionArtifacts build_hknt(int k, int n, int t);
ConstructionArtifacts build_fknt(int k, int n, int t);
ConstructionArtifacts build_iknt(int k, int n, int t);

// Closed-form edge count; defined for G1, G2, Gknt and Hknt only.  Throws
// NoClosedFormError for Fknt/Iknt (their sizes come from enumeration).
long long size_formula(const ConstructionSpec& spec);

struct K3Min {
  long long value;
  Kind argmin;  // G1 or G2
};

// min(2kn + n^2 - 4n - 1, 3kn - 3n - 6) with the winner decided by the
// exact integer threshold nk >= n^2 - n + 5 (G1 on equality).
K3Min sat_k3_formula(int k, int n);

// min of the Gknt and Hknt closed forms; requires t >= 3, k >= 2t-3.
long long general_bound_formula(int k, int n, int t);

}  // namespace satgraph
