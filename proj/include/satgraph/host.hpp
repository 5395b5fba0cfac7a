#pragma once

#include <utility>

#include "satgraph/errors.hpp"

namespace satgraph {

// Complete balanced multipartite host K_k^n: k parts of n vertices each,
// every inter-part pair is a host edge.  Vertices are numbered part-major,
// flat = (part-1)*n + (index-1), with parts and indices 1-based.  Part-major
// layout keeps every part a contiguous bit range, which the clique kernel
// exploits.
class Host {
public:
  Host(int k, int n) : k_(k), n_(n) {
    if (k < 3)
      throw ParameterDomainError("part count k must be >= 3 (got " +
                                 std::to_string(k) + ")");
    if (n < 2)
      throw ParameterDomainError("part size n must be >= 2 (got " +
                                 std::to_string(n) + ")");
  }

  int part_count() const { return k_; }
  int part_size() const { return n_; }
  int vertex_count() const { return k_ * n_; }
  long long edge_count() const {
    return static_cast<long long>(k_) * (k_ - 1) / 2 * n_ * n_;
  }

  // (part, index) -> flat id, both 1-based.
  int locate(int part, int index) const {
    if (part < 1 || part > k_)
      throw IndexDomainError("part " + std::to_string(part) +
                             " outside [1, " + std::to_string(k_) + "]");
    if (index < 1 || index > n_)
      throw IndexDomainError("index " + std::to_string(index) +
                             " outside [1, " + std::to_string(n_) + "]");
    return (part - 1) * n_ + (index - 1);
  }

  std::pair<int, int> unlocate(int flat) const {
    check_vertex(flat);
    return {flat / n_ + 1, flat % n_ + 1};
  }

  int part_of(int flat) const { return flat / n_ + 1; }
  int index_of(int flat) const { return flat % n_ + 1; }

  void check_vertex(int flat) const {
    if (flat < 0 || flat >= vertex_count())
      throw IndexDomainError("vertex " + std::to_string(flat) +
                             " outside [0, " + std::to_string(vertex_count()) +
                             ")");
  }

  bool operator==(const Host&) const = default;

private:
  int k_;
  int n_;
};

}  // namespace satgraph
