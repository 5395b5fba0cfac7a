#pragma once

#include <compare>
#include <vector>

#include "satgraph/bitset.hpp"
#include "satgraph/host.hpp"

namespace satgraph {

// Unordered pair of host vertices, stored canonically with the smaller flat
// id first.  Ordering (u, then v) is the canonical edge order everywhere.
struct Edge {
  int u, v;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Spanning subgraph of a Host: a subset of the host's edges kept as
// symmetric bitset adjacency.  Invariants after every edit: adjacency is
// symmetric, no edge joins two vertices of one part, and edge_count equals
// half the total population count.
class Subgraph {
public:
  explicit Subgraph(Host host)
      : host_(host), adj_(host.vertex_count(), VertexSet(host.vertex_count())) {}

  // All host edges present.
  static Subgraph complete(Host host);

  const Host& host() const { return host_; }
  long long edge_count() const { return edge_count_; }

  bool has_edge(int u, int v) const {
    host_.check_vertex(u);
    host_.check_vertex(v);
    return adj_[u].test(v);
  }
  bool has_edge(Edge e) const { return has_edge(e.u, e.v); }

  // Returns false (and changes nothing) when the edge is already present.
  bool add_edge(int u, int v);
  bool add_edge(Edge e) { return add_edge(e.u, e.v); }

  // Returns false when the edge is absent.
  bool remove_edge(int u, int v);
  bool remove_edge(Edge e) { return remove_edge(e.u, e.v); }

  const VertexSet& neighbors(int v) const {
    host_.check_vertex(v);
    return adj_[v];
  }
  int degree(int v) const { return neighbors(v).count(); }

  // Host edges absent from this subgraph, in canonical (u, v) order.
  std::vector<Edge> missing_edges() const;

  // Edges with one endpoint in part i and the other in part j (1-based,
  // i != j required).
  long long part_pair_edge_count(int i, int j) const;

  bool operator==(const Subgraph& o) const {
    return host_ == o.host_ && adj_ == o.adj_;
  }

private:
  // Validates that (u, v) is a host edge; throws otherwise.
  void check_host_edge(int u, int v) const;

  Host host_;
  std::vector<VertexSet> adj_;
  long long edge_count_ = 0;
};

// Every host edge in canonical order; index into this list is the canonical
// edge index used by the exhaustive search.
std::vector<Edge> host_edges(const Host& host);

}  // namespace satgraph
