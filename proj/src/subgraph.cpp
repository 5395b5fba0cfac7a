#include "satgraph/subgraph.hpp"

namespace satgraph {

Subgraph Subgraph::complete(Host host) {
  Subgraph g(host);
  int v_count = host.vertex_count();
  for (int u = 0; u < v_count; ++u)
    for (int v = u + 1; v < v_count; ++v)
      if (host.part_of(u) != host.part_of(v)) g.add_edge(u, v);
  return g;
}

void Subgraph::check_host_edge(int u, int v) const {
  host_.check_vertex(u);
  host_.check_vertex(v);
  if (host_.part_of(u) == host_.part_of(v))
    throw MultipartiteViolationError(
        "vertices " + std::to_string(u) + " and " + std::to_string(v) +
        " are both in part " + std::to_string(host_.part_of(u)));
}

bool Subgraph::add_edge(int u, int v) {
  check_host_edge(u, v);
  if (adj_[u].test(v)) return false;
  adj_[u].set(v);
  adj_[v].set(u);
  ++edge_count_;
  return true;
}

bool Subgraph::remove_edge(int u, int v) {
  check_host_edge(u, v);
  if (!adj_[u].test(v)) return false;
  adj_[u].reset(v);
  adj_[v].reset(u);
  --edge_count_;
  return true;
}

std::vector<Edge> Subgraph::missing_edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(host_.edge_count() - edge_count_));
  int v_count = host_.vertex_count();
  int n = host_.part_size();
  for (int u = 0; u < v_count; ++u) {
    // same-part pairs are not host edges, so v starts past u's part
    for (int v = (u / n + 1) * n; v < v_count; ++v)
      if (!adj_[u].test(v)) out.emplace_back(u, v);
  }
  return out;
}

long long Subgraph::part_pair_edge_count(int i, int j) const {
  int k = host_.part_count(), n = host_.part_size();
  if (i < 1 || i > k || j < 1 || j > k || i == j)
    throw IndexDomainError("part pair (" + std::to_string(i) + ", " +
                           std::to_string(j) + ") invalid for k = " +
                           std::to_string(k));
  int lo = (j - 1) * n, hi = j * n;
  long long c = 0;
  for (int u = (i - 1) * n; u < i * n; ++u) c += adj_[u].count_range(lo, hi);
  return c;
}

std::vector<Edge> host_edges(const Host& host) {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(host.edge_count()));
  int v_count = host.vertex_count();
  int n = host.part_size();
  for (int u = 0; u < v_count; ++u)
    for (int v = (u / n + 1) * n; v < v_count; ++v) out.emplace_back(u, v);
  return out;
}

}  // namespace satgraph
