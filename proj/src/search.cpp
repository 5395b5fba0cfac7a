#include "satgraph/search.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "satgraph/clique.hpp"
#include "satgraph/verify.hpp"

namespace satgraph {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Unbiased draw in [0, bound) by rejection; mt19937_64's output sequence is
// pinned by the standard, unlike the distribution classes.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

void shuffle_edges(std::vector<Edge>& edges, std::mt19937_64& rng) {
  for (std::size_t i = edges.size(); i > 1; --i)
    std::swap(edges[i - 1], edges[draw_below(rng, i)]);
}

std::string describe(const std::vector<int>& vertices) {
  std::string s = "{";
  for (std::size_t i = 0; i < vertices.size(); ++i)
    s += (i ? ", " : "") + std::to_string(vertices[i]);
  return s + "}";
}

}  // namespace

Subgraph greedy_saturate(const Subgraph& start, int t,
                         std::span<const Edge> order) {
  auto freeness = is_kt_free(start, t);
  if (!freeness.free)
    throw ContractError("greedy_saturate input already contains a K_" +
                        std::to_string(t) + ": " +
                        describe(freeness.witness->vertices));
  {
    std::vector<Edge> given(order.begin(), order.end());
    std::sort(given.begin(), given.end());
    if (given != start.missing_edges())
      throw ContractError(
          "edge order must be a permutation of the input's missing edges");
  }

  Subgraph g = start;
  // one pass already suffices (rejections are permanent), but the fixpoint
  // loop costs one idle pass and guarantees maximality outright
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Edge& e : order) {
      if (g.has_edge(e)) continue;
      if (!completes_kt_exists(g, e, t)) {
        g.add_edge(e);
        changed = true;
      }
    }
  }
  return g;
}

Subgraph greedy_saturate(const Subgraph& start, int t) {
  auto order = start.missing_edges();
  return greedy_saturate(start, t, order);
}

HeuristicResult random_greedy_upper_bound(const Host& host, int t, int trials,
                                          std::uint64_t seed) {
  if (trials < 1)
    throw ParameterDomainError("trials must be >= 1 (got " +
                               std::to_string(trials) + ")");
  if (t < 3) throw ParameterDomainError("clique order t must be >= 3");

  const Subgraph empty(host);
  const std::vector<Edge> base = host_edges(host);
  std::optional<HeuristicResult> out;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<Edge> order = base;
    std::mt19937_64 rng(splitmix64(seed) ^ splitmix64(trial + 1));
    shuffle_edges(order, rng);
    Subgraph g = greedy_saturate(empty, t, order);
    long long size = g.edge_count();
    if (!out) {
      out = HeuristicResult{size, std::move(g), {size}};
    } else {
      out->per_trial_sizes.push_back(size);
      if (size < out->best_size) {
        out->best_size = size;
        out->best_graph = std::move(g);
      }
    }
  }
  return std::move(*out);
}

namespace {

struct ExactSearch {
  const std::vector<Edge>& edges;
  const int t;
  const ExactBudget& budget;
  Subgraph cur;
  std::vector<char> chosen;
  std::uint64_t node_ticker = 0;
  std::uint64_t subsets_examined = 0;
  std::chrono::steady_clock::time_point deadline{};
  bool use_deadline = false;
  bool tripped = false;

  ExactSearch(const Host& host, const std::vector<Edge>& edge_list, int order,
              const ExactBudget& b)
      : edges(edge_list), t(order), budget(b), cur(host),
        chosen(edge_list.size(), 0) {
    if (budget.max_seconds > 0) {
      use_deadline = true;
      deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(budget.max_seconds));
    }
  }

  bool over_budget() {
    if (budget.max_subsets && subsets_examined >= budget.max_subsets)
      return tripped = true;
    if (use_deadline && (++node_ticker & 0x1FFF) == 0 &&
        std::chrono::steady_clock::now() > deadline)
      return tripped = true;
    return tripped;
  }

  // saturation test specialized for the enumeration: stop at the first
  // missing edge that closes nothing (only the boolean matters here)
  bool saturated_here() {
    if (!budget.prune_kt && !is_kt_free(cur, t).free) return false;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (chosen[i]) continue;
      if (!completes_kt_exists(cur, edges[i], t)) return false;
    }
    return true;
  }

  // lexicographic subsets of size `need` over edge indices >= from
  bool dfs(std::size_t from, int need) {
    if (need == 0) {
      ++subsets_examined;
      if (over_budget()) return false;
      return saturated_here();
    }
    for (std::size_t i = from; i + need <= edges.size(); ++i) {
      if (tripped || over_budget()) return false;
      if (budget.prune_kt && completes_kt_exists(cur, edges[i], t))
        continue;  // every extension through this edge holds a K_t
      cur.add_edge(edges[i]);
      chosen[i] = 1;
      if (dfs(i + 1, need - 1)) return true;
      chosen[i] = 0;
      cur.remove_edge(edges[i]);
      if (tripped) return false;
    }
    return false;
  }
};

}  // namespace

ExactResult brute_force_sat(const Host& host, int t, const ExactBudget& budget) {
  if (t < 3) throw ParameterDomainError("clique order t must be >= 3");
  const std::vector<Edge> edges = host_edges(host);
  const long long m = static_cast<long long>(edges.size());
  if (m > budget.edge_cap)
    throw EnumerationCapError(
        "host has " + std::to_string(m) +
        " edges, above the enumeration cap of " +
        std::to_string(budget.edge_cap) + "; raise the cap to force the run");

  ExactSearch search(host, edges, t, budget);
  ExactResult result;
  for (long long s = 0; s <= m; ++s) {
    bool found = search.dfs(0, static_cast<int>(s));
    result.subsets_examined = search.subsets_examined;
    if (found) {
      result.min_size = s;
      result.witness = search.cur;
      result.sizes_exhausted = s - 1;
      return result;
    }
    if (search.tripped) {
      result.wall_budget_hit = true;
      result.sizes_exhausted = s - 1;
      return result;
    }
    result.sizes_exhausted = s;
  }
  // unreachable: the full host is saturated whenever it is K_t-free, and a
  // host containing K_t always has a smaller saturated subgraph
  throw std::logic_error("exhaustive search found no saturated subgraph");
}

}  // namespace satgraph
