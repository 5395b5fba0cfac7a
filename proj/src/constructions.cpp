#include "satgraph/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "satgraph/clique.hpp"

namespace satgraph {

namespace {

long long binom2(long long m) { return m * (m - 1) / 2; }

// All edges between hub vertices and everything outside S (different parts).
void join_hubs_to_complement(Subgraph& g, const std::vector<int>& hubs,
                             const VertexSet& s_members) {
  const Host& host = g.host();
  int v_count = host.vertex_count();
  for (int s : hubs)
    for (int w = 0; w < v_count; ++w)
      if (!s_members.test(w) && host.part_of(w) != host.part_of(s))
        g.add_edge(s, w);
}

VertexSet as_set(const std::vector<int>& vs, int capacity) {
  VertexSet s(capacity);
  for (int v : vs) s.set(v);
  return s;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ParameterDomainError(message);
}

// (t-2)-element subsets of {1..t} in lexicographic order.
std::vector<std::vector<int>> subsets_lex(int t, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(size);
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.push_back(cur);
    int i = size - 1;
    while (i >= 0 && cur[i] == t - size + 1 + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < size; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace

const char* kind_name(Kind kind) {
  switch (kind) {
    case Kind::G1: return "g1";
    case Kind::G2: return "g2";
    case Kind::Gknt: return "gknt";
    case Kind::Hknt: return "hknt";
    case Kind::Fknt: return "fknt";
    case Kind::Iknt: return "iknt";
  }
  return "?";
}

Kind kind_from_name(const std::string& name) {
  if (name == "g1") return Kind::G1;
  if (name == "g2") return Kind::G2;
  if (name == "gknt") return Kind::Gknt;
  if (name == "hknt") return Kind::Hknt;
  if (name == "fknt") return Kind::Fknt;
  if (name == "iknt") return Kind::Iknt;
  throw ParameterDomainError("unknown construction kind '" + name + "'");
}

void validate(const ConstructionSpec& spec) {
  int k = spec.k, n = spec.n, t = spec.t;
  require(k >= 3, "part count k must be >= 3 (got " + std::to_string(k) + ")");
  require(n >= 2, "part size n must be >= 2 (got " + std::to_string(n) + ")");
  switch (spec.kind) {
    case Kind::G1:
    case Kind::G2:
      require(t == 3, std::string(kind_name(spec.kind)) +
                          " is a triangle construction; t must be 3");
      break;
    case Kind::Gknt:
      require(t >= 3, "gknt needs t >= 3");
      require(k >= 2 * t - 4,
              "gknt needs k >= 2t-4 = " + std::to_string(2 * t - 4));
      break;
    case Kind::Hknt:
      require(t >= 3, "hknt needs t >= 3");
      require(k >= 2 * t - 3,
              "hknt needs k >= 2t-3 = " + std::to_string(2 * t - 3));
      break;
    case Kind::Fknt:
      require(t >= 4, "fknt needs t >= 4");
      require(k >= t, "fknt needs k >= t");
      require(n >= binom2(t - 1),
              "fknt needs n >= C(t-1,2) = " + std::to_string(binom2(t - 1)) +
                  " so every part can supply fresh hub vertices");
      break;
    case Kind::Iknt:
      require(t >= 6 && t % 2 == 0, "iknt needs even t >= 6");
      require(k >= 3 * (t - 2) / 2,
              "iknt needs k >= 3(t-2)/2 = " + std::to_string(3 * (t - 2) / 2));
      break;
  }
}

ConstructionArtifacts build_g1(int k, int n) {
  validate({Kind::G1, k, n, 3});
  Host host(k, n);
  Subgraph g(host);
  int hub1 = host.locate(1, 1), hub2 = host.locate(2, 1);
  // full bipartite join V1-V2 except the hub pair itself
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i + j >= 3) g.add_edge(host.locate(1, i), host.locate(2, j));
  for (int part = 3; part <= k; ++part)
    for (int idx = 1; idx <= n; ++idx) {
      g.add_edge(hub1, host.locate(part, idx));
      g.add_edge(hub2, host.locate(part, idx));
    }
  return {std::move(g),
          {hub1, hub2},
          {},
          {"V1-V2 join omits the hub pair v1^1 v2^1"}};
}

ConstructionArtifacts build_g2(int k, int n) {
  validate({Kind::G2, k, n, 3});
  Host host(k, n);
  Subgraph g(host);
  std::vector<int> hubs = {host.locate(1, 1), host.locate(2, 1),
                           host.locate(3, 1)};
  // non-hub vertices of the three hub parts join the other two hubs; the
  // hubs themselves stay pairwise non-adjacent
  for (int part = 1; part <= 3; ++part)
    for (int idx = 2; idx <= n; ++idx)
      for (int other = 1; other <= 3; ++other)
        if (other != part) g.add_edge(host.locate(part, idx), hubs[other - 1]);
  for (int part = 4; part <= k; ++part)
    for (int idx = 1; idx <= n; ++idx)
      for (int hub : hubs) g.add_edge(host.locate(part, idx), hub);
  return {std::move(g), std::move(hubs), {}, {}};
}

ConstructionArtifacts build_gknt(int k, int n, int t) {
  validate({Kind::Gknt, k, n, t});
  Host host(k, n);
  Subgraph g(host);
  int hub_parts = 2 * t - 4;
  std::vector<int> hubs;
  for (int p = 1; p <= hub_parts; ++p) hubs.push_back(host.locate(p, 1));

  // clique on the hubs minus the matching {v1 v2, v3 v4, ...}
  for (int p = 1; p <= hub_parts; ++p)
    for (int q = p + 1; q <= hub_parts; ++q)
      if (!(q == p + 1 && p % 2 == 1)) g.add_edge(hubs[p - 1], hubs[q - 1]);

  // complete join between the non-hub remainders of each matched part pair
  for (int r = 1; r <= 2 * t - 5; r += 2)
    for (int i = 2; i <= n; ++i)
      for (int j = 2; j <= n; ++j)
        g.add_edge(host.locate(r, i), host.locate(r + 1, j));

  join_hubs_to_complement(g, hubs, as_set(hubs, host.vertex_count()));

  std::vector<std::string> notes;
  if (t == 3) notes.push_back("matching degenerates to the single edge v1^1 v2^1");
  return {std::move(g), std::move(hubs), {}, std::move(notes)};
}

ConstructionArtifacts build_hknt(int k, int n, int t) {
  validate({Kind::Hknt, k, n, t});
  Host host(k, n);
  Subgraph g(host);
  int hub_parts = 2 * t - 3;
  std::vector<int> hubs;
  for (int p = 1; p <= hub_parts; ++p) hubs.push_back(host.locate(p, 1));

  // clique on the hubs minus every pair at plain index difference t-2 or t-1
  std::vector<std::vector<int>> removed(hub_parts + 1);
  for (int r = 1; r <= hub_parts; ++r)
    for (int s = r + 1; s <= hub_parts; ++s) {
      int d = s - r;
      if (d == t - 2 || d == t - 1) {
        removed[r].push_back(s);
        removed[s].push_back(r);
      } else {
        g.add_edge(hubs[r - 1], hubs[s - 1]);
      }
    }
  // the removed pairs must form one spanning cycle on the hubs; since
  // (t-1) + (t-2) = 2t-3, both differences are the same circulant step and
  // gcd(2t-3, t-2) = 1, but assert rather than trust the arithmetic
  for (int r = 1; r <= hub_parts; ++r)
    if (removed[r].size() != 2)
      throw std::logic_error("hknt removed pairs do not form a 2-regular graph");
  int walked = 1, prev = 1, cur = removed[1][0];
  while (cur != 1) {
    int next = removed[cur][0] == prev ? removed[cur][1] : removed[cur][0];
    prev = cur;
    cur = next;
    ++walked;
  }
  if (walked != hub_parts)
    throw std::logic_error("hknt removed pairs split into several cycles");

  join_hubs_to_complement(g, hubs, as_set(hubs, host.vertex_count()));

  return {std::move(g),
          std::move(hubs),
          {},
          {"hub set uses one vertex per part: v_s^1 for s <= 2t-3",
           "removed cycle pairs use plain index differences t-2 and t-1"}};
}

ConstructionArtifacts build_fknt(int k, int n, int t) {
  validate({Kind::Fknt, k, n, t});
  Host host(k, n);
  Subgraph g(host);

  // One designated (t-2)-clique per (t-2)-subset R of {1..t}, built in
  // lexicographic order.  The first clique takes a fresh vertex in each of
  // parts 1..t-2.  Every later R reuses, from the designated clique of an
  // earlier subset containing all of R but its maximum, the t-3 vertices in
  // parts R minus max(R), and joins them to one fresh vertex in part max(R).
  auto subsets = subsets_lex(t, t - 2);
  std::map<std::vector<int>, std::vector<int>> designated;  // R -> clique
  std::vector<int> used(k + 1, 0);                          // per-part fresh count
  auto fresh = [&](int part) { return host.locate(part, ++used[part]); };

  std::vector<int> first_clique;
  for (int p = 1; p <= t - 2; ++p) first_clique.push_back(fresh(p));
  for (std::size_t a = 0; a < first_clique.size(); ++a)
    for (std::size_t b = a + 1; b < first_clique.size(); ++b)
      g.add_edge(first_clique[a], first_clique[b]);
  designated[subsets.front()] = first_clique;

  for (std::size_t r = 1; r < subsets.size(); ++r) {
    const std::vector<int>& set = subsets[r];
    int maxel = set.back();
    std::vector<int> low(set.begin(), set.end() - 1);
    // predecessor: the lexicographically greatest earlier subset containing
    // all of `low`, i.e. low + the largest unused element below max(R)
    int x = maxel - 1;
    while (std::find(low.begin(), low.end(), x) != low.end()) --x;
    std::vector<int> pred = low;
    pred.push_back(x);
    std::sort(pred.begin(), pred.end());
    const std::vector<int>& pred_clique = designated.at(pred);

    std::vector<int> clique;
    for (int v : pred_clique)
      if (std::find(low.begin(), low.end(), host.part_of(v)) != low.end())
        clique.push_back(v);
    int w = fresh(maxel);
    for (int v : clique) g.add_edge(w, v);
    clique.push_back(w);
    designated[set] = std::move(clique);
  }

  std::vector<int> hubs;
  for (int p = 1; p <= k; ++p)
    for (int i = 1; i <= used[p]; ++i) hubs.push_back(host.locate(p, i));
  std::sort(hubs.begin(), hubs.end());

  for (const auto& [set, clique] : designated)
    for (std::size_t a = 0; a < clique.size(); ++a)
      for (std::size_t b = a + 1; b < clique.size(); ++b)
        if (!g.has_edge(clique[a], clique[b]))
          throw std::logic_error("fknt designated clique is not complete");

  VertexSet s_members = as_set(hubs, host.vertex_count());
  join_hubs_to_complement(g, hubs, s_members);

  // greedy completion over hub pairs in canonical edge order: an edge goes
  // in iff it closes no K_t at that moment (rejections are permanent, since
  // adding edges never shrinks a common neighborhood)
  std::vector<Edge> completion;
  for (std::size_t a = 0; a < hubs.size(); ++a)
    for (std::size_t b = a + 1; b < hubs.size(); ++b) {
      int u = hubs[a], v = hubs[b];
      if (host.part_of(u) == host.part_of(v) || g.has_edge(u, v)) continue;
      if (!completes_kt_exists(g, Edge(u, v), t)) {
        g.add_edge(u, v);
        completion.emplace_back(u, v);
      }
    }

  return {std::move(g),
          std::move(hubs),
          std::move(completion),
          {"fresh hub vertices take the lowest unused index in their part",
           "predecessor clique: lexicographically greatest earlier subset "
           "containing all but the maximum",
           "greedy completion scans hub pairs in ascending canonical order"}};
}

ConstructionArtifacts build_iknt(int k, int n, int t) {
  validate({Kind::Iknt, k, n, t});
  Host host(k, n);
  Subgraph g(host);
  int s_parts = 3 * (t - 2) / 2;

  std::vector<int> hubs;
  for (int p = 1; p <= s_parts; ++p) {
    hubs.push_back(host.locate(p, 1));
    hubs.push_back(host.locate(p, 2));
  }
  // induced subgraph of the host on S: all cross-part pairs
  for (std::size_t a = 0; a < hubs.size(); ++a)
    for (std::size_t b = a + 1; b < hubs.size(); ++b)
      if (host.part_of(hubs[a]) != host.part_of(hubs[b]))
        g.add_edge(hubs[a], hubs[b]);

  auto delete_triangle = [&](int p1, int p2, int p3, int idx) {
    int a = host.locate(p1, idx), b = host.locate(p2, idx),
        c = host.locate(p3, idx);
    if (!g.remove_edge(a, b) || !g.remove_edge(a, c) || !g.remove_edge(b, c))
      throw std::logic_error("iknt triangle deleted twice");
  };
  auto delete_block = [&](int base) {
    delete_triangle(base + 1, base + 2, base + 3, 1);
    delete_triangle(base + 4, base + 5, base + 6, 1);
    delete_triangle(base + 1, base + 3, base + 5, 2);
    delete_triangle(base + 2, base + 4, base + 6, 2);
  };

  std::vector<std::string> notes;
  if (t % 4 == 2) {
    for (int i = 0; i < (t - 2) / 4; ++i) delete_block(6 * i);
  } else {
    // regular six-part blocks stop early enough to leave the last nine
    // parts to the 3x3 tail pattern, tiling every part exactly once
    for (int i = 0; i < (t - 8) / 4; ++i) delete_block(6 * i);
    int m = s_parts;
    delete_triangle(m - 8, m - 7, m - 6, 1);
    delete_triangle(m - 5, m - 4, m - 3, 1);
    delete_triangle(m - 2, m - 1, m, 1);
    delete_triangle(m - 8, m - 5, m - 2, 2);
    delete_triangle(m - 7, m - 4, m - 1, 2);
    delete_triangle(m - 6, m - 3, m, 2);
    notes.push_back("regular deletion blocks stop before the nine-part tail");
  }

  join_hubs_to_complement(g, hubs, as_set(hubs, host.vertex_count()));

  return {std::move(g), std::move(hubs), {}, std::move(notes)};
}

ConstructionArtifacts build(const ConstructionSpec& spec) {
  validate(spec);
  switch (spec.kind) {
    case Kind::G1: return build_g1(spec.k, spec.n);
    case Kind::G2: return build_g2(spec.k, spec.n);
    case Kind::Gknt: return build_gknt(spec.k, spec.n, spec.t);
    case Kind::Hknt: return build_hknt(spec.k, spec.n, spec.t);
    case Kind::Fknt: return build_fknt(spec.k, spec.n, spec.t);
    case Kind::Iknt: return build_iknt(spec.k, spec.n, spec.t);
  }
  throw ParameterDomainError("unknown construction kind");
}

long long size_formula(const ConstructionSpec& spec) {
  validate(spec);
  long long k = spec.k, n = spec.n, t = spec.t;
  switch (spec.kind) {
    case Kind::G1:
      return 2 * k * n + n * n - 4 * n - 1;
    case Kind::G2:
      return 3 * k * n - 3 * n - 6;
    case Kind::Gknt:
      return (t - 2) * n * n + (2 * t - 4) * k * n - 2 * (2 * t - 4) * n -
             binom2(2 * t - 4);
    case Kind::Hknt:
      return (2 * t - 3) * k * n - (2 * t - 3) * n - (2 * t - 3) * (t - 1);
    case Kind::Fknt:
    case Kind::Iknt:
      throw NoClosedFormError(std::string(kind_name(spec.kind)) +
                              " has no closed-form size; build and count");
  }
  throw ParameterDomainError("unknown construction kind");
}

K3Min sat_k3_formula(int k, int n) {
  long long g1 = size_formula({Kind::G1, k, n, 3});
  long long g2 = size_formula({Kind::G2, k, n, 3});
  // k >= n - 1 + 5/n over the integers, G1 on equality
  bool g1_side = static_cast<long long>(n) * k >=
                 static_cast<long long>(n) * n - n + 5;
  return {std::min(g1, g2), g1_side ? Kind::G1 : Kind::G2};
}

long long general_bound_formula(int k, int n, int t) {
  if (t < 3) throw ParameterDomainError("t must be >= 3");
  if (k < 2 * t - 3)
    throw ParameterDomainError("general bound needs k >= 2t-3 = " +
                               std::to_string(2 * t - 3));
  return std::min(size_formula({Kind::Gknt, k, n, t}),
                  size_formula({Kind::Hknt, k, n, t}));
}

}  // namespace satgraph
