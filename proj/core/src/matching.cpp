#include "matchkit/matching.hpp"

#include <array>
#include <bit>

namespace matchkit {

namespace {

// Edmonds' blossom algorithm with base-array contraction, restricted to an
// allowed-vertex mask so property deciders never have to copy subgraphs.
struct BlossomSearch {
  const Graph& g;
  std::uint64_t allowed;
  int n;
  std::array<int, kMaxVertices> match{};
  std::array<int, kMaxVertices> parent{};
  std::array<int, kMaxVertices> base{};
  std::array<int, kMaxVertices> queue{};

  BlossomSearch(const Graph& graph, std::uint64_t mask)
      : g(graph), allowed(mask), n(graph.order()) {
    match.fill(-1);
    // Deterministic greedy seed.
    for (int v = 0; v < n; ++v) {
      if (!(allowed >> v & 1) || match[v] != -1) continue;
      std::uint64_t nb = g.neighbors(v) & allowed;
      while (nb) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        if (match[u] == -1) {
          match[v] = u;
          match[u] = v;
          break;
        }
      }
    }
  }

  int lowest_common_base(int a, int b) {
    std::uint64_t on_path = 0;
    while (true) {
      a = base[a];
      on_path |= std::uint64_t{1} << a;
      if (match[a] == -1) break;
      a = parent[match[a]];
    }
    while (true) {
      b = base[b];
      if (on_path >> b & 1) return b;
      b = parent[match[b]];
    }
  }

  void mark_blossom_path(int v, int stem, int child, std::uint64_t& in_blossom) {
    while (base[v] != stem) {
      in_blossom |= std::uint64_t{1} << base[v];
      in_blossom |= std::uint64_t{1} << base[match[v]];
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  }

  // BFS for an augmenting path from root; returns its free endpoint or -1.
  int find_augmenting_path(int root, std::uint64_t& visited) {
    parent.fill(-1);
    for (int i = 0; i < n; ++i) base[i] = i;
    visited = std::uint64_t{1} << root;
    int head = 0, tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      int v = queue[head++];
      std::uint64_t nb = g.neighbors(v) & allowed;
      while (nb) {
        int to = std::countr_zero(nb);
        nb &= nb - 1;
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
          // Odd cycle: contract the blossom.
          int stem = lowest_common_base(v, to);
          std::uint64_t in_blossom = 0;
          mark_blossom_path(v, stem, to, in_blossom);
          mark_blossom_path(to, stem, v, in_blossom);
          for (int i = 0; i < n; ++i)
            if (in_blossom >> base[i] & 1) {
              base[i] = stem;
              if (!(visited >> i & 1)) {
                visited |= std::uint64_t{1} << i;
                queue[tail++] = i;
              }
            }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (match[to] == -1) return to;
          visited |= std::uint64_t{1} << match[to];
          queue[tail++] = match[to];
        }
      }
    }
    return -1;
  }

  void augment(int v) {
    while (v != -1) {
      int pv = parent[v];
      int next = match[pv];
      match[v] = pv;
      match[pv] = v;
      v = next;
    }
  }

  void solve() {
    std::uint64_t visited = 0;
    for (int v = 0; v < n; ++v) {
      if (!(allowed >> v & 1) || match[v] != -1) continue;
      int endpoint = find_augmenting_path(v, visited);
      if (endpoint != -1) augment(endpoint);
    }
  }
};

}  // namespace

Matching maximum_matching_on(const Graph& g, std::uint64_t allowed) {
  allowed &= g.vertex_mask();
  BlossomSearch search(g, allowed);
  search.solve();
  Matching m;
  for (int v = 0; v < g.order(); ++v)
    if (search.match[v] > v) m.push(Edge(v, search.match[v]));
  return m;
}

int maximum_matching_size_on(const Graph& g, std::uint64_t allowed) {
  allowed &= g.vertex_mask();
  BlossomSearch search(g, allowed);
  search.solve();
  int matched = 0;
  for (int v = 0; v < g.order(); ++v)
    if ((allowed >> v & 1) && search.match[v] != -1) ++matched;
  return matched / 2;
}

bool has_perfect_matching_on(const Graph& g, std::uint64_t subset) {
  subset &= g.vertex_mask();
  int members = std::popcount(subset);
  if (members % 2 != 0) return false;
  return maximum_matching_size_on(g, subset) == members / 2;
}

bool extends_to_perfect(const Graph& g, const Matching& m) {
  std::uint64_t covered = 0;
  for (Edge e : m.edges) {
    if (e.v >= g.order() || !g.adjacent(e.u, e.v))
      throw std::domain_error("matching contains an edge not in the graph");
    std::uint64_t pair = std::uint64_t{1} << e.u | std::uint64_t{1} << e.v;
    if (covered & pair)
      throw std::domain_error("matching edges are not vertex-disjoint");
    covered |= pair;
  }
  if (g.order() % 2 != 0) return false;
  return has_perfect_matching_on(g, g.vertex_mask() & ~covered);
}

namespace {

int brute_force_rec(const Graph& g, std::uint64_t free) {
  if (free == 0) return 0;
  int v = std::countr_zero(free);
  std::uint64_t rest = free & ~(std::uint64_t{1} << v);
  int best = brute_force_rec(g, rest);  // leave v uncovered
  std::uint64_t nb = g.neighbors(v) & rest;
  while (nb) {
    int u = std::countr_zero(nb);
    nb &= nb - 1;
    best = std::max(
        best, 1 + brute_force_rec(g, rest & ~(std::uint64_t{1} << u)));
  }
  return best;
}

}  // namespace

int brute_force_max_matching(const Graph& g) {
  if (g.order() > 16)
    throw budget_error("brute_force_max_matching is limited to 16 vertices");
  return brute_force_rec(g, g.vertex_mask());
}

}  // namespace matchkit
