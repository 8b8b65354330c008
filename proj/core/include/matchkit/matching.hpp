#ifndef MATCHKIT_MATCHING_HPP
#define MATCHKIT_MATCHING_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "matchkit/graph.hpp"

namespace matchkit {

/// Set of pairwise vertex-disjoint edges of some graph.
struct Matching {
  std::vector<Edge> edges;      // kept sorted
  std::uint64_t covered = 0;

  int size() const { return static_cast<int>(edges.size()); }

  void push(Edge e) {
    edges.push_back(e);
    covered |= std::uint64_t{1} << e.u | std::uint64_t{1} << e.v;
  }
  void pop() {
    Edge e = edges.back();
    edges.pop_back();
    covered &= ~(std::uint64_t{1} << e.u | std::uint64_t{1} << e.v);
  }

  static Matching of(std::initializer_list<Edge> es) {
    Matching m;
    for (Edge e : es) m.push(e);
    std::sort(m.edges.begin(), m.edges.end());
    return m;
  }
};

/// Maximum-cardinality matching on the vertices selected by `allowed`,
/// via Edmonds' blossom algorithm. Deterministic: vertices and neighbours
/// are always scanned in ascending order.
Matching maximum_matching_on(const Graph& g, std::uint64_t allowed);

inline Matching maximum_matching(const Graph& g) {
  return maximum_matching_on(g, g.vertex_mask());
}

int maximum_matching_size_on(const Graph& g, std::uint64_t allowed);

bool has_perfect_matching_on(const Graph& g, std::uint64_t subset);

inline bool has_perfect_matching(const Graph& g) {
  return has_perfect_matching_on(g, g.vertex_mask());
}

/// True iff m extends to a perfect matching of g.
/// Throws std::domain_error if m is not a matching of g.
bool extends_to_perfect(const Graph& g, const Matching& m);

/// Exhaustive-branching oracle, independent of the blossom path. ν ≤ 16.
int brute_force_max_matching(const Graph& g);

/// Yields every matching of size exactly k among vertices in `allowed`, in
/// lexicographic order of sorted edge lists. The callback returns false to
/// stop early; enumerate_matchings_on itself returns false iff it stopped.
/// Each edge considered charges one unit against the optional budget.
template <typename Fn>
bool enumerate_matchings_on(const Graph& g, int k, std::uint64_t allowed,
                            Fn&& fn, Budget* budget = nullptr) {
  if (k < 0) return true;
  std::vector<Edge> edges;
  for (Edge e : g.edges())
    if ((allowed >> e.u & 1) && (allowed >> e.v & 1)) edges.push_back(e);
  Matching m;
  int total = static_cast<int>(edges.size());

  auto recurse = [&](auto&& self, int from, int need) -> bool {
    if (need == 0) return fn(static_cast<const Matching&>(m));
    for (int i = from; i + need <= total; ++i) {
      charge(budget);
      Edge e = edges[i];
      if (m.covered >> e.u & 1 || m.covered >> e.v & 1) continue;
      m.push(e);
      bool keep_going = self(self, i + 1, need - 1);
      m.pop();
      if (!keep_going) return false;
    }
    return true;
  };
  return recurse(recurse, 0, k);
}

template <typename Fn>
bool enumerate_matchings(const Graph& g, int k, Fn&& fn,
                         Budget* budget = nullptr) {
  return enumerate_matchings_on(g, k, g.vertex_mask(), std::forward<Fn>(fn),
                                budget);
}

}  // namespace matchkit

#endif
