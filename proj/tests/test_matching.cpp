#include <doctest.h>

#include "matchkit/graph6.hpp"
#include "matchkit/matching.hpp"
#include "test_oracles.hpp"

using namespace matchkit;
namespace oracle = matchkit::testing;

TEST_CASE("maximum matching on small graphs") {
  CHECK(maximum_matching(Graph::complete(4)).size() == 2);
  CHECK(maximum_matching(Graph::cycle(5)).size() == 2);
  CHECK(maximum_matching(Graph(0)).size() == 0);
  CHECK(maximum_matching(oracle::petersen()).size() == 5);
  CHECK(brute_force_max_matching(oracle::petersen()) == 5);
}

TEST_CASE("maximum matching output is a valid matching with no augmenting path") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 400; ++trial) {
    int n = static_cast<int>(rng() % 11);
    Graph g = oracle::random_graph(n, 0.35, rng);
    Matching m = maximum_matching(g);
    std::uint64_t covered = 0;
    for (Edge e : m.edges) {
      CHECK(g.adjacent(e.u, e.v));
      std::uint64_t pair = std::uint64_t{1} << e.u | std::uint64_t{1} << e.v;
      CHECK((covered & pair) == 0);
      covered |= pair;
    }
    CHECK(covered == m.covered);
    CHECK_FALSE(oracle::has_augmenting_path(g, m));
  }
}

TEST_CASE("blossom agrees with the exhaustive brancher on every labeled graph up to 6 vertices") {
  for (int n = 0; n <= 6; ++n) {
    std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      Graph g(n);
      int bit = 0;
      for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++bit)
          if (mask >> bit & 1) g.add_edge(row, col);
      CHECK(maximum_matching(g).size() == brute_force_max_matching(g));
    }
  }
}

TEST_CASE("blossom agrees with the brancher on random graphs up to 16 vertices") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    int n = static_cast<int>(rng() % 17);
    Graph g = oracle::random_graph(n, 0.3, rng);
    CHECK(maximum_matching(g).size() == brute_force_max_matching(g));
  }
  CHECK_THROWS_AS(brute_force_max_matching(Graph::complete(17)), budget_error);
}

TEST_CASE("tutte-berge upper bound, with equality attained for some subset") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    Graph g = oracle::random_graph(n, 0.35, rng);
    int matched = maximum_matching(g).size();
    bool equality = false;
    std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t s = 0; s < total; ++s) {
      std::uint64_t rest = g.vertex_mask() & ~s;
      int odd_components = 0;
      std::uint64_t left = rest;
      while (left) {
        std::uint64_t comp = left & (~left + 1);
        while (true) {
          std::uint64_t grown = comp;
          for (std::uint64_t m = comp; m; m &= m - 1)
            grown |= g.neighbors(std::countr_zero(m)) & rest;
          if (grown == comp) break;
          comp = grown;
        }
        if (std::popcount(comp) % 2 == 1) ++odd_components;
        left &= ~comp;
      }
      int bound = (n - odd_components + std::popcount(s)) / 2;
      CHECK(matched <= bound);
      if (matched == bound) equality = true;
    }
    CHECK(equality);  // Tutte-Berge is an exact min
  }
}

TEST_CASE("perfect matching tests") {
  CHECK(has_perfect_matching(Graph::complete(2)));
  CHECK_FALSE(has_perfect_matching(join(Graph::complete(1), Graph::edgeless(3))));
  CHECK_FALSE(has_perfect_matching(disjoint_union(Graph::complete(3), Graph::complete(1))));
  CHECK(has_perfect_matching(Graph(0)));
}

TEST_CASE("matching enumeration order and counts") {
  std::vector<Matching> seen;
  enumerate_matchings(Graph::complete(4), 1, [&](const Matching& m) {
    seen.push_back(m);
    return true;
  });
  CHECK(seen.size() == 6);
  CHECK(seen.front().edges == std::vector<Edge>{Edge(0, 1)});
  CHECK(seen.back().edges == std::vector<Edge>{Edge(2, 3)});

  std::size_t perfect = 0;
  enumerate_matchings(Graph::complete(4), 2, [&](const Matching&) {
    ++perfect;
    return true;
  });
  CHECK(perfect == 3);

  std::size_t alternating = 0;
  enumerate_matchings(Graph::cycle(6), 3, [&](const Matching&) {
    ++alternating;
    return true;
  });
  CHECK(alternating == 2);
}

TEST_CASE("enumeration is lexicographic and stops on demand") {
  std::vector<std::vector<Edge>> lists;
  enumerate_matchings(Graph::complete(5), 2, [&](const Matching& m) {
    lists.push_back(m.edges);
    return true;
  });
  CHECK(std::is_sorted(lists.begin(), lists.end()));

  int calls = 0;
  bool completed = enumerate_matchings(Graph::complete(5), 2, [&](const Matching&) {
    return ++calls < 3;
  });
  CHECK_FALSE(completed);
  CHECK(calls == 3);
}

TEST_CASE("enumeration count matches naive subset filtering") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g = oracle::random_graph(n, 0.5, rng);
    if (g.edge_count() > 20) continue;
    for (int k = 0; k <= 3; ++k) {
      std::uint64_t streamed = 0;
      enumerate_matchings(g, k, [&](const Matching&) {
        ++streamed;
        return true;
      });
      CHECK(streamed == oracle::naive_count_k_matchings(g, k));
    }
  }
}

TEST_CASE("enumeration charges the budget") {
  Budget tiny{5};
  CHECK_THROWS_AS(
      enumerate_matchings(Graph::complete(6), 2,
                          [](const Matching&) { return true; }, &tiny),
      budget_error);
}

TEST_CASE("extends_to_perfect") {
  CHECK(extends_to_perfect(Graph::cycle(6), Matching::of({Edge(0, 1)})));
  CHECK_FALSE(extends_to_perfect(Graph::path(4), Matching::of({Edge(1, 2)})));

  // any 2-matching of the k=2 G family extends
  Graph side = disjoint_union(Graph::complete(3), Graph::complete(1));
  Graph g2 = join(side, side);
  enumerate_matchings(g2, 2, [&](const Matching& m) {
    CHECK(extends_to_perfect(g2, m));
    return true;
  });

  CHECK(extends_to_perfect(Graph::complete(4), Matching{}) ==
        has_perfect_matching(Graph::complete(4)));
  CHECK(extends_to_perfect(Graph::cycle(5), Matching{}) ==
        has_perfect_matching(Graph::cycle(5)));

  CHECK_THROWS_AS(extends_to_perfect(Graph::cycle(6), Matching::of({Edge(0, 2)})),
                  std::domain_error);
  Matching overlapping;
  overlapping.edges = {Edge(0, 1), Edge(1, 2)};
  CHECK_THROWS_AS(extends_to_perfect(Graph::cycle(6), overlapping),
                  std::domain_error);
}

TEST_CASE("extends_to_perfect(g, empty) equals has_perfect_matching on random graphs") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::random_graph(static_cast<int>(rng() % 12), 0.4, rng);
    CHECK(extends_to_perfect(g, Matching{}) == has_perfect_matching(g));
  }
}
