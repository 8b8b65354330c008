#ifndef MATCHKIT_GRAPH_HPP
#define MATCHKIT_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace matchkit {

// One adjacency row per vertex, one bit per neighbour.
inline constexpr int kMaxVertices = 64;

class capacity_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class budget_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Enumeration budget shared by the long-running deciders. charge() throws
/// budget_error once the cap is hit, so a runaway scan aborts instead of
/// appearing hung.
struct Budget {
  std::uint64_t limit = 0;
  std::uint64_t used = 0;

  void charge(std::uint64_t amount = 1) {
    used += amount;
    if (used > limit)
      throw budget_error("enumeration budget exhausted: limit " +
                         std::to_string(limit) + " operations");
  }
};

inline void charge(Budget* b, std::uint64_t amount = 1) {
  if (b) b->charge(amount);
}

/// Subset of the vertices of some graph, as a 64-bit mask.
struct VertexSet {
  std::uint64_t bits = 0;

  VertexSet() = default;
  explicit VertexSet(std::uint64_t b) : bits(b) {}
  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
  }
  static VertexSet range(int lo, int hi) {  // [lo, hi)
    VertexSet s;
    for (int v = lo; v < hi; ++v) s.add(v);
    return s;
  }

  void add(int v) { bits |= std::uint64_t{1} << v; }
  void remove(int v) { bits &= ~(std::uint64_t{1} << v); }
  bool contains(int v) const { return bits >> v & 1; }
  int size() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint64_t m = bits; m; m &= m - 1)
      out.push_back(std::countr_zero(m));
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

/// Unordered pair of distinct vertices, normalized to u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
    if (a == b) throw std::domain_error("edge endpoints must be distinct");
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable-by-convention simple undirected graph on at most 64 vertices.
/// Adjacency is one machine word per vertex; all structural operations below
/// are pure functions returning fresh graphs.
class Graph {
public:
  Graph() = default;
  explicit Graph(int order) : order_(order), adj_(check_order(order), 0) {}

  static Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
  }
  static Graph edgeless(int n) { return Graph(n); }
  static Graph cycle(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
  }
  static Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
  }

  int order() const { return order_; }
  std::uint64_t vertex_mask() const {
    return order_ == 64 ? ~std::uint64_t{0}
                        : (std::uint64_t{1} << order_) - 1;
  }

  bool adjacent(int u, int v) const { return adj_[u] >> v & 1; }
  std::uint64_t neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return std::popcount(adj_[v]); }

  void add_edge(int u, int v) {
    if (u == v) throw std::domain_error("self-loops are not allowed");
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
  }
  void remove_edge(int u, int v) {
    adj_[u] &= ~(std::uint64_t{1} << v);
    adj_[v] &= ~(std::uint64_t{1} << u);
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (auto row : adj_) twice += std::popcount(row);
    return twice / 2;
  }

  /// All edges, sorted lexicographically as (u, v) with u < v.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  static std::size_t check_order(int n) {
    if (n < 0 || n > kMaxVertices)
      throw capacity_error("graph order must be in [0, 64], got " +
                           std::to_string(n));
    return static_cast<std::size_t>(n);
  }

  int order_ = 0;
  std::vector<std::uint64_t> adj_;
};

/// Disjoint union; the second graph's vertices are shifted by ν(g1).
Graph disjoint_union(const Graph& g1, const Graph& g2);

/// Disjoint union plus every cross edge.
Graph join(const Graph& g1, const Graph& g2);

/// Induced subgraph on V(g)\s with order-preserving compaction.
/// relabel[new] = old, so witnesses can be mapped back to input labels.
struct DeletionResult {
  Graph graph;
  std::vector<int> relabel;
};
DeletionResult delete_vertices(const Graph& g, VertexSet s);

Graph delete_edge(const Graph& g, Edge e);

bool is_connected(const Graph& g);

/// Connectivity restricted to a vertex subset (induced subgraph).
bool is_connected_on(const Graph& g, std::uint64_t subset);

struct Bipartition {
  VertexSet u;
  VertexSet w;
};

/// 2-coloring if one exists; the lowest-index vertex of each component is
/// assigned to U.
std::optional<Bipartition> bipartition(const Graph& g);

inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

/// κ(G). Complete graphs give ν−1, disconnected graphs 0; otherwise the
/// minimum over non-adjacent pairs of vertex-disjoint path counts via
/// vertex-split max flow.
int vertex_connectivity(const Graph& g);

int min_degree(const Graph& g);

/// e(X,Y): edges with one endpoint in x and the other in y.
std::size_t cross_edge_count(const Graph& g, VertexSet x, VertexSet y);

}  // namespace matchkit

#endif
