#include "matchkit/graph.hpp"

#include <algorithm>
#include <array>

namespace matchkit {

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (int u = 0; u < order_; ++u) {
    std::uint64_t higher = adj_[u] >> (u + 1) << (u + 1);
    while (higher) {
      int v = std::countr_zero(higher);
      higher &= higher - 1;
      out.emplace_back(u, v);
    }
  }
  return out;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  int n1 = g1.order(), n2 = g2.order();
  if (n1 + n2 > kMaxVertices)
    throw capacity_error("union exceeds 64 vertices: " +
                         std::to_string(n1 + n2));
  Graph g(n1 + n2);
  for (Edge e : g1.edges()) g.add_edge(e.u, e.v);
  for (Edge e : g2.edges()) g.add_edge(e.u + n1, e.v + n1);
  return g;
}

Graph join(const Graph& g1, const Graph& g2) {
  Graph g = disjoint_union(g1, g2);
  for (int u = 0; u < g1.order(); ++u)
    for (int v = 0; v < g2.order(); ++v) g.add_edge(u, g1.order() + v);
  return g;
}

DeletionResult delete_vertices(const Graph& g, VertexSet s) {
  if (s.bits & ~g.vertex_mask())
    throw std::domain_error("deleted set contains vertices outside the graph");
  std::uint64_t keep = g.vertex_mask() & ~s.bits;
  std::vector<int> relabel;
  std::array<int, kMaxVertices> to_new{};
  for (std::uint64_t m = keep; m; m &= m - 1) {
    int old = std::countr_zero(m);
    to_new[old] = static_cast<int>(relabel.size());
    relabel.push_back(old);
  }
  Graph out(static_cast<int>(relabel.size()));
  for (int u = 0; u < g.order(); ++u) {
    if (!(keep >> u & 1)) continue;
    std::uint64_t nb = g.neighbors(u) & keep;
    nb = nb >> (u + 1) << (u + 1);
    while (nb) {
      int v = std::countr_zero(nb);
      nb &= nb - 1;
      out.add_edge(to_new[u], to_new[v]);
    }
  }
  return {std::move(out), std::move(relabel)};
}

Graph delete_edge(const Graph& g, Edge e) {
  if (e.v >= g.order() || !g.adjacent(e.u, e.v))
    throw std::domain_error("edge (" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + ") is not in the graph");
  Graph out = g;
  out.remove_edge(e.u, e.v);
  return out;
}

bool is_connected_on(const Graph& g, std::uint64_t subset) {
  if (subset == 0) return true;
  std::uint64_t reached = subset & (~subset + 1);  // lowest set bit
  while (true) {
    std::uint64_t grown = reached;
    for (std::uint64_t m = reached; m; m &= m - 1)
      grown |= g.neighbors(std::countr_zero(m)) & subset;
    if (grown == reached) break;
    reached = grown;
  }
  return reached == subset;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) throw std::domain_error("connectivity of the empty graph is undefined");
  return is_connected_on(g, g.vertex_mask());
}

std::optional<Bipartition> bipartition(const Graph& g) {
  VertexSet u, w;
  std::uint64_t seen = 0;
  std::array<int, kMaxVertices> queue{};
  for (int root = 0; root < g.order(); ++root) {
    if (seen >> root & 1) continue;
    u.add(root);
    seen |= std::uint64_t{1} << root;
    int qh = 0, qt = 0;
    queue[qt++] = root;
    while (qh < qt) {
      int x = queue[qh++];
      bool x_in_u = u.contains(x);
      std::uint64_t nb = g.neighbors(x);
      while (nb) {
        int y = std::countr_zero(nb);
        nb &= nb - 1;
        if (!(seen >> y & 1)) {
          seen |= std::uint64_t{1} << y;
          (x_in_u ? w : u).add(y);
          queue[qt++] = y;
        } else if (x_in_u == u.contains(y)) {
          return std::nullopt;  // odd cycle
        }
      }
    }
  }
  return Bipartition{u, w};
}

int min_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  int d = kMaxVertices;
  for (int v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

std::size_t cross_edge_count(const Graph& g, VertexSet x, VertexSet y) {
  if (x.bits & y.bits)
    throw std::domain_error("cross_edge_count requires disjoint vertex sets");
  std::size_t count = 0;
  for (std::uint64_t m = x.bits; m; m &= m - 1)
    count += std::popcount(g.neighbors(std::countr_zero(m)) & y.bits);
  return count;
}

namespace {

// Unit-capacity max flow on the vertex-split digraph: node 2v is v's
// entry, 2v+1 its exit. Internal arcs have capacity 1, s and t unbounded.
class VertexFlow {
public:
  explicit VertexFlow(const Graph& g) : n_(g.order()) {
    cap_.assign(static_cast<std::size_t>(2 * n_) * (2 * n_), 0);
    for (int v = 0; v < n_; ++v) at(2 * v, 2 * v + 1) = 1;
    for (Edge e : g.edges()) {
      at(2 * e.u + 1, 2 * e.v) = 1;
      at(2 * e.v + 1, 2 * e.u) = 1;
    }
  }

  int max_flow(int s, int t) {
    auto cap = cap_;
    cap[static_cast<std::size_t>(2 * s) * (2 * n_) + (2 * s + 1)] = n_;
    cap[static_cast<std::size_t>(2 * t) * (2 * n_) + (2 * t + 1)] = n_;
    int source = 2 * s + 1, sink = 2 * t;
    int flow = 0;
    std::vector<int> parent(2 * n_);
    while (true) {
      std::fill(parent.begin(), parent.end(), -1);
      parent[source] = source;
      std::vector<int> queue{source};
      for (std::size_t qi = 0; qi < queue.size() && parent[sink] < 0; ++qi) {
        int x = queue[qi];
        for (int y = 0; y < 2 * n_; ++y)
          if (parent[y] < 0 && cap[static_cast<std::size_t>(x) * (2 * n_) + y] > 0) {
            parent[y] = x;
            queue.push_back(y);
          }
      }
      if (parent[sink] < 0) return flow;
      for (int y = sink; y != source; y = parent[y]) {
        cap[static_cast<std::size_t>(parent[y]) * (2 * n_) + y] -= 1;
        cap[static_cast<std::size_t>(y) * (2 * n_) + parent[y]] += 1;
      }
      ++flow;
    }
  }

private:
  int& at(int x, int y) { return cap_[static_cast<std::size_t>(x) * (2 * n_) + y]; }
  int n_;
  std::vector<int> cap_;
};

}  // namespace

int vertex_connectivity(const Graph& g) {
  int n = g.order();
  if (n < 2) throw std::domain_error("vertex connectivity needs at least 2 vertices");
  if (!is_connected(g)) return 0;
  if (g.edge_count() == static_cast<std::size_t>(n) * (n - 1) / 2) return n - 1;
  VertexFlow flow(g);
  int kappa = n - 1;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if (!g.adjacent(s, t)) kappa = std::min(kappa, flow.max_flow(s, t));
  return kappa;
}

}  // namespace matchkit
