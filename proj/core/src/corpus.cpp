#include "matchkit/corpus.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <unordered_map>

#include "matchkit/graph6.hpp"

namespace matchkit {

bool passes_filters(const Graph& g, const Filters& f) {
  if (f.even_order && g.order() % 2 != 0) return false;
  if (f.odd_order && g.order() % 2 == 0) return false;
  if (f.min_degree > 0 && min_degree(g) < f.min_degree) return false;
  if (f.connected && (g.order() == 0 || !is_connected(g))) return false;
  if (f.non_bipartite && is_bipartite(g)) return false;
  return true;
}

std::string CorpusSpec::describe() const {
  std::string out = source == Source::builtin_labeled
                        ? "builtin-labeled(" + std::to_string(order) + ")"
                        : "graph6-file(" + path + ")";
  if (filters.connected) out += "+connected";
  if (filters.even_order) out += "+even-order";
  if (filters.odd_order) out += "+odd-order";
  if (filters.non_bipartite) out += "+non-bipartite";
  if (filters.min_degree > 0)
    out += "+min-degree>=" + std::to_string(filters.min_degree);
  return out;
}

Graph labeled_graph_from_mask(int order, std::uint64_t edge_mask) {
  Graph g(order);
  int bit = 0;
  for (int col = 1; col < order; ++col)
    for (int row = 0; row < col; ++row, ++bit)
      if (edge_mask >> bit & 1) g.add_edge(row, col);
  return g;
}

void enumerate_corpus(const CorpusSpec& spec,
                      const std::function<bool(const Graph&)>& fn) {
  if (spec.source == CorpusSpec::Source::builtin_labeled) {
    int n = spec.order;
    if (n < 0 || n > 8)
      throw std::out_of_range(
          "builtin labeled enumeration supports at most 8 vertices, got " +
          std::to_string(n));
    std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      Graph g = labeled_graph_from_mask(n, mask);
      if (!passes_filters(g, spec.filters)) continue;
      if (!fn(g)) return;
    }
    return;
  }

  std::ifstream in(spec.path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + spec.path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    Graph g;
    try {
      g = from_graph6(line);
    } catch (const std::exception& err) {
      throw std::runtime_error(spec.path + ":" + std::to_string(line_no) +
                               ": " + err.what());
    }
    if (!passes_filters(g, spec.filters)) continue;
    if (!fn(g)) return;
  }
}

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t combine(std::uint64_t seed, std::uint64_t value) {
  return mix(seed ^ (value + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2)));
}

// Iterated neighbourhood colour refinement (1-WL). Equal colour multisets
// are necessary, not sufficient, for isomorphism; the explicit mapping
// search below settles each bucket exactly.
std::array<std::uint64_t, kMaxVertices> wl_colors(const Graph& g) {
  int n = g.order();
  std::array<std::uint64_t, kMaxVertices> color{};
  for (int v = 0; v < n; ++v) color[v] = mix(static_cast<std::uint64_t>(g.degree(v)));
  std::array<std::uint64_t, kMaxVertices> next{};
  std::vector<std::uint64_t> around;
  for (int round = 0; round < n; ++round) {
    for (int v = 0; v < n; ++v) {
      around.clear();
      std::uint64_t nb = g.neighbors(v);
      while (nb) {
        around.push_back(color[std::countr_zero(nb)]);
        nb &= nb - 1;
      }
      std::sort(around.begin(), around.end());
      std::uint64_t h = color[v];
      for (std::uint64_t c : around) h = combine(h, c);
      next[v] = h;
    }
    color = next;
  }
  return color;
}

std::uint64_t invariant_hash(const Graph& g) {
  auto colors = wl_colors(g);
  std::sort(colors.begin(), colors.begin() + g.order());
  std::uint64_t h = combine(static_cast<std::uint64_t>(g.order()),
                            static_cast<std::uint64_t>(g.edge_count()));
  for (int v = 0; v < g.order(); ++v) h = combine(h, colors[v]);
  return h;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  int n = a.order();
  if (n != b.order() || a.edge_count() != b.edge_count()) return false;
  auto ca = wl_colors(a);
  auto cb = wl_colors(b);
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.begin() + n);
    std::sort(sb.begin(), sb.begin() + n);
    if (!std::equal(sa.begin(), sa.begin() + n, sb.begin())) return false;
  }

  // Map a's vertices, rarest colour class first.
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::unordered_map<std::uint64_t, int> freq;
  for (int v = 0; v < n; ++v) ++freq[ca[v]];
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    int fx = freq[ca[x]], fy = freq[ca[y]];
    if (fx != fy) return fx < fy;
    if (ca[x] != ca[y]) return ca[x] < ca[y];
    return x < y;
  });

  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::uint64_t used_b = 0;
  auto recurse = [&](auto&& self, int depth) -> bool {
    if (depth == n) return true;
    int va = order[static_cast<std::size_t>(depth)];
    for (int vb = 0; vb < n; ++vb) {
      if (used_b >> vb & 1 || cb[vb] != ca[va]) continue;
      bool consistent = true;
      for (int j = 0; j < depth && consistent; ++j)
        consistent = a.adjacent(va, order[static_cast<std::size_t>(j)]) ==
                     b.adjacent(vb, image[static_cast<std::size_t>(j)]);
      if (!consistent) continue;
      image[static_cast<std::size_t>(depth)] = vb;
      used_b |= std::uint64_t{1} << vb;
      if (self(self, depth + 1)) return true;
      used_b &= ~(std::uint64_t{1} << vb);
    }
    return false;
  };
  return recurse(recurse, 0);
}

void generate_connected_graphs(int n,
                               const std::function<void(const Graph&)>& sink) {
  if (n < 1 || n > 10)
    throw std::out_of_range("connected-graph generation supports 1..10 vertices");
  std::vector<Graph> level{Graph::complete(1)};
  for (int m = 2; m <= n; ++m) {
    std::vector<Graph> grown;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets;
    // Every connected graph on m vertices arises by attaching vertex m−1 to
    // a connected graph on m−1 vertices (delete a spanning-tree leaf).
    for (const Graph& parent : level) {
      std::uint64_t attachments = std::uint64_t{1} << (m - 1);
      for (std::uint64_t mask = 1; mask < attachments; ++mask) {
        Graph child(m);
        for (Edge e : parent.edges()) child.add_edge(e.u, e.v);
        for (std::uint64_t bits = mask; bits; bits &= bits - 1)
          child.add_edge(std::countr_zero(bits), m - 1);
        auto& bucket = buckets[invariant_hash(child)];
        bool duplicate = false;
        for (std::uint32_t idx : bucket)
          if (isomorphic(child, grown[idx])) {
            duplicate = true;
            break;
          }
        if (!duplicate) {
          bucket.push_back(static_cast<std::uint32_t>(grown.size()));
          grown.push_back(std::move(child));
        }
      }
    }
    level = std::move(grown);
  }
  for (const Graph& g : level) sink(g);
}

}  // namespace matchkit
