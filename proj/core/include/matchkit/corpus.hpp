#ifndef MATCHKIT_CORPUS_HPP
#define MATCHKIT_CORPUS_HPP

#include <functional>
#include <string>

#include "matchkit/graph.hpp"

namespace matchkit {

struct Filters {
  bool connected = false;
  bool even_order = false;
  bool odd_order = false;
  bool non_bipartite = false;
  int min_degree = 0;
};

bool passes_filters(const Graph& g, const Filters& f);

/// Description of a graph stream: either every labeled graph on a fixed
/// vertex count (ν ≤ 8) or the lines of a graph6 file, both after filters.
struct CorpusSpec {
  enum class Source { builtin_labeled, graph6_file };
  Source source = Source::builtin_labeled;
  int order = 0;        // builtin only
  std::string path;     // file only
  Filters filters;

  static CorpusSpec builtin(int order, Filters f = {}) {
    return {Source::builtin_labeled, order, "", f};
  }
  static CorpusSpec file(std::string path, Filters f = {}) {
    return {Source::graph6_file, 0, std::move(path), f};
  }

  std::string describe() const;
};

/// Streams the corpus in deterministic order. The callback returns false to
/// stop. Throws on unreadable files, malformed lines (with line number), or
/// a builtin order above 8.
void enumerate_corpus(const CorpusSpec& spec,
                      const std::function<bool(const Graph&)>& fn);

/// Labeled graph on `order` vertices from an edge-subset index: bit i of
/// `edge_mask` is the i-th pair (u,v), u < v, in column-major graph6 order.
Graph labeled_graph_from_mask(int order, std::uint64_t edge_mask);

/// All connected graphs on n vertices up to isomorphism (n ≤ 10), emitted in
/// a deterministic generation order. Grows graphs one vertex at a time and
/// deduplicates with explicit isomorphism tests behind an invariant hash.
void generate_connected_graphs(int n,
                               const std::function<void(const Graph&)>& sink);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace matchkit

#endif
