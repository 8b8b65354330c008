#ifndef MATCHKIT_PROPERTIES_HPP
#define MATCHKIT_PROPERTIES_HPP

#include <optional>
#include <string>

#include "matchkit/graph.hpp"
#include "matchkit/matching.hpp"

namespace matchkit {

enum class Reason {
  ok,
  disconnected,
  wrong_parity,
  param_out_of_range,
  no_k_matching,
  non_extendable_matching,
  bad_subset,
  not_bipartite,
  unbalanced_bipartition,
  edge_removal_survives,
};

const char* reason_name(Reason r);

/// Decision outcome with a falsifying witness. The witness is always the
/// lexicographically first counterexample the decider encounters, so reports
/// are stable run to run.
struct Verdict {
  bool holds = false;
  Reason reason = Reason::ok;
  std::optional<Matching> matching;   // failing / non-extendable matching
  std::optional<VertexSet> vertex_set;  // failing deletion set S
  std::optional<Edge> edge;           // edge whose removal survives
  std::optional<int> vertex;          // v for the per-vertex deciders

  /// Parity/range/bipartiteness violations mean the question is ill-posed
  /// for this graph, not that the property fails; corpus drivers treat
  /// these as "hypothesis unmet".
  bool ill_posed() const {
    return reason == Reason::wrong_parity ||
           reason == Reason::param_out_of_range ||
           reason == Reason::not_bipartite;
  }

  static Verdict yes() { return Verdict{true, Reason::ok, {}, {}, {}, {}}; }
  static Verdict no(Reason r) { return Verdict{false, r, {}, {}, {}, {}}; }

  /// Witness rendered per the CLI conventions: matchings as sorted (u,v)
  /// pairs, vertex sets as sorted integer lists.
  std::string witness_kind() const;
  std::string witness_text() const;
};

/// k-extendable: connected, has a k-matching, and every k-matching lies in a
/// perfect matching.
Verdict is_k_extendable(const Graph& g, int k, Budget* budget = nullptr);

/// k½-extendable: odd order, and for every vertex v, G−v has a k-matching
/// and every such matching lies in a perfect matching of G−v.
Verdict is_half_extendable(const Graph& g, int k, Budget* budget = nullptr);

/// n-factor-critical: G−S has a perfect matching for every |S|=n.
Verdict is_factor_critical(const Graph& g, int n, Budget* budget = nullptr);

struct PropertySpec {
  enum class Kind { extendable, factor_critical };
  Kind kind;
  int param;

  static PropertySpec extendable(int k) { return {Kind::extendable, k}; }
  static PropertySpec factor_critical(int n) {
    return {Kind::factor_critical, n};
  }
};

Verdict decide(const Graph& g, PropertySpec prop, Budget* budget = nullptr);

/// Minimality: the property holds but is lost by deleting any single edge.
Verdict is_minimal(const Graph& g, PropertySpec prop, Budget* budget = nullptr);

/// Bipartite analogue of 2k-factor-criticality: removing any k vertices from
/// each side leaves a graph with a perfect matching.
Verdict is_balanced_bipartite_critical(const Graph& g, int k,
                                       Budget* budget = nullptr);

struct Profile {
  std::optional<int> max_extendability;
  std::optional<int> max_half_extendability;
  std::optional<int> max_factor_criticality;
};

Profile profile(const Graph& g, Budget* budget = nullptr);

}  // namespace matchkit

#endif
