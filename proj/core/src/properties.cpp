#include "matchkit/properties.hpp"

#include <functional>

namespace matchkit {

const char* reason_name(Reason r) {
  switch (r) {
    case Reason::ok: return "ok";
    case Reason::disconnected: return "disconnected";
    case Reason::wrong_parity: return "wrong-parity";
    case Reason::param_out_of_range: return "param-out-of-range";
    case Reason::no_k_matching: return "no-k-matching";
    case Reason::non_extendable_matching: return "non-extendable-matching";
    case Reason::bad_subset: return "bad-subset";
    case Reason::not_bipartite: return "not-bipartite";
    case Reason::unbalanced_bipartition: return "unbalanced-bipartition";
    case Reason::edge_removal_survives: return "edge-removal-survives";
  }
  return "?";
}

std::string Verdict::witness_kind() const {
  if (vertex) return matching ? "vertex-matching" : "vertex";
  if (matching) return "matching";
  if (vertex_set) return "vertex-set";
  if (edge) return "edge";
  return "none";
}

namespace {

std::string matching_text(const Matching& m) {
  std::string out;
  for (Edge e : m.edges)
    out += "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
  return out;
}

std::string vertex_set_text(const VertexSet& s) {
  std::string out = "[";
  bool first = true;
  for (int v : s.members()) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "]";
}

}  // namespace

std::string Verdict::witness_text() const {
  std::string out;
  if (vertex) {
    out = "v=" + std::to_string(*vertex);
    if (matching) out += "; " + matching_text(*matching);
    return out;
  }
  if (matching) return matching_text(*matching);
  if (vertex_set) return vertex_set_text(*vertex_set);
  if (edge)
    return "(" + std::to_string(edge->u) + "," + std::to_string(edge->v) + ")";
  return "";
}

Verdict is_k_extendable(const Graph& g, int k, Budget* budget) {
  int n = g.order();
  if (n % 2 != 0) return Verdict::no(Reason::wrong_parity);
  if (k < 0 || n < 2 || 2 * k > n - 2) return Verdict::no(Reason::param_out_of_range);
  if (!is_connected(g)) return Verdict::no(Reason::disconnected);

  bool any = false;
  Verdict failure;
  bool completed = enumerate_matchings(
      g, k,
      [&](const Matching& m) {
        any = true;
        if (has_perfect_matching_on(g, g.vertex_mask() & ~m.covered))
          return true;
        failure = Verdict::no(Reason::non_extendable_matching);
        failure.matching = m;
        return false;
      },
      budget);
  if (!completed) return failure;
  if (!any) return Verdict::no(Reason::no_k_matching);
  return Verdict::yes();
}

Verdict is_half_extendable(const Graph& g, int k, Budget* budget) {
  int n = g.order();
  if (n % 2 == 0) return Verdict::no(Reason::wrong_parity);
  if (k < 0 || 2 * k > n - 1) return Verdict::no(Reason::param_out_of_range);
  if (!is_connected(g)) return Verdict::no(Reason::disconnected);

  for (int v = 0; v < n; ++v) {
    std::uint64_t without_v = g.vertex_mask() & ~(std::uint64_t{1} << v);
    bool any = false;
    Verdict failure;
    bool completed = enumerate_matchings_on(
        g, k, without_v,
        [&](const Matching& m) {
          any = true;
          if (has_perfect_matching_on(g, without_v & ~m.covered)) return true;
          failure = Verdict::no(Reason::non_extendable_matching);
          failure.vertex = v;
          failure.matching = m;
          return false;
        },
        budget);
    if (!completed) return failure;
    if (!any) {
      Verdict bad = Verdict::no(Reason::no_k_matching);
      bad.vertex = v;
      return bad;
    }
  }
  return Verdict::yes();
}

namespace {

/// n-subsets of the vertex set in lexicographic order of sorted vertex lists.
bool for_each_subset(int order, int n, std::uint64_t& out,
                     const std::function<bool(std::uint64_t)>& fn,
                     Budget* budget) {
  std::uint64_t mask = 0;
  auto recurse = [&](auto&& self, int from, int need) -> bool {
    if (need == 0) {
      charge(budget);
      if (fn(mask)) return true;
      out = mask;
      return false;
    }
    for (int v = from; v + need <= order; ++v) {
      mask |= std::uint64_t{1} << v;
      bool keep_going = self(self, v + 1, need - 1);
      mask &= ~(std::uint64_t{1} << v);
      if (!keep_going) return false;
    }
    return true;
  };
  return recurse(recurse, 0, n);
}

}  // namespace

Verdict is_factor_critical(const Graph& g, int n, Budget* budget) {
  int order = g.order();
  if (n < 0 || n > order - 2) return Verdict::no(Reason::param_out_of_range);
  if (n % 2 != order % 2) return Verdict::no(Reason::wrong_parity);

  std::uint64_t bad = 0;
  bool completed = for_each_subset(
      order, n, bad,
      [&](std::uint64_t s) {
        return has_perfect_matching_on(g, g.vertex_mask() & ~s);
      },
      budget);
  if (!completed) {
    Verdict failure = Verdict::no(Reason::bad_subset);
    failure.vertex_set = VertexSet(bad);
    return failure;
  }
  return Verdict::yes();
}

Verdict decide(const Graph& g, PropertySpec prop, Budget* budget) {
  switch (prop.kind) {
    case PropertySpec::Kind::extendable:
      return is_k_extendable(g, prop.param, budget);
    case PropertySpec::Kind::factor_critical:
      return is_factor_critical(g, prop.param, budget);
  }
  return Verdict::no(Reason::param_out_of_range);
}

Verdict is_minimal(const Graph& g, PropertySpec prop, Budget* budget) {
  Verdict base = decide(g, prop, budget);
  if (!base.holds) return base;
  for (Edge e : g.edges()) {
    if (decide(delete_edge(g, e), prop, budget).holds) {
      Verdict failure = Verdict::no(Reason::edge_removal_survives);
      failure.edge = e;
      return failure;
    }
  }
  return Verdict::yes();
}

Verdict is_balanced_bipartite_critical(const Graph& g, int k, Budget* budget) {
  auto parts = bipartition(g);
  if (!parts) return Verdict::no(Reason::not_bipartite);
  int n = g.order();
  if (k < 1 || 2 * k > n - 2) return Verdict::no(Reason::param_out_of_range);
  if (!is_connected(g)) return Verdict::no(Reason::disconnected);
  if (parts->u.size() != parts->w.size())
    return Verdict::no(Reason::unbalanced_bipartition);

  std::vector<int> side_u = parts->u.members();
  std::vector<int> side_w = parts->w.members();
  int half = static_cast<int>(side_u.size());
  if (k > half) return Verdict::no(Reason::param_out_of_range);

  // Lexicographic k-subsets of U crossed with k-subsets of W.
  std::vector<int> iu(static_cast<std::size_t>(k)), iw(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) iu[i] = i;
  while (true) {
    std::uint64_t mask_u = 0;
    for (int i : iu) mask_u |= std::uint64_t{1} << side_u[i];
    for (int i = 0; i < k; ++i) iw[i] = i;
    while (true) {
      std::uint64_t mask = mask_u;
      for (int i : iw) mask |= std::uint64_t{1} << side_w[i];
      charge(budget);
      if (!has_perfect_matching_on(g, g.vertex_mask() & ~mask)) {
        Verdict failure = Verdict::no(Reason::bad_subset);
        failure.vertex_set = VertexSet(mask);
        return failure;
      }
      int i = k - 1;
      while (i >= 0 && iw[i] == half - k + i) --i;
      if (i < 0) break;
      for (int v = ++iw[i]; ++i < k;) iw[i] = ++v;
    }
    int i = k - 1;
    while (i >= 0 && iu[i] == half - k + i) --i;
    if (i < 0) break;
    for (int v = ++iu[i]; ++i < k;) iu[i] = ++v;
  }
  return Verdict::yes();
}

Profile profile(const Graph& g, Budget* budget) {
  Profile p;
  int n = g.order();
  if (n == 0) return p;
  if (n % 2 == 0) {
    // Extendability is downward monotone for fixed ν, so stop at the first
    // failure.
    for (int k = 0; 2 * k <= n - 2; ++k) {
      if (!is_k_extendable(g, k, budget).holds) break;
      p.max_extendability = k;
    }
  } else {
    for (int k = 0; 2 * k <= n - 1; ++k) {
      if (!is_half_extendable(g, k, budget).holds) break;
      p.max_half_extendability = k;
    }
  }
  // No published monotonicity for factor-criticality: scan every valid n.
  for (int c = n % 2; c <= n - 2; c += 2)
    if (is_factor_critical(g, c, budget).holds) p.max_factor_criticality = c;
  return p;
}

}  // namespace matchkit
