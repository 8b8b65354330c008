#include "matchkit/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <mutex>
#include <random>
#include <thread>

#include <nlohmann/json.hpp>

#include "matchkit/graph6.hpp"
#include "matchkit/matching.hpp"

namespace matchkit {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string render(const ordered_json& j) { return j.dump(); }

}  // namespace

std::string Report::to_jsonl(bool include_elapsed) const {
  std::string out;
  for (const Counterexample& ce : counterexamples) {
    ordered_json j;
    j["claim"] = claim;
    j["graph6"] = ce.graph6;
    j["param"] = ce.param;
    j["witness_kind"] = ce.witness_kind;
    j["witness"] = ce.witness;
    out += render(j);
    out += '\n';
  }
  ordered_json summary;
  summary["claim"] = claim;
  summary["corpus"] = corpus;
  summary["scanned"] = scanned;
  summary["hypothesis_hits"] = hypothesis_hits;
  summary["failures"] = failures();
  summary["elapsed_ms"] = include_elapsed ? elapsed_ms : 0;
  summary["mode"] = sampled ? "sampled" : "exhaustive";
  if (vacuous) summary["vacuous"] = true;
  if (conjecture) summary["conjecture"] = true;
  if (!delta_histogram.empty()) {
    ordered_json hist;
    for (auto [degree, count] : delta_histogram)
      hist[std::to_string(degree)] = count;
    summary["delta_histogram"] = hist;
  }
  out += render(summary);
  out += '\n';
  return out;
}

namespace {

// ---------------------------------------------------------------- scanning

/// Runs fn over every corpus graph. fn must be thread-safe; result ordering
/// is restored by sorting afterwards, so worker scheduling cannot leak into
/// reports.
void scan_corpus(const CorpusSpec& spec, int threads,
                 const std::function<void(const Graph&)>& fn) {
  if (threads <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    threads = hw == 0 ? 1 : static_cast<int>(hw);
  }

  if (threads == 1) {
    enumerate_corpus(spec, [&](const Graph& g) {
      fn(g);
      return true;
    });
    return;
  }

  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto guarded = [&](const Graph& g) {
    try {
      fn(g);
    } catch (...) {
      std::scoped_lock lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };

  if (spec.source == CorpusSpec::Source::builtin_labeled) {
    int n = spec.order;
    if (n < 0 || n > 8)
      throw std::out_of_range("builtin labeled enumeration supports at most 8 vertices");
    std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    std::atomic<std::uint64_t> cursor{0};
    constexpr std::uint64_t kChunk = 4096;
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        while (true) {
          std::uint64_t lo = cursor.fetch_add(kChunk);
          if (lo >= total) break;
          std::uint64_t hi = std::min(lo + kChunk, total);
          for (std::uint64_t mask = lo; mask < hi; ++mask) {
            Graph g = labeled_graph_from_mask(n, mask);
            if (passes_filters(g, spec.filters)) guarded(g);
          }
        }
      });
    for (auto& th : pool) th.join();
  } else {
    std::ifstream in(spec.path);
    if (!in) throw std::runtime_error("cannot open corpus file: " + spec.path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) lines.push_back(line);
    }
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        while (true) {
          std::size_t i = cursor.fetch_add(1);
          if (i >= lines.size()) break;
          Graph g;
          try {
            g = from_graph6(lines[i]);
          } catch (const std::exception& err) {
            std::scoped_lock lock(error_mutex);
            if (!first_error)
              first_error = std::make_exception_ptr(std::runtime_error(
                  spec.path + ":" + std::to_string(i + 1) + ": " + err.what()));
            continue;
          }
          if (passes_filters(g, spec.filters)) guarded(g);
        }
      });
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);
}

void sort_counterexamples(std::vector<Counterexample>& ces) {
  std::sort(ces.begin(), ces.end(), [](const Counterexample& a,
                                       const Counterexample& b) {
    if (a.graph6 != b.graph6) return a.graph6 < b.graph6;
    return a.param < b.param;
  });
}

// ------------------------------------------------------------------ claims

bool ext(const Graph& g, int k) { return is_k_extendable(g, k).holds; }
bool half(const Graph& g, int k) { return is_half_extendable(g, k).holds; }
bool fc(const Graph& g, int n) { return is_factor_critical(g, n).holds; }

ClaimOutcome pass_hyp() { return {true, std::nullopt}; }
ClaimOutcome miss() { return {false, std::nullopt}; }
ClaimOutcome fail_with(const Verdict& v) {
  return {true, std::make_pair(v.witness_kind(),
                               std::string(reason_name(v.reason)) +
                                   (v.witness_text().empty()
                                        ? ""
                                        : " " + v.witness_text()))};
}
ClaimOutcome fail_text(std::string kind, std::string text) {
  return {true, std::make_pair(std::move(kind), std::move(text))};
}

std::vector<int> range_params(int lo, int hi) {
  std::vector<int> out;
  for (int k = lo; k <= hi; ++k) out.push_back(k);
  return out;
}

// Valid k for k-extendability (even order) / k½-extendability (odd order).
std::vector<int> extendability_params(const Graph& g, int lo = 0) {
  int n = g.order();
  if (n % 2 == 0) return n < 2 ? std::vector<int>{} : range_params(lo, (n - 2) / 2);
  return range_params(lo, (n - 3) / 2);
}

std::vector<Claim> build_registry() {
  std::vector<Claim> reg;

  reg.push_back(Claim{
      "C-OB1",
      "a 2k-factor-critical graph is k-extendable; a (2k+1)-factor-critical "
      "graph is k1/2-extendable",
      false, false,
      [](const Graph& g) { return extendability_params(g); },
      [](const Graph& g, int k) {
        if (g.order() % 2 == 0) {
          if (!fc(g, 2 * k)) return miss();
          Verdict v = is_k_extendable(g, k);
          return v.holds ? pass_hyp() : fail_with(v);
        }
        if (!fc(g, 2 * k + 1)) return miss();
        Verdict v = is_half_extendable(g, k);
        return v.holds ? pass_hyp() : fail_with(v);
      }});

  reg.push_back(Claim{
      "C-P2EXT",
      "2-extendable non-bipartite with nu>=6 is bicritical",
      false, false,
      [](const Graph& g) {
        return g.order() % 2 == 0 && g.order() >= 6 ? std::vector<int>{2}
                                                    : std::vector<int>{};
      },
      [](const Graph& g, int) {
        if (is_bipartite(g) || !ext(g, 2)) return miss();
        Verdict v = is_factor_critical(g, 2);
        return v.holds ? pass_hyp() : fail_with(v);
      }});

  reg.push_back(Claim{
      "C-P3BIC",
      "3-extendable bicritical with nu>=8: G-e stays bicritical",
      false, false,
      [](const Graph& g) {
        return g.order() % 2 == 0 && g.order() >= 8 ? std::vector<int>{3}
                                                    : std::vector<int>{};
      },
      [](const Graph& g, int) {
        if (!fc(g, 2) || !ext(g, 3)) return miss();
        for (Edge e : g.edges())
          if (!fc(delete_edge(g, e), 2))
            return fail_text("edge", "(" + std::to_string(e.u) + "," +
                                         std::to_string(e.v) +
                                         ") removal breaks bicriticality");
        return pass_hyp();
      }});

  reg.push_back(Claim{
      "C-LMF1",
      "even k: connected non-bipartite k-extendable of even order nu>2k is "
      "k-factor-critical",
      false, false,
      [](const Graph& g) {
        std::vector<int> out;
        if (g.order() % 2 != 0) return out;
        for (int k = 0; 2 * k < g.order() && 2 * k <= g.order() - 2; k += 2)
          out.push_back(k);
        return out;
      },
      [](const Graph& g, int k) {
        if (is_bipartite(g) || !ext(g, k)) return miss();
        Verdict v = is_factor_critical(g, k);
        return v.holds ? pass_hyp() : fail_with(v);
      }});

  reg.push_back(Claim{
      "C-LMF2",
      "even k: non-bipartite (k+1)-extendable with nu>=2k+4 is "
      "k-factor-critical, and so is G-e for every edge",
      false, false,
      [](const Graph& g) {
        std::vector<int> out;
        if (g.order() % 2 != 0) return out;
        for (int k = 0; 2 * k + 4 <= g.order(); k += 2) out.push_back(k);
        return out;
      },
      [](const Graph& g, int k) {
        if (is_bipartite(g) || !ext(g, k + 1)) return miss();
        Verdict v = is_factor_critical(g, k);
        if (!v.holds) return fail_with(v);
        for (Edge e : g.edges())
          if (!fc(delete_edge(g, e), k))
            return fail_text("edge", "(" + std::to_string(e.u) + "," +
                                         std::to_string(e.v) +
                                         ") removal breaks k-factor-criticality");
        return pass_hyp();
      }});

  reg.push_back(Claim{
      "C-LMFS1",
      "((nu/2)-2)-extendable non-bipartite with nu>=14 is "
      "(nu-4)-factor-critical",
      false, true,
      [](const Graph& g) {
        return g.order() % 2 == 0 && g.order() >= 14
                   ? std::vector<int>{g.order() / 2 - 2}
                   : std::vector<int>{};
      },
      [](const Graph& g, int k) {
        if (is_bipartite(g) || !ext(g, k)) return miss();
        Verdict v = is_factor_critical(g, g.order() - 4);
        return v.holds ? pass_hyp() : fail_with(v);
      }});

  reg.push_back(Claim{
      "C-LMY1",
      "k-extendable with k>=2(nu+1)/3 is 2k-factor-critical (hypothesis is "
      "vacuous under k<=(nu-2)/2)",
      false, false,
      [](const Graph& g) { return extendability_params(g); },
      [](const Graph& g, int k) {
        if (g.order() % 2 != 0) return miss();
        if (3 * k < 2 * (g.order() + 1)) return miss();
        if (!ext(g, k)) return miss();
        Verdict v = is_factor_critical(g, 2 * k);
        return v.holds ? pass_hyp() : fail_with(v);
      }});

  reg.push_back(Claim{
      "C-LMP1",
      "k-extendable with nu>=2k+2, k>=1, is (k-1)-extendable",
      false, false,
      [](const Graph& g) {
        return g.order() % 2 == 0 ? extendability_params(g, 1)
                                  : std::vector<int>{};
      },
      [](const Graph& g, int k) {
        if (!ext(g, k)) return miss();
        Verdict v = is_k_extendable(g, k - 1);
        return v.holds ? pass_hyp() : fail_with(v);
      }});

  reg.push_back(Claim{
      "C-LMY4",
      "k1/2-extendable is (k-1)1/2-extendable",
      false, false,
      [](const Graph& g) {
        return g.order() % 2 == 1 ? extendability_params(g, 1)
                                  : std::vector<int>{};
      },
      [](const Graph& g, int k) {
        if (!half(g, k)) return miss();
        Verdict v = is_half_extendable(g, k - 1);
        return v.holds ? pass_hyp() : fail_with(v);
      }});

  reg.push_back(Claim{
      "C-LMLY1",
      "k-extendable with k>=nu/4: bipartite or kappa>=2k",
      false, false,
      [](const Graph& g) {
        if (g.order() % 2 != 0 || g.order() < 2) return std::vector<int>{};
        int lo = (g.order() + 3) / 4;  // ceil(nu/4)
        return range_params(lo, (g.order() - 2) / 2);
      },
      [](const Graph& g, int k) {
        if (!ext(g, k)) return miss();
        if (is_bipartite(g)) return pass_hyp();
        int kappa = vertex_connectivity(g);
        if (kappa >= 2 * k) return pass_hyp();
        return fail_text("value", "kappa=" + std::to_string(kappa));
      }});

  reg.push_back(Claim{
      "C-LMZ1",
      "k-extendable is m-extendable for all 0<=m<=k; same for half-"
      "extendability",
      false, false,
      [](const Graph& g) { return extendability_params(g, 1); },
      [](const Graph& g, int k) {
        bool even = g.order() % 2 == 0;
        if (!(even ? ext(g, k) : half(g, k))) return miss();
        for (int m = 0; m < k; ++m)
          if (!(even ? ext(g, m) : half(g, m)))
            return fail_text("value", "m=" + std::to_string(m) + " fails");
        return pass_hyp();
      }});

  reg.push_back(Claim{
      "C-TH21",
      "k>=(nu+2)/4: non-bipartite k-extendable iff 2k-factor-critical",
      false, false,
      [](const Graph& g) {
        if (g.order() % 2 != 0 || g.order() < 2) return std::vector<int>{};
        int lo = (g.order() + 2 + 3) / 4;  // ceil((nu+2)/4)
        return range_params(lo, (g.order() - 2) / 2);
      },
      [](const Graph& g, int k) {
        if (is_bipartite(g)) return miss();
        Verdict e = is_k_extendable(g, k);
        Verdict f = is_factor_critical(g, 2 * k);
        if (e.ill_posed() || f.ill_posed()) return miss();
        if (e.holds == f.holds) return pass_hyp();
        return fail_text("value", e.holds ? "extendable but not factor-critical"
                                          : "factor-critical but not extendable");
      }});

  reg.push_back(Claim{
      "C-TH23",
      "k>=(nu-3)/4: k1/2-extendable iff (2k+1)-factor-critical",
      false, false,
      [](const Graph& g) {
        if (g.order() % 2 != 1) return std::vector<int>{};
        int lo = std::max(0, (g.order() - 3 + 3) / 4);  // ceil((nu-3)/4)
        return range_params(lo, (g.order() - 3) / 2);
      },
      [](const Graph& g, int k) {
        Verdict e = is_half_extendable(g, k);
        Verdict f = is_factor_critical(g, 2 * k + 1);
        if (e.ill_posed() || f.ill_posed()) return miss();
        if (e.holds == f.holds) return pass_hyp();
        return fail_text("value", e.holds
                                      ? "half-extendable but not factor-critical"
                                      : "factor-critical but not half-extendable");
      }});

  reg.push_back(Claim{
      "C-LMP2",
      "connected bipartite, 1<=k<=nu/2-1: k-extendable iff every balanced "
      "2k-removal leaves a perfect matching",
      false, false,
      [](const Graph& g) {
        if (g.order() < 4) return std::vector<int>{};
        return range_params(1, g.order() / 2 - 1);
      },
      [](const Graph& g, int k) {
        if (!is_bipartite(g) || g.order() == 0 || !is_connected(g))
          return miss();
        Verdict e = is_k_extendable(g, k);
        Verdict b = is_balanced_bipartite_critical(g, k);
        if (e.ill_posed() || b.ill_posed()) return miss();
        if (e.holds == b.holds) return pass_hyp();
        return fail_text("value",
                         e.holds ? "extendable but balanced removal fails"
                                 : "balanced removals survive but not extendable");
      }});

  reg.push_back(Claim{
      "C-LML1",
      "minimal k-extendable bipartite has >=2k+2 vertices of degree k+1, "
      ">=k+1 per side",
      false, false,
      [](const Graph& g) {
        return g.order() % 2 == 0 ? extendability_params(g, 1)
                                  : std::vector<int>{};
      },
      [](const Graph& g, int k) {
        auto parts = bipartition(g);
        if (!parts) return miss();
        if (!is_minimal(g, PropertySpec::extendable(k)).holds) return miss();
        int in_u = 0, in_w = 0;
        for (int v = 0; v < g.order(); ++v)
          if (g.degree(v) == k + 1) (parts->u.contains(v) ? in_u : in_w)++;
        if (in_u + in_w >= 2 * k + 2 && in_u >= k + 1 && in_w >= k + 1)
          return pass_hyp();
        return fail_text("value", "degree-(k+1) vertices: U=" +
                                      std::to_string(in_u) +
                                      " W=" + std::to_string(in_w));
      }});

  reg.push_back(Claim{
      "C-KAPPA",
      "k-extendable implies kappa>=k+1",
      false, false,
      [](const Graph& g) {
        return g.order() % 2 == 0 ? extendability_params(g)
                                  : std::vector<int>{};
      },
      [](const Graph& g, int k) {
        if (!ext(g, k)) return miss();
        int kappa = vertex_connectivity(g);
        if (kappa >= k + 1) return pass_hyp();
        return fail_text("value", "kappa=" + std::to_string(kappa));
      }});

  reg.push_back(Claim{
      "C-BIPNFC",
      "bipartite graphs are not n-factor-critical for any n>0",
      false, false,
      [](const Graph& g) {
        std::vector<int> out;
        int n0 = g.order() % 2 == 0 ? 2 : 1;
        for (int n = n0; n <= g.order() - 2; n += 2) out.push_back(n);
        return out;
      },
      [](const Graph& g, int n) {
        if (!is_bipartite(g)) return miss();
        Verdict v = is_factor_critical(g, n);
        if (v.ill_posed()) return miss();
        return v.holds ? fail_text("value", "factor-critical despite bipartite")
                       : pass_hyp();
      }});

  reg.push_back(Claim{
      "CONJ-1",
      "minimal k-extendable with nu/2+1<=2k+1 has delta in {k+1, 2k, 2k+1}",
      true, false,
      [](const Graph& g) {
        std::vector<int> out;
        if (g.order() % 2 != 0) return out;
        for (int k : extendability_params(g))
          if (g.order() / 2 + 1 <= 2 * k + 1) out.push_back(k);
        return out;
      },
      [](const Graph& g, int k) {
        if (!is_minimal(g, PropertySpec::extendable(k)).holds) return miss();
        int delta = min_degree(g);
        if (delta == k + 1 || delta == 2 * k || delta == 2 * k + 1)
          return pass_hyp();
        return fail_text("min-degree", "delta=" + std::to_string(delta));
      }});

  reg.push_back(Claim{
      "CONJ-2",
      "minimal n-factor-critical has delta=n+1",
      true, false,
      [](const Graph& g) {
        std::vector<int> out;
        int n0 = g.order() % 2 == 0 ? 2 : 1;
        for (int n = n0; n <= g.order() - 2; n += 2) out.push_back(n);
        return out;
      },
      [](const Graph& g, int n) {
        if (!is_minimal(g, PropertySpec::factor_critical(n)).holds)
          return miss();
        int delta = min_degree(g);
        if (delta == n + 1) return pass_hyp();
        return fail_text("min-degree", "delta=" + std::to_string(delta));
      }});

  return reg;
}

}  // namespace

const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> registry = build_registry();
  return registry;
}

const Claim* find_claim(std::string_view id) {
  for (const Claim& c : claim_registry())
    if (c.id == id) return &c;
  return nullptr;
}

Report verify_claim(const std::string& id, const CorpusSpec& corpus,
                    int threads) {
  const Claim* claim = find_claim(id);
  if (!claim) throw std::invalid_argument("unknown claim id: " + id);

  Report report;
  report.claim = claim->id;
  report.corpus = corpus.describe();
  report.conjecture = claim->conjecture;

  std::atomic<std::uint64_t> scanned{0}, hits{0};
  std::mutex sink_mutex;
  auto started = std::chrono::steady_clock::now();
  scan_corpus(corpus, threads, [&](const Graph& g) {
    scanned.fetch_add(1, std::memory_order_relaxed);
    std::string g6;
    for (int param : claim->params(g)) {
      ClaimOutcome outcome = claim->check(g, param);
      if (!outcome.hypothesis) continue;
      hits.fetch_add(1, std::memory_order_relaxed);
      if (outcome.failure) {
        if (g6.empty()) g6 = to_graph6(g);
        std::scoped_lock lock(sink_mutex);
        report.counterexamples.push_back(
            {g6, param, outcome.failure->first, outcome.failure->second});
      }
    }
  });
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - started)
                          .count();
  report.scanned = scanned.load();
  report.hypothesis_hits = hits.load();
  report.vacuous = report.scanned > 0 && report.hypothesis_hits == 0;
  sort_counterexamples(report.counterexamples);
  return report;
}

namespace {

/// Uniform random k-matching by rejection: k distinct edges drawn uniformly,
/// accepted iff pairwise disjoint.
Matching random_matching(const std::vector<Edge>& edges, int k,
                         std::mt19937_64& rng) {
  std::size_t m = edges.size();
  std::vector<std::size_t> picked;
  while (true) {
    Matching out;
    picked.clear();
    bool clash = false;
    for (int i = 0; i < k && !clash; ++i) {
      std::size_t idx;
      do {
        idx = static_cast<std::size_t>(rng() % m);
      } while (std::find(picked.begin(), picked.end(), idx) != picked.end());
      picked.push_back(idx);
      Edge e = edges[idx];
      std::uint64_t pair = std::uint64_t{1} << e.u | std::uint64_t{1} << e.v;
      if (out.covered & pair)
        clash = true;
      else
        out.push(e);
    }
    if (!clash) {
      std::sort(out.edges.begin(), out.edges.end());
      return out;
    }
  }
}

void check_family_member(Report& report, const Graph& g, FamilySpec spec,
                         std::uint64_t sample_budget) {
  int k = spec.k;
  bool is_g = spec.family == FamilySpec::Family::G;
  std::string g6 = to_graph6(g);
  report.scanned += 1;
  report.hypothesis_hits += 1;

  // Extendability side: exhaustive up to k=4, sampled above.
  if (k <= 4) {
    Verdict v = is_g ? is_k_extendable(g, k) : is_half_extendable(g, k);
    if (!v.holds)
      report.counterexamples.push_back(
          {g6, k, v.witness_kind(),
           std::string(reason_name(v.reason)) + " " + v.witness_text()});
  } else {
    report.sampled = true;
    std::mt19937_64 rng(kSampleSeed + static_cast<std::uint64_t>(k) * 2 +
                        (is_g ? 0 : 1));
    std::vector<Edge> edges = g.edges();
    for (std::uint64_t draw = 0; draw < sample_budget; ++draw) {
      if (is_g) {
        Matching m = random_matching(edges, k, rng);
        if (!extends_to_perfect(g, m)) {
          Verdict v = Verdict::no(Reason::non_extendable_matching);
          v.matching = m;
          report.counterexamples.push_back(
              {g6, k, v.witness_kind(),
               std::string(reason_name(v.reason)) + " " + v.witness_text()});
          break;
        }
      } else {
        int v0 = static_cast<int>(rng() % static_cast<std::uint64_t>(g.order()));
        std::uint64_t without = g.vertex_mask() & ~(std::uint64_t{1} << v0);
        std::vector<Edge> sub;
        for (Edge e : edges)
          if (e.u != v0 && e.v != v0) sub.push_back(e);
        Matching m = random_matching(sub, k, rng);
        if (!has_perfect_matching_on(g, without & ~m.covered)) {
          Verdict v = Verdict::no(Reason::non_extendable_matching);
          v.vertex = v0;
          v.matching = m;
          report.counterexamples.push_back(
              {g6, k, v.witness_kind(),
               std::string(reason_name(v.reason)) + " " + v.witness_text()});
          break;
        }
      }
    }
  }

  // Non-criticality side: the known witness set must break the perfect
  // matching, and (when affordable) the full decider must agree.
  VertexSet witness = tightness_witness(spec);
  int criticality = is_g ? 2 * k : 2 * k + 1;
  if (has_perfect_matching_on(g, g.vertex_mask() & ~witness.bits))
    report.counterexamples.push_back(
        {g6, criticality, "vertex-set",
         "witness set leaves a perfect matching " +
             Verdict{false, Reason::bad_subset, {}, witness, {}, {}}
                 .witness_text()});
  if (g.order() <= 20) {
    Verdict full = is_factor_critical(g, criticality);
    if (full.holds)
      report.counterexamples.push_back(
          {g6, criticality, "value", "factor-criticality unexpectedly holds"});
  }
}

}  // namespace

Report verify_family_tightness(int k_max, std::uint64_t sample_budget,
                               FamilyFilter which) {
  if (k_max < 2) throw std::out_of_range("family tightness requires k_max >= 2");
  Report report;
  report.claim = "FAMILY-TIGHTNESS";
  report.corpus = "families k=2.." + std::to_string(k_max);
  auto started = std::chrono::steady_clock::now();
  for (int k = 2; k <= k_max; ++k) {
    if (which != FamilyFilter::h_only && 4 * k <= kMaxVertices)
      check_family_member(report, family_G(k), {FamilySpec::Family::G, k},
                          sample_budget);
    if (which != FamilyFilter::g_only && 4 * k + 5 <= kMaxVertices)
      check_family_member(report, family_H(k), {FamilySpec::Family::H, k},
                          sample_budget);
  }
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - started)
                          .count();
  sort_counterexamples(report.counterexamples);
  return report;
}

Report scan_minimal_degrees(const CorpusSpec& corpus, PropertySpec mode,
                            int threads) {
  Report report;
  bool extendable = mode.kind == PropertySpec::Kind::extendable;
  report.claim = extendable
                     ? "SCAN-MINIMAL-EXTENDABLE-" + std::to_string(mode.param)
                     : "SCAN-MINIMAL-FACTOR-CRITICAL-" + std::to_string(mode.param);
  report.corpus = corpus.describe();
  report.conjecture = true;  // findings, not failures

  std::atomic<std::uint64_t> scanned{0}, hits{0};
  std::mutex sink_mutex;
  auto started = std::chrono::steady_clock::now();
  scan_corpus(corpus, threads, [&](const Graph& g) {
    scanned.fetch_add(1, std::memory_order_relaxed);
    if (!is_minimal(g, mode).holds) return;
    hits.fetch_add(1, std::memory_order_relaxed);
    int delta = min_degree(g);
    int k = mode.param;
    bool expected = extendable
                        ? (delta == k + 1 || delta == 2 * k || delta == 2 * k + 1)
                        : delta == k + 1;
    std::scoped_lock lock(sink_mutex);
    ++report.delta_histogram[delta];
    if (!expected)
      report.counterexamples.push_back({to_graph6(g), k, "min-degree",
                                        "delta=" + std::to_string(delta)});
  });
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - started)
                          .count();
  report.scanned = scanned.load();
  report.hypothesis_hits = hits.load();
  report.vacuous = report.scanned > 0 && report.hypothesis_hits == 0;
  sort_counterexamples(report.counterexamples);
  return report;
}

}  // namespace matchkit
