#ifndef MATCHKIT_VERIFIER_HPP
#define MATCHKIT_VERIFIER_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matchkit/corpus.hpp"
#include "matchkit/families.hpp"
#include "matchkit/properties.hpp"

namespace matchkit {

/// Seed for every sampled verification run.
inline constexpr std::uint64_t kSampleSeed = 0x6d61746368ull;

struct Counterexample {
  std::string graph6;
  int param = 0;
  std::string witness_kind;
  std::string witness;
};

struct Report {
  std::string claim;
  std::string corpus;
  std::uint64_t scanned = 0;
  std::uint64_t hypothesis_hits = 0;
  std::vector<Counterexample> counterexamples;
  std::int64_t elapsed_ms = 0;
  bool sampled = false;
  bool vacuous = false;    // zero hypothesis hits over a nonempty corpus
  bool conjecture = false; // counterexamples are notable findings, not bugs
  std::map<int, std::uint64_t> delta_histogram;  // minimal-degree scans only

  std::uint64_t failures() const { return counterexamples.size(); }

  /// JSON Lines: one record per counterexample, then one summary record.
  /// Records are ordered by (graph6 bytes, param). Passing
  /// include_elapsed=false zeroes the only nondeterministic field.
  std::string to_jsonl(bool include_elapsed = true) const;
};

struct ClaimOutcome {
  bool hypothesis = false;
  // witness_kind, witness — present iff the conclusion failed.
  std::optional<std::pair<std::string, std::string>> failure;
};

/// One registered theorem/lemma/conjecture: a parameter-range rule plus a
/// hypothesis→conclusion check, total over any graph (decider errors mean
/// the hypothesis is unmet).
struct Claim {
  std::string id;
  std::string statement;
  bool conjecture = false;
  bool sampled_only = false;  // hypothesis needs graphs beyond desk scale
  std::function<std::vector<int>(const Graph&)> params;
  std::function<ClaimOutcome(const Graph&, int)> check;
};

const std::vector<Claim>& claim_registry();
const Claim* find_claim(std::string_view id);

/// Scans the corpus graph-by-graph with a worker pool; the aggregated report
/// is deterministic regardless of thread count.
Report verify_claim(const std::string& id, const CorpusSpec& corpus,
                    int threads = 0);

/// Family selector for tightness runs.
enum class FamilyFilter { both, g_only, h_only };

/// For k = 2..k_max: family G is k-extendable but not 2k-factor-critical,
/// family H is k½-extendable but not (2k+1)-factor-critical, with the known
/// witness sets. Extendability is exhaustive for k ≤ 4 and sampled
/// (sample_budget uniform k-matchings, fixed seed) for k ≥ 5.
Report verify_family_tightness(int k_max, std::uint64_t sample_budget,
                               FamilyFilter which = FamilyFilter::both);

/// Filters the corpus to minimal-property graphs, tabulates the δ(G)
/// distribution, and records graphs off the conjectured values as notable
/// findings (the report is marked conjecture: findings never fail a run).
Report scan_minimal_degrees(const CorpusSpec& corpus, PropertySpec mode,
                            int threads = 0);

}  // namespace matchkit

#endif
