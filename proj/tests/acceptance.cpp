// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.
//
// Generates exhaustive connected-graph corpora up to 9 vertices in the
// working directory, then drives the verifier end to end:
//   1. matching engine agrees with exhaustive branching, all connected
//      labeled graphs up to 7 vertices
//   2. extendability/criticality equivalence at its threshold over 8 vertices
//   3. family G tightness (exhaustive k <= 4, sampled k = 5)
//   4. family H tightness (k = 2, 3)
//   5. half-extendability equivalence over 9 vertices, plus a timed
//      reduced run on 7 vertices
//   6. the lemma suite reports zero counterexamples; the vacuous claim is
//      flagged as vacuous
//   7. minimal-graph degree scans match the conjectured values
//   8. all reports are byte-identical across thread counts

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "matchkit/corpus.hpp"
#include "matchkit/graph6.hpp"
#include "matchkit/matching.hpp"
#include "matchkit/verifier.hpp"

using namespace matchkit;

namespace {

int failed_criteria = 0;

void criterion(int id, bool ok, const std::string& name,
               const std::string& detail = "") {
  std::cout << "criterion " << id << " " << (ok ? "PASS" : "FAIL") << ": "
            << name;
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << std::endl;
  if (!ok) ++failed_criteria;
}

std::string corpus_path(int n) {
  return "acceptance_corpus_" + std::to_string(n) + ".g6";
}

std::uint64_t write_corpus(int n) {
  std::ofstream out(corpus_path(n));
  std::uint64_t count = 0;
  generate_connected_graphs(n, [&](const Graph& g) {
    out << to_graph6(g) << "\n";
    ++count;
  });
  std::cerr << "  corpus " << n << ": " << count << " graphs\n";
  return count;
}

bool matching_engine_agrees_with_brancher() {
  for (int n = 1; n <= 7; ++n) {
    std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      Graph g = labeled_graph_from_mask(n, mask);
      if (!is_connected(g)) continue;
      if (maximum_matching(g).size() != brute_force_max_matching(g))
        return false;
    }
  }
  return true;
}

// The lemma suite of criterion 6 with the orders each claim can fire on.
const std::vector<std::pair<std::string, std::vector<int>>> kLemmaSuite = {
    {"C-OB1", {4, 5, 6, 7, 8, 9}},  {"C-LMP1", {4, 6, 8}},
    {"C-LMY4", {5, 7, 9}},          {"C-LMZ1", {4, 5, 6, 7, 8, 9}},
    {"C-LMLY1", {4, 6, 8}},         {"C-KAPPA", {4, 6, 8}},
    {"C-P2EXT", {6, 8}},            {"C-P3BIC", {8}},
    {"C-LMF1", {4, 6, 8}},          {"C-LMF2", {4, 6, 8}},
    {"C-LMP2", {4, 6, 8}},          {"C-LML1", {4, 6, 8}},
    {"C-BIPNFC", {4, 5, 6, 7, 8, 9}},
};

struct NamedReport {
  std::string name;
  Report report;
};

std::vector<NamedReport> run_reports(int threads) {
  std::vector<NamedReport> out;
  auto add = [&](std::string name, Report r) {
    std::cerr << "  " << name << ": scanned " << r.scanned << ", failures "
              << r.failures() << "\n";
    out.push_back({std::move(name), std::move(r)});
  };

  // criterion 2
  add("th21-nu8",
      verify_claim("C-TH21", CorpusSpec::file(corpus_path(8), {.non_bipartite = true}),
                   threads));
  // criteria 3 and 4
  add("family-g", verify_family_tightness(5, 100000, FamilyFilter::g_only));
  add("family-h", verify_family_tightness(3, 100000, FamilyFilter::h_only));
  // criterion 5
  add("th23-nu9", verify_claim("C-TH23", CorpusSpec::file(corpus_path(9)), threads));
  add("th23-nu7", verify_claim("C-TH23", CorpusSpec::file(corpus_path(7)), threads));
  // criterion 6
  for (const auto& [id, orders] : kLemmaSuite)
    for (int n : orders)
      add(id + "-nu" + std::to_string(n),
          verify_claim(id, CorpusSpec::file(corpus_path(n)), threads));
  add("lmy1-nu8", verify_claim("C-LMY1", CorpusSpec::file(corpus_path(8)), threads));
  // criterion 7
  for (int n : {4, 6, 8})
    add("scan-ext1-nu" + std::to_string(n),
        scan_minimal_degrees(CorpusSpec::file(corpus_path(n)),
                             PropertySpec::extendable(1), threads));
  for (int n : {3, 5, 7})
    add("scan-fc1-nu" + std::to_string(n),
        scan_minimal_degrees(CorpusSpec::file(corpus_path(n)),
                             PropertySpec::factor_critical(1), threads));
  for (int n : {4, 6, 8})
    add("scan-fc2-nu" + std::to_string(n),
        scan_minimal_degrees(CorpusSpec::file(corpus_path(n)),
                             PropertySpec::factor_critical(2), threads));
  return out;
}

const Report& get(const std::vector<NamedReport>& reports,
                  const std::string& name) {
  for (const NamedReport& nr : reports)
    if (nr.name == name) return nr.report;
  throw std::logic_error("missing report " + name);
}

std::string histogram_text(const Report& r) {
  std::string s;
  for (auto [delta, count] : r.delta_histogram)
    s += (s.empty() ? "" : " ") + std::to_string(delta) + ":" +
         std::to_string(count);
  return s.empty() ? "empty" : s;
}

}  // namespace

int main() {
  std::cerr << "generating corpora\n";
  std::map<int, std::uint64_t> counts;
  for (int n = 3; n <= 9; ++n) counts[n] = write_corpus(n);

  std::cerr << "criterion 1\n";
  criterion(1, matching_engine_agrees_with_brancher(),
            "maximum matching equals exhaustive branching on every connected "
            "labeled graph up to 7 vertices");

  std::cerr << "first verification pass\n";
  std::vector<NamedReport> pass1 = run_reports(1);

  {
    const Report& r = get(pass1, "th21-nu8");
    criterion(2,
              counts[8] == 11117 && r.failures() == 0 && r.hypothesis_hits > 0,
              "3-extendable equals 6-factor-critical over all connected "
              "non-bipartite graphs on 8 vertices",
              "corpus " + std::to_string(counts[8]) + ", hits " +
                  std::to_string(r.hypothesis_hits));
  }
  {
    const Report& r = get(pass1, "family-g");
    criterion(3, r.failures() == 0 && r.sampled,
              "family G is k-extendable yet not 2k-factor-critical, "
              "k = 2..4 exhaustive, k = 5 sampled");
  }
  {
    const Report& r = get(pass1, "family-h");
    criterion(4, r.failures() == 0,
              "family H is k-and-a-half-extendable yet not "
              "(2k+1)-factor-critical, k = 2, 3");
  }
  {
    const Report& big = get(pass1, "th23-nu9");
    const Report& small = get(pass1, "th23-nu7");
    criterion(5,
              counts[9] == 261080 && big.failures() == 0 &&
                  small.failures() == 0 && small.elapsed_ms < 60000,
              "half-extendability equals factor-criticality at its threshold "
              "over all connected graphs on 9 vertices; reduced 7-vertex run "
              "under a minute",
              "corpus " + std::to_string(counts[9]) + ", reduced run " +
                  std::to_string(small.elapsed_ms) + " ms");
  }
  {
    bool ok = true;
    std::string bad;
    for (const auto& [id, orders] : kLemmaSuite)
      for (int n : orders) {
        const Report& r = get(pass1, id + "-nu" + std::to_string(n));
        if (r.failures() != 0) {
          ok = false;
          bad += " " + id + "@" + std::to_string(n);
        }
      }
    const Report& vac = get(pass1, "lmy1-nu8");
    bool vacuity = vac.vacuous && vac.hypothesis_hits == 0 && vac.failures() == 0;
    criterion(6, ok && vacuity,
              "lemma suite reports zero counterexamples; the unsatisfiable "
              "hypothesis is flagged vacuous",
              ok ? (vacuity ? "13 claims clean, vacuity flagged"
                            : "vacuity flag missing")
                 : "failures:" + bad);
  }
  {
    bool ext_ok = true;
    std::string detail;
    for (int n : {4, 6, 8}) {
      const Report& r = get(pass1, "scan-ext1-nu" + std::to_string(n));
      if (r.failures() != 0 || r.delta_histogram.empty()) ext_ok = false;
      for (auto [delta, count] : r.delta_histogram)
        if (delta != 2 && delta != 3) ext_ok = false;
    }
    std::uint64_t fc_findings = 0;
    for (int n : {3, 5, 7}) {
      const Report& r = get(pass1, "scan-fc1-nu" + std::to_string(n));
      fc_findings += r.failures();
      detail += " fc1@" + std::to_string(n) + " {" + histogram_text(r) + "}";
    }
    for (int n : {4, 6, 8}) {
      const Report& r = get(pass1, "scan-fc2-nu" + std::to_string(n));
      fc_findings += r.failures();
      detail += " fc2@" + std::to_string(n) + " {" + histogram_text(r) + "}";
    }
    criterion(7, ext_ok,
              "minimal 1-extendable graphs on up to 8 vertices have minimum "
              "degree 2 or 3; factor-critical degree distributions reported",
              "fc findings " + std::to_string(fc_findings) + ";" + detail);
  }
  {
    std::cerr << "second verification pass\n";
    std::vector<NamedReport> pass2 = run_reports(3);
    bool identical = pass1.size() == pass2.size();
    std::string first_diff;
    for (std::size_t i = 0; identical && i < pass1.size(); ++i) {
      if (pass1[i].report.to_jsonl(false) != pass2[i].report.to_jsonl(false)) {
        identical = false;
        first_diff = pass1[i].name;
      }
    }
    criterion(8, identical,
              "all reports byte-identical when re-run with a different "
              "thread count",
              identical ? "" : "first difference: " + first_diff);
  }

  return failed_criteria == 0 ? 0 : 1;
}
