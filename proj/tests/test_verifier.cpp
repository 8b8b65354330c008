#include <doctest.h>

#include <fstream>
#include <set>

#include "matchkit/graph6.hpp"
#include "matchkit/verifier.hpp"

using namespace matchkit;

TEST_CASE("builtin corpus counts") {
  auto count = [](const CorpusSpec& spec) {
    std::uint64_t c = 0;
    enumerate_corpus(spec, [&](const Graph&) {
      ++c;
      return true;
    });
    return c;
  };
  CHECK(count(CorpusSpec::builtin(3, {.connected = true})) == 4);
  CHECK(count(CorpusSpec::builtin(4, {.connected = true})) == 38);
  CHECK(count(CorpusSpec::builtin(4)) == 64);
  CHECK(count(CorpusSpec::builtin(4, {.connected = true, .non_bipartite = true})) == 19);
  CHECK(count(CorpusSpec::builtin(5, {.even_order = true})) == 0);
  CHECK(count(CorpusSpec::builtin(4, {.min_degree = 3})) == 1);
}

TEST_CASE("registry is complete and ids are unique") {
  const auto& reg = claim_registry();
  std::set<std::string> ids;
  for (const Claim& c : reg) {
    CHECK(ids.insert(c.id).second);
    CHECK_FALSE(c.statement.empty());
    CHECK(bool(c.params));
    CHECK(bool(c.check));
  }
  for (const char* id :
       {"C-OB1", "C-P2EXT", "C-P3BIC", "C-LMF1", "C-LMF2", "C-LMFS1", "C-LMY1",
        "C-LMP1", "C-LMY4", "C-LMLY1", "C-LMZ1", "C-TH21", "C-TH23", "C-LMP2",
        "C-LML1", "C-KAPPA", "C-BIPNFC", "CONJ-1", "CONJ-2"})
    CHECK(find_claim(id) != nullptr);
  CHECK(reg.size() == 19);
  CHECK(find_claim("C-NOPE") == nullptr);
  CHECK(find_claim("CONJ-1")->conjecture);
  CHECK(find_claim("CONJ-2")->conjecture);
  CHECK(find_claim("C-LMFS1")->sampled_only);
}

TEST_CASE("parameter ranges for the threshold claims") {
  // k from ceil((nu+2)/4) to floor((nu-2)/2)
  Graph g10 = Graph::complete(10);
  CHECK(find_claim("C-TH21")->params(g10) == std::vector<int>{3, 4});
  Graph g8 = Graph::complete(8);
  CHECK(find_claim("C-TH21")->params(g8) == std::vector<int>{3});
  Graph g6 = Graph::complete(6);
  CHECK(find_claim("C-TH21")->params(g6) == std::vector<int>{2});

  // k from ceil((nu-3)/4) to floor((nu-3)/2)
  Graph g9 = Graph::complete(9);
  CHECK(find_claim("C-TH23")->params(g9) == std::vector<int>{2, 3});
  Graph g7 = Graph::complete(7);
  CHECK(find_claim("C-TH23")->params(g7) == std::vector<int>{1, 2});
  Graph g5 = Graph::complete(5);
  CHECK(find_claim("C-TH23")->params(g5) == std::vector<int>{1});
}

TEST_CASE("verifying a theorem over a small corpus finds nothing") {
  for (const char* id : {"C-OB1", "C-TH21", "C-LMF1", "C-KAPPA"}) {
    Report r = verify_claim(id, CorpusSpec::builtin(6, {.connected = true}), 1);
    CHECK(r.failures() == 0);
    CHECK(r.scanned == 26704);
    CHECK_FALSE(r.conjecture);
  }
  Report odd = verify_claim("C-TH23", CorpusSpec::builtin(5, {.connected = true}), 1);
  CHECK(odd.failures() == 0);
  CHECK(odd.scanned == 728);
  CHECK(odd.hypothesis_hits > 0);
}

TEST_CASE("hypothesis hits are counted") {
  // C-LML1's hypothesis (minimal 1-extendable) is met by C_4
  Report r = verify_claim("C-LML1", CorpusSpec::builtin(4, {.connected = true}), 1);
  CHECK(r.failures() == 0);
  CHECK(r.hypothesis_hits > 0);
}

TEST_CASE("vacuous hypotheses are flagged") {
  Report r = verify_claim("C-LMY1", CorpusSpec::builtin(4, {.connected = true}), 1);
  CHECK(r.scanned > 0);
  CHECK(r.hypothesis_hits == 0);
  CHECK(r.vacuous);
  CHECK(r.failures() == 0);
}

TEST_CASE("jsonl shape") {
  Report r = verify_claim("C-OB1", CorpusSpec::builtin(4, {.connected = true}), 1);
  std::string body = r.to_jsonl(false);
  CHECK(body.find("\"claim\":\"C-OB1\"") != std::string::npos);
  CHECK(body.find("\"scanned\":") != std::string::npos);
  CHECK(body.find("\"failures\":0") != std::string::npos);
  CHECK(body.find("\"elapsed_ms\":0") != std::string::npos);
  CHECK(body.back() == '\n');
}

TEST_CASE("reports are identical across thread counts") {
  CorpusSpec corpus = CorpusSpec::builtin(5, {.connected = true});
  Report a = verify_claim("C-TH23", corpus, 1);
  Report b = verify_claim("C-TH23", corpus, 3);
  CHECK(a.to_jsonl(false) == b.to_jsonl(false));
  CHECK(a.scanned == b.scanned);
  CHECK(a.hypothesis_hits == b.hypothesis_hits);
}

TEST_CASE("family tightness smoke run") {
  Report r = verify_family_tightness(2, 1000);
  CHECK(r.failures() == 0);
  CHECK(r.scanned == 2);  // G(2) and H(2)
  Report g_only = verify_family_tightness(3, 1000, FamilyFilter::g_only);
  CHECK(g_only.failures() == 0);
  CHECK(g_only.scanned == 2);
}

TEST_CASE("minimal degree scan over 1-extendable graphs on 6 vertices") {
  Report r = scan_minimal_degrees(CorpusSpec::builtin(6, {.connected = true}),
                                  PropertySpec::extendable(1), 1);
  CHECK(r.conjecture);
  CHECK(r.failures() == 0);  // delta in {2, 3} for k = 1
  std::uint64_t total = 0;
  for (auto& [delta, cnt] : r.delta_histogram) {
    CHECK((delta == 2 || delta == 3));
    total += cnt;
  }
  CHECK(total > 0);
}

TEST_CASE("minimal factor-critical graphs on 5 vertices have degree 2") {
  Report r = scan_minimal_degrees(CorpusSpec::builtin(5, {.connected = true}),
                                  PropertySpec::factor_critical(1), 1);
  CHECK(r.failures() == 0);
  REQUIRE(r.delta_histogram.count(2));
  CHECK(r.delta_histogram.size() == 1);
}

TEST_CASE("corpus generation by augmentation matches known counts") {
  const std::uint64_t expected[] = {0, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    std::uint64_t c = 0;
    generate_connected_graphs(n, [&](const Graph&) { ++c; });
    CHECK(c == expected[n]);
  }
}

TEST_CASE("file corpus round trip") {
  std::string path = "/tmp/matchkit_test_corpus.g6";
  {
    std::ofstream out(path);
    out << to_graph6(Graph::cycle(6)) << "\n";
    out << to_graph6(Graph::complete(4)) << "\n";
    out << to_graph6(Graph::path(5)) << "\n";
  }
  std::vector<Graph> got;
  enumerate_corpus(CorpusSpec::file(path), [&](const Graph& g) {
    got.push_back(g);
    return true;
  });
  REQUIRE(got.size() == 3);
  CHECK(got[0] == Graph::cycle(6));
  CHECK(got[2] == Graph::path(5));

  std::vector<Graph> even;
  enumerate_corpus(CorpusSpec::file(path, {.even_order = true}),
                   [&](const Graph& g) {
                     even.push_back(g);
                     return true;
                   });
  CHECK(even.size() == 2);
}
