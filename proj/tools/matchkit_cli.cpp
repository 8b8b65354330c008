// Command-line front end: decode/construct graphs, run property deciders,
// verify registered claims over corpora, and emit JSON Lines reports.
//
// Exit codes: 0 = everything holds / zero counterexamples, 1 = a property
// fails or a counterexample was found, 2 = usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "matchkit/corpus.hpp"
#include "matchkit/families.hpp"
#include "matchkit/graph6.hpp"
#include "matchkit/properties.hpp"
#include "matchkit/verifier.hpp"

namespace {

using namespace matchkit;

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return 2;
}

std::vector<std::string> collect_graph_lines(const std::string& graph6_arg,
                                             const std::string& file_arg) {
  std::vector<std::string> lines;
  if (!graph6_arg.empty()) {
    lines.push_back(graph6_arg);
    return lines;
  }
  std::istream* in = &std::cin;
  std::ifstream file;
  if (!file_arg.empty()) {
    file.open(file_arg);
    if (!file) throw std::runtime_error("cannot open " + file_arg);
    in = &file;
  }
  std::string line;
  while (std::getline(*in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

Filters parse_filters(const std::string& spec) {
  Filters f;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "connected") f.connected = true;
    else if (item == "even-order") f.even_order = true;
    else if (item == "odd-order") f.odd_order = true;
    else if (item == "non-bipartite") f.non_bipartite = true;
    else if (item.rfind("min-degree>=", 0) == 0)
      f.min_degree = std::stoi(item.substr(12));
    else
      throw std::runtime_error("unknown filter: " + item);
  }
  return f;
}

// ---------------------------------------------------------------- check

int run_check(const std::string& property, int k, int n,
              const std::string& graph6_arg, const std::string& file_arg,
              std::uint64_t budget_limit) {
  std::vector<std::string> lines = collect_graph_lines(graph6_arg, file_arg);
  if (lines.empty()) return usage_error("no input graphs");

  bool all_hold = true;
  for (const std::string& line : lines) {
    Graph g;
    try {
      g = from_graph6(line);
    } catch (const std::exception& err) {
      return usage_error(std::string("bad graph6 input: ") + err.what());
    }
    Budget budget{budget_limit};
    Budget* bp = budget_limit ? &budget : nullptr;
    Verdict v;
    try {
      if (property == "extendable") v = is_k_extendable(g, k, bp);
      else if (property == "half-extendable") v = is_half_extendable(g, k, bp);
      else if (property == "factor-critical") v = is_factor_critical(g, n, bp);
      else if (property == "minimal-extendable")
        v = is_minimal(g, PropertySpec::extendable(k), bp);
      else if (property == "minimal-factor-critical")
        v = is_minimal(g, PropertySpec::factor_critical(n), bp);
      else if (property == "balanced-bipartite")
        v = is_balanced_bipartite_critical(g, k, bp);
      else
        return usage_error("unknown property: " + property);
    } catch (const budget_error& err) {
      return usage_error(err.what());
    }
    std::cout << line << ": " << (v.holds ? "holds" : "fails");
    if (!v.holds) {
      std::cout << " (" << reason_name(v.reason) << ")";
      if (!v.witness_text().empty())
        std::cout << " witness " << v.witness_kind() << " " << v.witness_text();
      all_hold = false;
    }
    std::cout << "\n";
  }
  return all_hold ? 0 : 1;
}

// ---------------------------------------------------------------- family

int run_family(const std::string& family, int k, const std::string& emit) {
  FamilySpec spec{family == "G" ? FamilySpec::Family::G : FamilySpec::Family::H,
                  k};
  try {
    if (emit == "graph6") {
      Graph g = spec.family == FamilySpec::Family::G ? family_G(k) : family_H(k);
      std::cout << to_graph6(g) << "\n";
    } else if (emit == "witness") {
      Verdict v;
      v.vertex_set = tightness_witness(spec);
      std::cout << v.witness_text() << "\n";
    } else {
      return usage_error("unknown emit mode: " + emit);
    }
  } catch (const std::out_of_range& err) {
    return usage_error(err.what());
  }
  return 0;
}

// ---------------------------------------------------------------- verify

void print_summary(const Report& r) {
  std::cout << "claim " << r.claim << ": scanned " << r.scanned
            << ", hypothesis hits " << r.hypothesis_hits << ", "
            << r.failures()
            << (r.conjecture ? " notable findings" : " counterexamples")
            << (r.sampled ? " [sampled]" : "") << (r.vacuous ? " [vacuous]" : "")
            << "\n";
  for (const Counterexample& ce : r.counterexamples)
    std::cout << "  " << ce.graph6 << " param=" << ce.param << " "
              << ce.witness_kind << " " << ce.witness << "\n";
}

int run_verify(const std::string& claim_id, int builtin_order,
               const std::string& corpus_path, const std::string& filter_spec,
               std::uint64_t sample_budget, int k_max, const std::string& out,
               int threads) {
  Filters filters = parse_filters(filter_spec);
  std::optional<CorpusSpec> corpus;
  if (builtin_order >= 0)
    corpus = CorpusSpec::builtin(builtin_order, filters);
  else if (!corpus_path.empty())
    corpus = CorpusSpec::file(corpus_path, filters);

  std::vector<Report> reports;
  if (claim_id == "family-tightness" || claim_id == "FAMILY-TIGHTNESS") {
    reports.push_back(verify_family_tightness(k_max, sample_budget));
  } else if (claim_id == "all") {
    if (!corpus) return usage_error("verify all needs --builtin or --corpus");
    for (const Claim& c : claim_registry())
      reports.push_back(verify_claim(c.id, *corpus, threads));
  } else {
    if (!find_claim(claim_id)) return usage_error("unknown claim id: " + claim_id);
    if (!corpus) return usage_error("verify needs --builtin or --corpus");
    reports.push_back(verify_claim(claim_id, *corpus, threads));
  }

  bool real_failure = false;
  std::string jsonl;
  for (const Report& r : reports) {
    print_summary(r);
    jsonl += r.to_jsonl();
    if (!r.conjecture && r.failures() > 0) real_failure = true;
  }
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) return usage_error("cannot write " + out);
    f << jsonl;
  }
  return real_failure ? 1 : 0;
}

// ------------------------------------------------------------------ scan

int run_scan(const std::string& mode, int k, int n, int builtin_order,
             const std::string& corpus_path, const std::string& filter_spec,
             const std::string& out, int threads) {
  Filters filters = parse_filters(filter_spec);
  std::optional<CorpusSpec> corpus;
  if (builtin_order >= 0)
    corpus = CorpusSpec::builtin(builtin_order, filters);
  else if (!corpus_path.empty())
    corpus = CorpusSpec::file(corpus_path, filters);
  if (!corpus) return usage_error("scan needs --builtin or --corpus");

  PropertySpec prop = mode == "minimal-extendable"
                          ? PropertySpec::extendable(k)
                          : PropertySpec::factor_critical(n);
  Report r = scan_minimal_degrees(*corpus, prop, threads);
  print_summary(r);
  std::cout << "  delta distribution:";
  for (auto [delta, count] : r.delta_histogram)
    std::cout << " " << delta << ":" << count;
  std::cout << "\n";
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) return usage_error("cannot write " + out);
    f << r.to_jsonl();
  }
  return 0;
}

// ---------------------------------------------------------------- encode

Graph parse_expression(const std::vector<std::string>& tokens, std::size_t& pos) {
  if (pos >= tokens.size())
    throw std::runtime_error("unexpected end of construction expression");
  std::string op = tokens[pos++];
  if (op == "K" || op == "I") {
    if (pos >= tokens.size())
      throw std::runtime_error("expected a vertex count after " + op);
    int n = std::stoi(tokens[pos++]);
    return op == "K" ? Graph::complete(n) : Graph::edgeless(n);
  }
  if (op == "union" || op == "join") {
    Graph a = parse_expression(tokens, pos);
    Graph b = parse_expression(tokens, pos);
    return op == "union" ? disjoint_union(a, b) : join(a, b);
  }
  throw std::runtime_error("unknown construction token: " + op);
}

int run_encode(const std::vector<std::string>& tokens) {
  try {
    std::size_t pos = 0;
    Graph g = parse_expression(tokens, pos);
    if (pos != tokens.size())
      throw std::runtime_error("trailing tokens in construction expression");
    std::cout << to_graph6(g) << "\n";
  } catch (const std::exception& err) {
    return usage_error(err.what());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matching extendability / factor-criticality toolkit"};
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "decide a property of input graphs");
  std::string property, graph6_arg, file_arg;
  int k = 0, n = 0;
  std::uint64_t budget_limit = 0;
  check->add_option("--property", property,
                    "extendable|half-extendable|factor-critical|"
                    "minimal-extendable|minimal-factor-critical|"
                    "balanced-bipartite")
      ->required();
  check->add_option("--k", k, "extendability parameter");
  check->add_option("--n", n, "factor-criticality parameter");
  check->add_option("--graph6", graph6_arg, "a single graph6 string");
  check->add_option("--file", file_arg, "graph6 file, one graph per line");
  check->add_option("--budget", budget_limit,
                    "cap on enumeration steps (0 = unlimited)");

  // family
  auto* family = app.add_subcommand("family", "emit an extremal family graph");
  std::string family_name, emit = "graph6";
  int family_k = 2;
  family->add_option("--family", family_name, "G or H")
      ->required()
      ->check(CLI::IsMember({"G", "H"}));
  family->add_option("--k", family_k, "family parameter (k >= 2)")->required();
  family->add_option("--emit", emit, "graph6|witness");

  // verify
  auto* verify = app.add_subcommand("verify", "check a registered claim over a corpus");
  std::string claim_id, corpus_path, filter_spec, out_path;
  int builtin_order = -1, threads = 0, k_max = 3;
  std::uint64_t sample_budget = 100000;
  verify->add_option("--claim", claim_id,
                     "claim id, 'all', or 'family-tightness'")
      ->required();
  verify->add_option("--builtin", builtin_order,
                     "labeled enumeration on this many vertices (<= 8)");
  verify->add_option("--corpus", corpus_path, "graph6 corpus file");
  verify->add_option("--filters", filter_spec,
                     "comma list: connected,even-order,odd-order,"
                     "non-bipartite,min-degree>=d");
  verify->add_option("--sample-budget", sample_budget,
                     "draws per sampled verification");
  verify->add_option("--k-max", k_max, "largest family parameter for family-tightness");
  verify->add_option("--out", out_path, "write the JSON Lines report here");
  verify->add_option("--threads", threads, "worker count (default: logical cores)");

  // scan
  auto* scan = app.add_subcommand("scan", "minimal-graph degree scan");
  std::string scan_mode, scan_corpus_path, scan_filter_spec, scan_out;
  int scan_k = 1, scan_n = 1, scan_builtin = -1, scan_threads = 0;
  scan->add_option("--mode", scan_mode,
                   "minimal-extendable|minimal-factor-critical")
      ->required()
      ->check(CLI::IsMember({"minimal-extendable", "minimal-factor-critical"}));
  scan->add_option("--k", scan_k, "extendability parameter");
  scan->add_option("--n", scan_n, "factor-criticality parameter");
  scan->add_option("--builtin", scan_builtin, "labeled enumeration order");
  scan->add_option("--corpus", scan_corpus_path, "graph6 corpus file");
  scan->add_option("--filters", scan_filter_spec, "corpus filters");
  scan->add_option("--out", scan_out, "write the JSON Lines report here");
  scan->add_option("--threads", scan_threads, "worker count");

  // encode
  auto* encode = app.add_subcommand(
      "encode", "build a graph from a prefix expression (K n, I n, union, join)");
  std::vector<std::string> tokens;
  encode->add_option("expression", tokens, "e.g.: join union K 3 I 1 union K 3 I 1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed())
      return run_check(property, k, n, graph6_arg, file_arg, budget_limit);
    if (family->parsed()) return run_family(family_name, family_k, emit);
    if (verify->parsed())
      return run_verify(claim_id, builtin_order, corpus_path, filter_spec,
                        sample_budget, k_max, out_path, threads);
    if (scan->parsed())
      return run_scan(scan_mode, scan_k, scan_n, scan_builtin, scan_corpus_path,
                      scan_filter_spec, scan_out, scan_threads);
    if (encode->parsed()) return run_encode(tokens);
  } catch (const std::exception& err) {
    return usage_error(err.what());
  }
  return usage_error("no subcommand given");
}
