// Generates all connected graphs on n vertices up to isomorphism, one
// graph6 line each, by single-vertex augmentation with isomorphism
// rejection. Intended for producing the exhaustive small corpora the
// verifier scans.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "matchkit/corpus.hpp"
#include "matchkit/graph6.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exhaustive connected-graph corpus generator"};
  int n = 0;
  std::string out_path;
  app.add_option("--n", n, "vertex count (1..10)")->required();
  app.add_option("--out", out_path, "output file (default: stdout)");
  CLI11_PARSE(app, argc, argv);

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
    out = &file;
  }

  std::uint64_t count = 0;
  try {
    matchkit::generate_connected_graphs(n, [&](const matchkit::Graph& g) {
      *out << matchkit::to_graph6(g) << "\n";
      ++count;
    });
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  std::cerr << count << " connected graphs on " << n << " vertices\n";
  return 0;
}
