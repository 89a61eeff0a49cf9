// Writes every connected graph (or connected bipartite graph) up to a given
// order as graph6 lines, one isomorphism class per line.
#include <iostream>

#include <CLI11.hpp>

#include "kcon/generators.hpp"
#include "kcon/graph_io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"kcon-corpus: connected graph corpus in graph6"};
  int max_n = 8;
  int min_n = 1;
  int jobs = 1;
  bool bipartite = false;
  app.add_option("--max-n", max_n)->check(CLI::Range(1, 12));
  app.add_option("--min-n", min_n)->check(CLI::Range(1, 12));
  app.add_flag("--bipartite", bipartite, "Only bipartite graphs");
  app.add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  auto levels = kcon::connected_graph_corpus(max_n, bipartite, jobs);
  for (int n = min_n; n <= max_n; ++n)
    for (const auto& g : levels[n]) std::cout << kcon::to_graph6(g) << '\n';
  return 0;
}
