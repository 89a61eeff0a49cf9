#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kcon/classes.hpp"
#include "kcon/graph.hpp"

namespace kcon {

struct BipartiteGraph {
  Graph graph;
  Bipartition parts;
};

// K_{a,b} with X = {0..a-1}.
BipartiteGraph complete_bipartite(int a, int b);

// K_{t',t'}<S> with t' = k + ceil((m+1)/2), S the first k vertices of X and
// C = S; t of the instance is ceil((m+1)/2).
ClassInstance augmented_base(int k, int m);

// `blocks` copies of K_{t,t} sharing the k-set S0 = {0..k-1} inside their X
// sides. Each block adds t-k private X vertices and t Y vertices. Shared
// vertices have degree blocks*t, all others t; kappa = k and S0 is a cut.
BipartiteGraph glued_blocks(int k, int t, int blocks = 2);

struct RandomBipartite {
  BipartiteGraph result;
  int tries = 0;
};

// Rejection sampling of G(n_x, n_y, p) with p = min(1, 0.9*(delta+1)/min(n_x,n_y)),
// accepted once delta(G) >= delta_target and kappa(G) >= k. Throws
// InvalidArgument when delta_target > min(n_x, n_y), ExhaustedTries after
// max_tries rejections.
RandomBipartite random_bipartite(int n_x, int n_y, int delta_target, int k, std::uint64_t seed,
                                 int max_tries = 10'000);

// Uniform G(n, p) on n vertices; used for connectivity cross-checks.
Graph random_graph(int n, double p, std::uint64_t seed);

// All connected graphs (optionally only bipartite ones) up to isomorphism,
// indexed by order: result[n] holds the graphs on n vertices, 1 <= n <= max_n.
// Built by one-vertex extension: every connected graph has a vertex whose
// deletion leaves it connected.
std::vector<std::vector<Graph>> connected_graph_corpus(int max_n, bool bipartite_only, int jobs = 1);

enum class FamilyKind { CompleteBipartite, AugmentedBase, GluedBlocks, RandomBipartite, File, Corpus };

// Small config block describing a family of graphs. Unused fields are ignored.
struct FamilySpec {
  FamilyKind kind = FamilyKind::RandomBipartite;
  int a = 0, b = 0;
  int k = 1, t = 2, m = 1;
  int blocks = 2;
  std::uint64_t seed = 0;
  int count = 1;
  int delta_target = 0;
  int n_x = 0, n_y = 0;
  int max_n = 0;          // random: sizes drawn with n_x + n_y <= max_n when > 0
  int max_tries = 10'000;
  bool bipartite_only = true;  // corpus kind
  int min_n = 1;               // corpus kind
  std::string path;            // file kind: graph6 lines
};

FamilySpec parse_family(const nlohmann::json& j);
std::vector<Graph> generate_family(const FamilySpec& spec, int jobs = 1);

}  // namespace kcon
