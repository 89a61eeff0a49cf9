#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kcon/graph.hpp"

namespace kcon {

struct Kappa {
  int value = 0;
  std::optional<VertexSet> witness_cut;  // absent iff the graph is complete
};

// Vertex connectivity by unit-capacity max-flow on the vertex-split digraph.
// Pairs checked: a minimum-degree vertex against each non-neighbour, and
// every non-adjacent pair inside its neighbourhood.
Kappa kappa(const Graph& g);

// Same pair coverage with flows capped at k.
bool is_k_connected(const Graph& g, int k);

// Oracle: smallest subset whose removal disconnects G, by exhaustive search.
Kappa kappa_exhaustive(const Graph& g);

// Maximum number of internally disjoint s-t paths (s, t non-adjacent), capped.
int local_connectivity(const Graph& g, Vertex s, Vertex t, int cap = 1 << 30);

struct CutOptions {
  std::uint64_t budget = 50'000'000;  // max number of candidate subsets
};

// Every minimum vertex cut, lexicographically sorted. Throws TooLarge when
// C(n, kappa) exceeds the budget, InvalidArgument for complete graphs.
std::vector<VertexSet> all_min_cuts(const Graph& g, CutOptions opts = {});
std::vector<VertexSet> all_min_cuts(const Graph& g, int kappa_value, CutOptions opts = {});

std::uint64_t binomial(int n, int k);

}  // namespace kcon
