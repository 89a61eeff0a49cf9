#pragma once

// Small graph constructors and brute-force checks shared by the test suites.
// The checks here use plain adjacency lists and DFS so they stay independent
// of the bitset code paths under test.

#include <algorithm>
#include <vector>

#include "kcon/classes.hpp"
#include "kcon/connectivity.hpp"
#include "kcon/fragments.hpp"
#include "kcon/graph.hpp"
#include "kcon/oracle.hpp"

namespace kcon::test {

inline Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

inline Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

// Two C4 blocks glued at vertex 0: 0-1-2-3-0 and 0-4-5-6-0.
inline Graph two_c4_at_vertex() {
  return Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 0}});
}

inline std::vector<std::vector<int>> lists(const Graph& g) {
  std::vector<std::vector<int>> adj(g.order());
  for (auto [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

// Connectivity of the graph with `removed` deleted, by recursive DFS.
inline bool connected_without(const std::vector<std::vector<int>>& adj,
                              const std::vector<bool>& removed) {
  const int n = static_cast<int>(adj.size());
  int start = -1;
  int alive = 0;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  if (alive <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{start};
  seen[start] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : adj[v])
      if (!removed[u] && !seen[u]) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
  }
  return reached == alive;
}

// kappa by trying all subsets in increasing size, with the n-1 convention.
inline int brute_kappa(const Graph& g) {
  const int n = g.order();
  auto adj = lists(g);
  bool complete_graph = true;
  for (int v = 0; v < n; ++v)
    if (static_cast<int>(adj[v].size()) != n - 1) complete_graph = false;
  if (complete_graph) return n - 1;
  for (int size = 0; size <= n - 2; ++size) {
    std::vector<bool> pick(n, false);
    std::fill(pick.end() - size, pick.end(), true);
    do {
      if (!connected_without(adj, pick)) return size;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return n - 1;
}

inline bool brute_k_connected_without(const Graph& g, const std::vector<Vertex>& drop, int k) {
  std::vector<Vertex> keep;
  for (int v = 0; v < g.order(); ++v)
    if (std::find(drop.begin(), drop.end(), v) == drop.end()) keep.push_back(v);
  if (static_cast<int>(keep.size()) < k + 1) return false;
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) {
    auto iu = std::find(keep.begin(), keep.end(), u);
    auto iv = std::find(keep.begin(), keep.end(), v);
    if (iu != keep.end() && iv != keep.end())
      e.emplace_back(static_cast<int>(iu - keep.begin()), static_cast<int>(iv - keep.begin()));
  }
  return brute_kappa(Graph(static_cast<int>(keep.size()), e)) >= k;
}

// Every (S, F, P) with S a minimum cut, F a fragment to S, and P a path of
// order <= m inside G - (S u F) such that kappa(G<S> - (F u P)) >= k.
// fn(s, f, path) is called for each; paths are taken in both orientations
// only once since the transfer depends on V(P).
template <typename Fn>
int for_each_transfer_tuple(const Graph& g, int m, Fn&& fn) {
  if (g.is_complete()) return 0;
  auto cat = fragment_catalogue(g);
  const int k = cat.kappa;
  int count = 0;
  for (const Fragment& f : cat.fragments) {
    const Graph aug = clique_augment(g, f.cut);
    Subgraph outside = remove_vertices(g, f.cut | f.part);
    for (int order = 1; order <= m && order <= outside.graph.order(); ++order)
      for (const auto& local : all_paths(outside.graph, order)) {
        std::vector<Vertex> path = outside.map.lift(local);
        if (!is_k_connected(remove_vertices(aug, f.part | VertexSet::from(path)).graph, k)) continue;
        ++count;
        fn(f.cut, f.part, path);
      }
  }
  return count;
}

}  // namespace kcon::test
