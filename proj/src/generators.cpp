#include "kcon/generators.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "kcon/connectivity.hpp"
#include "kcon/error.hpp"
#include "kcon/graph_io.hpp"
#include "kcon/parallel.hpp"
#include "kcon/rng.hpp"

namespace kcon {

BipartiteGraph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) fail(ErrorCode::InvalidArgument, "complete_bipartite needs a, b >= 1");
  if (a + b > kMaxVertices) fail(ErrorCode::TooLarge, "complete_bipartite exceeds 64 vertices");
  std::vector<Edge> edges;
  for (int x = 0; x < a; ++x)
    for (int y = a; y < a + b; ++y) edges.emplace_back(x, y);
  Graph g(a + b, edges);
  return {g, Bipartition(g, VertexSet::range(a))};
}

ClassInstance augmented_base(int k, int m) {
  if (k < 1 || m < 1) fail(ErrorCode::InvalidArgument, "augmented_base needs k, m >= 1");
  const int t = ceil_half(m + 1);
  const int side = k + t;
  auto base = complete_bipartite(side, side);
  const VertexSet s = VertexSet::range(k);
  return {clique_augment(base.graph, s), s, k, t};
}

BipartiteGraph glued_blocks(int k, int t, int blocks) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "glued_blocks needs k >= 1");
  if (t < k + 1) fail(ErrorCode::InvalidArgument, "glued_blocks needs block side t >= k+1");
  if (blocks < 2) fail(ErrorCode::InvalidArgument, "glued_blocks needs at least two blocks");
  const int n = k + blocks * (2 * t - k);
  if (n > kMaxVertices) fail(ErrorCode::TooLarge, "glued_blocks exceeds 64 vertices");
  std::vector<Edge> edges;
  VertexSet x = VertexSet::range(k);
  int next = k;
  for (int b = 0; b < blocks; ++b) {
    std::vector<Vertex> bx;
    for (int i = 0; i < k; ++i) bx.push_back(i);
    for (int i = 0; i < t - k; ++i) {
      x.insert(next);
      bx.push_back(next++);
    }
    for (int i = 0; i < t; ++i) {
      Vertex y = next++;
      for (Vertex u : bx) edges.emplace_back(u, y);
    }
  }
  Graph g(n, edges);
  return {g, Bipartition(g, x)};
}

RandomBipartite random_bipartite(int n_x, int n_y, int delta_target, int k, std::uint64_t seed,
                                 int max_tries) {
  if (n_x < 1 || n_y < 1) fail(ErrorCode::InvalidArgument, "random_bipartite needs both sides");
  if (n_x + n_y > kMaxVertices) fail(ErrorCode::TooLarge, "random_bipartite exceeds 64 vertices");
  const int small = std::min(n_x, n_y);
  if (delta_target > small)
    fail(ErrorCode::InvalidArgument, "delta_target " + std::to_string(delta_target) +
                                         " exceeds the smaller side " + std::to_string(small));
  const double p = std::min(1.0, (delta_target + 1.0) / small * 0.9);
  Xorshift64Star rng(seed);
  for (int attempt = 1; attempt <= max_tries; ++attempt) {
    std::vector<Edge> edges;
    for (int x = 0; x < n_x; ++x)
      for (int y = n_x; y < n_x + n_y; ++y)
        if (rng.bernoulli(p)) edges.emplace_back(x, y);
    Graph g(n_x + n_y, edges);
    if (g.min_degree() >= delta_target && is_k_connected(g, k))
      return {{g, Bipartition(g, VertexSet::range(n_x))}, attempt};
  }
  fail(ErrorCode::ExhaustedTries,
       "no acceptable graph after " + std::to_string(max_tries) + " tries");
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  Xorshift64Star rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

namespace {

Graph extend(const Graph& g, Mask nbrs) {
  std::vector<Mask> adj = g.adjacency();
  const Vertex v = g.order();
  for (Vertex u : VertexSet(nbrs)) adj[u] |= bit(v);
  adj.push_back(nbrs);
  return Graph::from_adjacency(std::move(adj));
}

struct Candidate {
  std::uint64_t hash;
  std::uint32_t parent;
  Mask nbrs;
};

}  // namespace

std::vector<std::vector<Graph>> connected_graph_corpus(int max_n, bool bipartite_only, int jobs) {
  if (max_n < 1 || max_n > 12) fail(ErrorCode::TooLarge, "corpus order must lie in 1..12");
  std::vector<std::vector<Graph>> levels(max_n + 1);
  levels[1].push_back(Graph::empty(1));
  for (int n = 2; n <= max_n; ++n) {
    const auto& prev = levels[n - 1];
    const Mask limit = Mask{1} << (n - 1);
    std::vector<std::vector<Candidate>> per_parent(prev.size());
    parallel_for(prev.size(), jobs, [&](std::size_t i) {
      for (Mask nbrs = 1; nbrs < limit; ++nbrs) {
        Graph h = extend(prev[i], nbrs);
        if (bipartite_only && !is_bipartite(h)) continue;
        per_parent[i].push_back({invariant_hash(h), static_cast<std::uint32_t>(i), nbrs});
      }
    });
    std::vector<Candidate> all;
    for (auto& part : per_parent) all.insert(all.end(), part.begin(), part.end());
    per_parent.clear();
    std::stable_sort(all.begin(), all.end(),
                     [](const Candidate& a, const Candidate& b) { return a.hash < b.hash; });

    std::vector<std::pair<std::size_t, std::size_t>> groups;
    for (std::size_t i = 0; i < all.size();) {
      std::size_t j = i;
      while (j < all.size() && all[j].hash == all[i].hash) ++j;
      groups.emplace_back(i, j);
      i = j;
    }
    std::vector<std::vector<Graph>> distinct(groups.size());
    parallel_for(groups.size(), jobs, [&](std::size_t gi) {
      auto& reps = distinct[gi];
      for (std::size_t i = groups[gi].first; i < groups[gi].second; ++i) {
        Graph h = extend(prev[all[i].parent], all[i].nbrs);
        bool seen = std::any_of(reps.begin(), reps.end(),
                                [&](const Graph& r) { return isomorphic(r, h); });
        if (!seen) reps.push_back(std::move(h));
      }
    });
    for (auto& reps : distinct)
      for (auto& h : reps) levels[n].push_back(std::move(h));
    // Deterministic order independent of hashing details.
    std::vector<std::pair<std::string, std::size_t>> keyed;
    for (std::size_t i = 0; i < levels[n].size(); ++i) keyed.emplace_back(to_graph6(levels[n][i]), i);
    std::sort(keyed.begin(), keyed.end());
    std::vector<Graph> ordered;
    ordered.reserve(keyed.size());
    for (auto& [key, i] : keyed) ordered.push_back(std::move(levels[n][i]));
    levels[n] = std::move(ordered);
  }
  return levels;
}

FamilySpec parse_family(const nlohmann::json& j) {
  FamilySpec spec;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "complete_bipartite") spec.kind = FamilyKind::CompleteBipartite;
  else if (kind == "augmented_base") spec.kind = FamilyKind::AugmentedBase;
  else if (kind == "glued_blocks") spec.kind = FamilyKind::GluedBlocks;
  else if (kind == "random_bipartite") spec.kind = FamilyKind::RandomBipartite;
  else if (kind == "file") spec.kind = FamilyKind::File;
  else if (kind == "corpus") spec.kind = FamilyKind::Corpus;
  else fail(ErrorCode::InvalidArgument, "unknown family kind '" + kind + "'");
  auto get = [&](const char* key, auto& field) {
    if (j.contains(key)) j.at(key).get_to(field);
  };
  get("a", spec.a);
  get("b", spec.b);
  get("k", spec.k);
  get("t", spec.t);
  get("m", spec.m);
  get("blocks", spec.blocks);
  get("seed", spec.seed);
  get("count", spec.count);
  get("delta_target", spec.delta_target);
  get("n_x", spec.n_x);
  get("n_y", spec.n_y);
  get("max_n", spec.max_n);
  get("min_n", spec.min_n);
  get("max_tries", spec.max_tries);
  get("bipartite_only", spec.bipartite_only);
  get("path", spec.path);

  switch (spec.kind) {
    case FamilyKind::CompleteBipartite:
      if (spec.a < 1 || spec.b < 1) fail(ErrorCode::InvalidArgument, "complete_bipartite needs a, b >= 1");
      break;
    case FamilyKind::AugmentedBase:
      if (spec.k < 1 || spec.m < 1) fail(ErrorCode::InvalidArgument, "augmented_base needs k, m >= 1");
      break;
    case FamilyKind::GluedBlocks:
      if (spec.t < spec.k + 1) fail(ErrorCode::InvalidArgument, "glued_blocks needs t >= k+1");
      break;
    case FamilyKind::RandomBipartite:
      if (spec.count < 0) fail(ErrorCode::InvalidArgument, "count must be non-negative");
      if (spec.max_n > 0 ? spec.max_n < 2 * spec.delta_target
                         : std::min(spec.n_x, spec.n_y) < spec.delta_target)
        fail(ErrorCode::InvalidArgument, "random_bipartite sizes too small for delta_target");
      break;
    case FamilyKind::File:
      if (spec.path.empty()) fail(ErrorCode::InvalidArgument, "file family needs a path");
      break;
    case FamilyKind::Corpus:
      if (spec.max_n < 1 || spec.max_n > 12) fail(ErrorCode::InvalidArgument, "corpus max_n must be 1..12");
      break;
  }
  return spec;
}

std::vector<Graph> generate_family(const FamilySpec& spec, int jobs) {
  switch (spec.kind) {
    case FamilyKind::CompleteBipartite:
      return {complete_bipartite(spec.a, spec.b).graph};
    case FamilyKind::AugmentedBase:
      return {augmented_base(spec.k, spec.m).graph};
    case FamilyKind::GluedBlocks:
      return {glued_blocks(spec.k, spec.t, spec.blocks).graph};
    case FamilyKind::RandomBipartite: {
      std::vector<Graph> out(spec.count);
      parallel_for(out.size(), jobs, [&](std::size_t i) {
        const std::uint64_t seed = spec.seed + i;
        int n_x = spec.n_x;
        int n_y = spec.n_y;
        if (spec.max_n > 0) {
          Xorshift64Star sizes(seed ^ 0x5DEECE66DULL);
          n_x = sizes.between(spec.delta_target, spec.max_n - spec.delta_target);
          n_y = sizes.between(spec.delta_target, spec.max_n - n_x);
        }
        out[i] = random_bipartite(n_x, n_y, spec.delta_target, spec.k, seed, spec.max_tries)
                     .result.graph;
      });
      return out;
    }
    case FamilyKind::File: {
      std::ifstream in(spec.path, std::ios::binary);
      if (!in) fail(ErrorCode::InvalidArgument, "cannot open family file " + spec.path);
      std::stringstream buffer;
      buffer << in.rdbuf();
      return parse_graph6_lines(buffer.str());
    }
    case FamilyKind::Corpus: {
      auto levels = connected_graph_corpus(spec.max_n, spec.bipartite_only, jobs);
      std::vector<Graph> out;
      for (int n = std::max(1, spec.min_n); n <= spec.max_n; ++n)
        out.insert(out.end(), levels[n].begin(), levels[n].end());
      return out;
    }
  }
  return {};
}

}  // namespace kcon
