#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kcon/error.hpp"
#include "kcon/graph.hpp"
#include "kcon/rng.hpp"
#include "support.hpp"

using namespace kcon;
using namespace kcon::test;

TEST_CASE("graph construction rejects loops, parallel edges and bad ids") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), Error);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), Error);
  CHECK_THROWS_AS(Graph(65, {}), Error);
  Graph g(4, {});
  CHECK(g.min_degree() == 0);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("induced_subgraph") {
  SUBCASE("identity on K3") {
    Graph k3 = complete(3);
    auto sub = induced_subgraph(k3, k3.vertices());
    CHECK(sub.graph == k3);
  }
  SUBCASE("C4 on three vertices is a path") {
    auto sub = induced_subgraph(cycle(4), VertexSet{0, 1, 2});
    CHECK(sub.graph == path_graph(3));
    CHECK(sub.map.to_parent == std::vector<Vertex>{0, 1, 2});
    CHECK(sub.map.child(3) == -1);
  }
  SUBCASE("Petersen independent sets induce edgeless graphs") {
    Graph p = petersen();
    auto adj = lists(p);
    int found = 0;
    for (Mask m = 0; m < (Mask{1} << 10); ++m) {
      VertexSet s(m);
      if (s.size() < 4) continue;
      bool independent = true;
      for (Vertex u : s)
        for (int v : adj[u])
          if (s.contains(v)) independent = false;
      if (!independent) continue;
      ++found;
      CHECK(induced_subgraph(p, s).graph.edge_count() == 0);
    }
    // The independence number of the Petersen graph is 4, attained 5 times.
    CHECK(found == 5);
  }
  CHECK_THROWS_AS(induced_subgraph(cycle(4), VertexSet{4}), Error);
}

TEST_CASE("remove_vertices") {
  CHECK(remove_vertices(complete(4), VertexSet{2}).graph == complete(3));
  Graph k22(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  Graph rest = remove_vertices(k22, VertexSet{0}).graph;
  CHECK(rest.edge_count() == 2);
  CHECK(rest.is_connected());
  Graph c6 = remove_vertices(cycle(6), VertexSet{0, 3}).graph;
  CHECK(c6.components().size() == 2);
  CHECK(c6.edge_count() == 2);
  CHECK_THROWS_AS(remove_vertices(complete(3), VertexSet{0, 1, 2}), Error);
}

TEST_CASE("clique_augment and union") {
  Graph p3 = path_graph(3);
  CHECK(clique_augment(p3, VertexSet{1}) == p3);
  CHECK(clique_augment(p3, VertexSet{}) == p3);
  CHECK(clique_augment(p3, VertexSet{0, 2}) == complete(3));
  Graph k22(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  Graph aug = clique_augment(k22, VertexSet{0, 1});
  CHECK(aug.adjacent(0, 1));
  CHECK(aug.edge_count() == 5);
  CHECK(brute_kappa(aug) == 2);

  CHECK(graph_union(p3, p3) == p3);
  CHECK(graph_union(Graph(3, {{0, 1}}), Graph(3, {{1, 2}})) == p3);
  CHECK(graph_union(cycle(4), Graph(4, {{0, 2}, {1, 3}})) == complete(4));
  CHECK_THROWS_AS(graph_union(p3, cycle(4)), Error);
}

TEST_CASE("random graphs: augmentation is idempotent and monotone, removal matches induced") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Xorshift64Star rng(seed);
    const int n = rng.between(1, 12);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.bernoulli(0.4)) edges.emplace_back(u, v);
    Graph g(n, edges);
    VertexSet s(rng.next() & low_bits(n));
    Graph a = clique_augment(g, s);
    CHECK(a.order() == g.order());
    CHECK(clique_augment(a, s) == a);
    for (auto [u, v] : g.edges()) CHECK(a.adjacent(u, v));
    if (s != g.vertices()) {
      auto r1 = remove_vertices(g, s);
      auto r2 = induced_subgraph(g, g.vertices() - s);
      CHECK(r1.graph == r2.graph);
      CHECK(r1.map.to_parent == r2.map.to_parent);
    }
  }
}

TEST_CASE("bipartition") {
  CHECK(is_bipartite(cycle(6)));
  CHECK_FALSE(is_bipartite(cycle(5)));
  auto b = Bipartition::of(cycle(4));
  REQUIRE(b);
  CHECK(b->x() == VertexSet{0, 2});
  CHECK_THROWS_AS(Bipartition(cycle(4), VertexSet{0, 1}), Error);
}

TEST_CASE("paths alternate sides: outside vertices see at most ceil(order/2) path vertices") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Xorshift64Star rng(seed);
    const int nx = rng.between(2, 6);
    const int ny = rng.between(2, 6);
    std::vector<Edge> edges;
    for (int x = 0; x < nx; ++x)
      for (int y = nx; y < nx + ny; ++y)
        if (rng.bernoulli(0.6)) edges.emplace_back(x, y);
    Graph g(nx + ny, edges);
    // Walk random paths.
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Vertex> seq{rng.between(0, nx + ny - 1)};
      while (true) {
        VertexSet next = g.neighbors(seq.back()) - VertexSet::from(seq);
        if (next.empty() || seq.size() >= 6) break;
        auto opts = next.to_vector();
        seq.push_back(opts[rng.between(0, static_cast<int>(opts.size()) - 1)]);
      }
      Path p(g, seq);
      for (Vertex v : g.vertices() - p.vertex_set())
        CHECK((g.neighbors(v) & p.vertex_set()).size() <= (p.order() + 1) / 2);
    }
  }
}

TEST_CASE("path validation") {
  Graph c4 = cycle(4);
  CHECK_NOTHROW(Path(c4, {0, 1, 2}));
  CHECK_THROWS_AS(Path(c4, {0, 2}), Error);
  CHECK_THROWS_AS(Path(c4, {0, 1, 0}), Error);
  CHECK_THROWS_AS(Path(c4, {}), Error);
  Path p(c4, {3, 0, 1});
  CHECK(p.ends() == VertexSet{1, 3});
}

TEST_CASE("isomorphism") {
  Graph c4 = cycle(4);
  Graph shuffled(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
  CHECK(isomorphic(c4, shuffled));
  CHECK(invariant_hash(c4) == invariant_hash(shuffled));
  CHECK_FALSE(isomorphic(c4, path_graph(4)));
  // Same degree sequence, different graphs: C6 vs two triangles.
  Graph triangles(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK_FALSE(isomorphic(cycle(6), triangles));
  // Random relabelings are recognised.
  Graph p = petersen();
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Xorshift64Star rng(seed);
    std::vector<int> perm(10);
    for (int i = 0; i < 10; ++i) perm[i] = i;
    for (int i = 9; i > 0; --i) std::swap(perm[i], perm[rng.between(0, i)]);
    std::vector<Edge> e;
    for (auto [u, v] : p.edges()) e.emplace_back(perm[u], perm[v]);
    CHECK(isomorphic(p, Graph(10, e)));
  }
}

TEST_CASE("vertex set helpers") {
  VertexSet s{3, 1, 2};
  CHECK(s.to_vector() == std::vector<Vertex>{1, 2, 3});
  CHECK(s.str() == "{1,2,3}");
  CHECK(lex_less(VertexSet{0, 5}, VertexSet{1, 2}));
  CHECK(lex_less(VertexSet{0}, VertexSet{0, 1}));
  CHECK_FALSE(lex_less(VertexSet{0, 1}, VertexSet{0, 1}));
}
