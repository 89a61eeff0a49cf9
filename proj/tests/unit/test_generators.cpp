#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>

#include "kcon/connectivity.hpp"
#include "kcon/error.hpp"
#include "kcon/generators.hpp"
#include "kcon/graph_io.hpp"
#include "kcon/rng.hpp"
#include "support.hpp"

using namespace kcon;
using namespace kcon::test;

namespace {

// Canonical form by brute force over all relabelings: the smallest upper
// triangle bit string.
std::vector<bool> canonical(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<bool> best;
  do {
    std::vector<bool> code;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) code.push_back(g.adjacent(perm[u], perm[v]));
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Number of connected (bipartite) graphs on n vertices up to isomorphism,
// counted over all labelled graphs.
std::size_t brute_count(int n, bool bipartite_only) {
  std::vector<Edge> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::set<std::vector<bool>> seen;
  for (std::uint32_t mask = 0; mask < (1U << slots.size()); ++mask) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1U) e.push_back(slots[i]);
    Graph g(n, e);
    if (!g.is_connected()) continue;
    if (bipartite_only && !is_bipartite(g)) continue;
    seen.insert(canonical(g));
  }
  return seen.size();
}

}  // namespace

TEST_CASE("rng reference values") {
  Xorshift64Star a(0);
  CHECK(a.next() == 0x7bbcb40d550682d0ULL);
  CHECK(a.next() == 0xde7fe413d00cc9fdULL);
  CHECK(a.next() == 0xb3c638353c668c91ULL);
  Xorshift64Star b(42);
  CHECK(b.next() == 0x31b0ece7c4f697a2ULL);
  CHECK(b.next() == 0x9008a3b1cb686f03ULL);
  CHECK(Xorshift64Star::kRngVersion == 1);
  Xorshift64Star c(7);
  for (int i = 0; i < 1000; ++i) {
    int x = c.between(3, 9);
    CHECK((x >= 3 && x <= 9));
    double u = c.uniform();
    CHECK((u >= 0.0 && u < 1.0));
  }
}

TEST_CASE("complete bipartite") {
  auto k11 = complete_bipartite(1, 1);
  CHECK(k11.graph.edges() == std::vector<Edge>{{0, 1}});
  auto k33 = complete_bipartite(3, 3);
  CHECK(kappa(k33.graph).value == 3);
  CHECK(k33.graph.min_degree() == 3);
  CHECK(k33.parts.x() == VertexSet{0, 1, 2});
  CHECK(kappa(complete_bipartite(2, 5).graph).value == 2);
  CHECK_THROWS_AS(complete_bipartite(0, 3), Error);
}

TEST_CASE("augmented base") {
  ClassInstance a = augmented_base(1, 2);
  CHECK(isomorphic(a.graph, complete_bipartite(3, 3).graph));
  CHECK(a.t == 2);
  ClassInstance b = augmented_base(2, 3);
  CHECK(b.graph.order() == 8);
  CHECK(b.graph.edge_count() == 17);
  CHECK(b.graph.adjacent(0, 1));
  CHECK(b.clique == VertexSet{0, 1});
  for (int k = 1; k <= 4; ++k)
    for (int m = 1; m <= 4; ++m) {
      ClassInstance inst = augmented_base(k, m);
      auto r = class_membership(inst);
      CHECK(r.verdict == Membership::MemberPlus);
      CHECK(inst.graph.order() == 2 * (k + ceil_half(m + 1)));
    }
}

TEST_CASE("glued blocks") {
  SUBCASE("k = 1, t = 2: two C4 blocks at a vertex") {
    auto g = glued_blocks(1, 2, 2);
    CHECK(isomorphic(g.graph, two_c4_at_vertex()));
    CHECK(brute_kappa(g.graph) == 1);
  }
  SUBCASE("k = 2, t = 4") {
    auto g = glued_blocks(2, 4, 2);
    CHECK(g.graph.order() == 14);
    CHECK(brute_kappa(g.graph) == 2);
    CHECK(all_min_cuts(g.graph) == std::vector<VertexSet>{VertexSet{0, 1}});
    CHECK(is_bipartite(g.graph));
    CHECK(g.graph.min_degree() == 4);
  }
  SUBCASE("three blocks") {
    auto g = glued_blocks(1, 3, 3);
    CHECK(brute_kappa(g.graph) == 1);
    auto dec = decompose(g.graph, VertexSet{0});
    CHECK(dec.components.size() == 3);
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(glued_blocks(2, 2, 2), Error);
    CHECK_THROWS_AS(glued_blocks(1, 3, 1), Error);
  }
}

TEST_CASE("random bipartite") {
  auto r = random_bipartite(4, 4, 3, 2, 1);
  CHECK(r.tries >= 1);
  CHECK(r.result.graph.min_degree() >= 3);
  CHECK(brute_kappa(r.result.graph) >= 2);
  CHECK(is_bipartite(r.result.graph));
  auto again = random_bipartite(4, 4, 3, 2, 1);
  CHECK(again.result.graph.edges() == r.result.graph.edges());
  CHECK(again.tries == r.tries);
  CHECK_THROWS_AS(random_bipartite(3, 5, 4, 1, 1), Error);
  try {
    random_bipartite(5, 5, 2, 5, 3, 3);  // needs K55 at p = 0.54
    FAIL("expected ExhaustedTries");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ExhaustedTries);
  }
}

TEST_CASE("connected graph corpus") {
  // Connected graphs and connected bipartite graphs up to isomorphism.
  const std::vector<std::size_t> all{0, 1, 1, 2, 6, 21, 112, 853, 11117};
  const std::vector<std::size_t> bip{0, 1, 1, 1, 3, 5, 17, 44, 182};
  auto a = connected_graph_corpus(8, false);
  auto b = connected_graph_corpus(8, true);
  for (int n = 1; n <= 8; ++n) {
    CHECK(a[n].size() == all[n]);
    CHECK(b[n].size() == bip[n]);
  }
  for (int n = 1; n <= 5; ++n) {
    CHECK(a[n].size() == brute_count(n, false));
    CHECK(b[n].size() == brute_count(n, true));
  }
  for (int n = 1; n <= 6; ++n) {
    std::set<std::vector<bool>> forms;
    for (const Graph& g : a[n]) {
      CHECK(g.is_connected());
      forms.insert(canonical(g));
    }
    CHECK(forms.size() == a[n].size());
  }
  auto parallel = connected_graph_corpus(7, false, 3);
  for (int n = 1; n <= 7; ++n)
    for (std::size_t i = 0; i < a[n].size(); ++i) CHECK(to_graph6(parallel[n][i]) == to_graph6(a[n][i]));
  CHECK_THROWS_AS(connected_graph_corpus(13, false), Error);
}

TEST_CASE("family configs") {
  SUBCASE("random family is deterministic and certified") {
    auto spec = parse_family(nlohmann::json::parse(
        R"({"kind":"random_bipartite","k":2,"delta_target":4,"seed":42,"count":30,"max_n":12})"));
    auto one = generate_family(spec, 1);
    auto two = generate_family(spec, 3);
    REQUIRE(one.size() == 30);
    for (std::size_t i = 0; i < one.size(); ++i) {
      CHECK(to_graph6(one[i]) == to_graph6(two[i]));
      CHECK(one[i].order() <= 12);
      CHECK(one[i].min_degree() >= 4);
      CHECK(is_bipartite(one[i]));
      CHECK(is_k_connected(one[i], 2));
    }
  }
  SUBCASE("fixed kinds") {
    CHECK(generate_family(parse_family({{"kind", "complete_bipartite"}, {"a", 2}, {"b", 3}}))[0].order() == 5);
    CHECK(generate_family(parse_family({{"kind", "augmented_base"}, {"k", 1}, {"m", 2}}))[0].order() == 6);
    CHECK(generate_family(parse_family({{"kind", "glued_blocks"}, {"k", 1}, {"t", 2}}))[0].order() == 7);
    auto corpus = generate_family(parse_family({{"kind", "corpus"}, {"max_n", 6}, {"min_n", 6}}));
    CHECK(corpus.size() == 17);
  }
  SUBCASE("file kind") {
    const std::string path = "test_generators_family.g6";
    {
      std::ofstream out(path);
      out << "C~\nD?{\n";
    }
    auto family = generate_family(parse_family({{"kind", "file"}, {"path", path}}));
    std::remove(path.c_str());
    REQUIRE(family.size() == 2);
    CHECK(family[0].is_complete());
    CHECK(family[1].edge_count() == 4);
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(parse_family({{"kind", "nope"}}), Error);
    CHECK_THROWS_AS(parse_family({{"kind", "glued_blocks"}, {"k", 3}, {"t", 3}}), Error);
    CHECK_THROWS_AS(parse_family({{"kind", "file"}}), Error);
    CHECK_THROWS_AS(parse_family(
                        {{"kind", "random_bipartite"}, {"delta_target", 4}, {"n_x", 3}, {"n_y", 5}}),
                    Error);
  }
}
