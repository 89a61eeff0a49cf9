#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kcon/error.hpp"
#include "kcon/graph_io.hpp"
#include "kcon/rng.hpp"
#include "support.hpp"

using namespace kcon;
using namespace kcon::test;

namespace {

// Reference graph6 decoder written directly from the format description:
// n as one byte n+63, then the upper triangle column by column, six bits per
// byte, most significant bit first.
std::vector<Edge> reference_decode(const std::string& s) {
  int n = s[0] - 63;
  std::vector<int> bits;
  for (std::size_t i = 1; i < s.size(); ++i)
    for (int b = 5; b >= 0; --b) bits.push_back(((s[i] - 63) >> b) & 1);
  std::vector<Edge> edges;
  int k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (bits[k++]) edges.emplace_back(i, j);
  return edges;
}

}  // namespace

TEST_CASE("edge list parsing") {
  Graph p = parse_edge_list("3\n0 1\n1 2");
  CHECK(p == path_graph(3));
  Graph empty = parse_edge_list("4\n");
  CHECK(empty.order() == 4);
  CHECK(empty.min_degree() == 0);
  CHECK(to_edge_list(parse_edge_list("3\n2 1\n\n# note\n0 1\n")) == "3\n0 1\n1 2\n");
}

TEST_CASE("edge list errors carry line numbers") {
  auto message = [](const std::string& text) {
    try {
      parse_edge_list(text);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("3\n0 3\n").find("line 2") != std::string::npos);
  CHECK(message("3\n0 1\n1 1\n").find("line 3") != std::string::npos);
  CHECK(message("3\n0 1\n1 0\n").find("parallel") != std::string::npos);
  CHECK(message("x\n").find("line 1") != std::string::npos);
  CHECK(message("").find("missing header") != std::string::npos);
  CHECK(message("3\n0 1 2\n").find("line 2") != std::string::npos);
  CHECK_THROWS_AS(parse_edge_list("5\n", ParseOptions{4}), Error);
}

TEST_CASE("graph6 known values") {
  Graph d = parse_graph6("D?{");
  CHECK(d.order() == 5);
  CHECK(d.edges() == std::vector<Edge>{{0, 4}, {1, 4}, {2, 4}, {3, 4}});
  CHECK(d.edges() == reference_decode("D?{"));
  CHECK(to_graph6(d) == "D?{");
  CHECK(to_graph6(petersen()) == "IheA@GUAo");
  CHECK(parse_graph6(">>graph6<<D?{\n") == d);
  CHECK(to_graph6(Graph::empty(1)) == "@");
  CHECK(to_graph6(Graph::empty(0)) == "?");
}

TEST_CASE("graph6 errors carry byte offsets") {
  auto message = [](const std::string& text) {
    try {
      parse_graph6(text);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("D?").find("byte") != std::string::npos);
  CHECK(message("D? ").find("byte 2") != std::string::npos);
  CHECK(message("D?|").find("padding") != std::string::npos);
  CHECK(message("D?{{").find("byte") != std::string::npos);
}

TEST_CASE("round trips on random graphs, including orders above 62") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Xorshift64Star rng(seed);
    const int n = seed < 90 ? rng.between(0, 20) : rng.between(60, 64);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.bernoulli(0.3)) edges.emplace_back(u, v);
    Graph g(n, edges);
    std::string g6 = to_graph6(g);
    CHECK(parse_graph6(g6) == g);
    CHECK(to_graph6(parse_graph6(g6)) == g6);
    if (n <= 62 && n > 0) {
      auto ref = reference_decode(g6);
      std::sort(ref.begin(), ref.end());
      CHECK(ref == g.edges());
    }
    std::string el = to_edge_list(g);
    CHECK(parse_edge_list(el) == g);
    CHECK(to_edge_list(parse_edge_list(el)) == el);
  }
}

TEST_CASE("graph6 line files") {
  auto graphs = parse_graph6_lines("D?{\n\nC~\n");
  REQUIRE(graphs.size() == 2);
  CHECK(graphs[1] == complete(4));
  CHECK_THROWS_AS(parse_graph6_lines("D?{\nC\n"), Error);
  CHECK(parse_format("graph6") == GraphFormat::Graph6);
  CHECK_THROWS_AS(parse_format("dot"), Error);
}
