#include "kcon/graph.hpp"

#include <algorithm>
#include <string>

#include "kcon/error.hpp"

namespace kcon {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorCode::NoCFreeFragment: return "NoCFreeFragment";
    case ErrorCode::MeasureStall: return "MeasureStall";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::ExhaustedTries: return "ExhaustedTries";
    case ErrorCode::HostMismatch: return "HostMismatch";
  }
  return "Unknown";
}

std::string VertexSet::str() const {
  std::string out = "{";
  bool first_item = true;
  for (Vertex v : *this) {
    if (!first_item) out += ',';
    out += std::to_string(v);
    first_item = false;
  }
  out += '}';
  return out;
}

bool lex_less(VertexSet a, VertexSet b) {
  Mask x = a.bits();
  Mask y = b.bits();
  while (x != 0 && y != 0) {
    int vx = std::countr_zero(x);
    int vy = std::countr_zero(y);
    if (vx != vy) return vx < vy;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

Graph::Graph(int n, const std::vector<Edge>& edges) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "negative vertex count");
  if (n > kMaxVertices)
    fail(ErrorCode::TooLarge, "graph order " + std::to_string(n) + " exceeds " +
                                  std::to_string(kMaxVertices));
  adj_.assign(n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      fail(ErrorCode::OutOfRange, "edge " + std::to_string(u) + "-" + std::to_string(v) +
                                      " out of range for n=" + std::to_string(n));
    if (u == v) fail(ErrorCode::InvalidArgument, "self-loop at " + std::to_string(u));
    if (adjacent(u, v))
      fail(ErrorCode::InvalidArgument,
           "parallel edge " + std::to_string(u) + "-" + std::to_string(v));
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }
}

Graph Graph::from_adjacency(std::vector<Mask> adj) {
  const int n = static_cast<int>(adj.size());
  if (n > kMaxVertices) fail(ErrorCode::TooLarge, "graph order exceeds 64");
  for (int v = 0; v < n; ++v) {
    if ((adj[v] >> v) & 1U) fail(ErrorCode::InvalidArgument, "self-loop");
    if (adj[v] & ~low_bits(n)) fail(ErrorCode::OutOfRange, "neighbor out of range");
    for (Vertex u : VertexSet(adj[v]))
      if (!((adj[u] >> v) & 1U)) fail(ErrorCode::InvalidArgument, "asymmetric adjacency");
  }
  Graph g;
  g.adj_ = std::move(adj);
  return g;
}

VertexSet Graph::neighbors(VertexSet s) const {
  Mask out = 0;
  for (Vertex v : s) out |= adj_[v];
  return VertexSet(out) - s;
}

int Graph::min_degree() const {
  int best = order() == 0 ? 0 : order();
  for (Vertex v = 0; v < order(); ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::edge_count() const {
  int twice = 0;
  for (Mask m : adj_) twice += std::popcount(m);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : VertexSet(adj_[u] & ~low_bits(u + 1))) out.emplace_back(u, v);
  return out;
}

bool Graph::is_complete() const {
  for (Vertex v = 0; v < order(); ++v)
    if (degree(v) != order() - 1) return false;
  return true;
}

std::vector<VertexSet> Graph::components(VertexSet within) const {
  std::vector<VertexSet> out;
  Mask left = within.bits();
  while (left != 0) {
    Mask seen = left & (~left + 1);
    Mask frontier = seen;
    while (frontier != 0) {
      Mask next = 0;
      for (Vertex v : VertexSet(frontier)) next |= adj_[v];
      next &= left & ~seen;
      seen |= next;
      frontier = next;
    }
    out.emplace_back(seen);
    left &= ~seen;
  }
  return out;
}

bool Graph::connected_within(VertexSet within) const {
  if (within.empty()) return true;
  Mask seen = bit(within.first());
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    for (Vertex v : VertexSet(frontier)) next |= adj_[v];
    next &= within.bits() & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == within.bits();
}

std::uint64_t Graph::fingerprint() const {
  // FNV-1a over the order and adjacency words.
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xFFU;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(order()));
  for (Mask m : adj_) mix(m);
  return h;
}

VertexSet IndexMap::lift(VertexSet child_set) const {
  VertexSet out;
  for (Vertex v : child_set) out.insert(to_parent.at(v));
  return out;
}

VertexSet IndexMap::project(VertexSet parent_set) const {
  VertexSet out;
  for (Vertex v : parent_set)
    if (v < static_cast<int>(to_child.size()) && to_child[v] >= 0) out.insert(to_child[v]);
  return out;
}

std::vector<Vertex> IndexMap::lift(const std::vector<Vertex>& seq) const {
  std::vector<Vertex> out;
  out.reserve(seq.size());
  for (Vertex v : seq) out.push_back(to_parent.at(v));
  return out;
}

void check_range(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices()))
    fail(ErrorCode::OutOfRange,
         "vertex set " + s.str() + " not within graph of order " + std::to_string(g.order()));
}

Subgraph induced_subgraph(const Graph& g, VertexSet s) {
  check_range(g, s);
  Subgraph out;
  out.map.to_child.assign(g.order(), -1);
  for (Vertex v : s) {
    out.map.to_child[v] = static_cast<Vertex>(out.map.to_parent.size());
    out.map.to_parent.push_back(v);
  }
  std::vector<Mask> adj(out.map.to_parent.size(), 0);
  for (std::size_t c = 0; c < adj.size(); ++c)
    for (Vertex p : g.neighbors(out.map.to_parent[c]) & s)
      adj[c] |= bit(out.map.to_child[p]);
  out.graph = Graph::from_adjacency(std::move(adj));
  return out;
}

Subgraph remove_vertices(const Graph& g, VertexSet s) {
  check_range(g, s);
  if (s == g.vertices() && g.order() > 0)
    fail(ErrorCode::InvalidArgument, "removing every vertex leaves an empty graph");
  return induced_subgraph(g, g.vertices() - s);
}

Graph clique_augment(const Graph& g, VertexSet s) {
  check_range(g, s);
  std::vector<Mask> adj = g.adjacency();
  for (Vertex v : s) adj[v] |= (s - VertexSet{v}).bits();
  return Graph::from_adjacency(std::move(adj));
}

Graph graph_union(const Graph& a, const Graph& b) {
  if (a.order() != b.order())
    fail(ErrorCode::InvalidArgument, "union of graphs over different vertex universes");
  std::vector<Mask> adj = a.adjacency();
  for (int v = 0; v < a.order(); ++v) adj[v] |= b.adjacency()[v];
  return Graph::from_adjacency(std::move(adj));
}

Bipartition::Bipartition(const Graph& g, VertexSet x) {
  check_range(g, x);
  x_ = x;
  y_ = g.vertices() - x;
  for (Vertex v : x_)
    if (g.neighbors(v).intersects(x_))
      fail(ErrorCode::InvalidArgument, "edge inside X at vertex " + std::to_string(v));
  for (Vertex v : y_)
    if (g.neighbors(v).intersects(y_))
      fail(ErrorCode::InvalidArgument, "edge inside Y at vertex " + std::to_string(v));
}

std::optional<Bipartition> Bipartition::of(const Graph& g) {
  VertexSet x;
  VertexSet y;
  for (VertexSet comp : g.components()) {
    VertexSet layer{comp.first()};
    VertexSet seen = layer;
    bool even = true;
    while (!layer.empty()) {
      (even ? x : y) |= layer;
      layer = g.neighbors(layer) & comp;
      layer -= seen;
      seen |= layer;
      even = !even;
    }
  }
  for (Vertex v : x)
    if (g.neighbors(v).intersects(x)) return std::nullopt;
  for (Vertex v : y)
    if (g.neighbors(v).intersects(y)) return std::nullopt;
  return Bipartition(g, x);
}

bool is_bipartite(const Graph& g) { return Bipartition::of(g).has_value(); }

bool is_path(const Graph& g, const std::vector<Vertex>& seq) {
  if (seq.empty()) return false;
  VertexSet seen;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    Vertex v = seq[i];
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    if (i > 0 && !g.adjacent(seq[i - 1], v)) return false;
    seen.insert(v);
  }
  return true;
}

Path::Path(const Graph& g, std::vector<Vertex> seq) : seq_(std::move(seq)) {
  if (!is_path(g, seq_)) fail(ErrorCode::InvalidArgument, "sequence is not a path in the graph");
}

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

// Three rounds of colour refinement seeded by degree.
std::vector<std::uint64_t> vertex_colours(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> col(n);
  for (int v = 0; v < n; ++v) col[v] = mix64(static_cast<std::uint64_t>(g.degree(v)));
  std::vector<std::uint64_t> next(n);
  std::vector<std::uint64_t> bag;
  for (int round = 0; round < 3; ++round) {
    for (int v = 0; v < n; ++v) {
      bag.clear();
      for (Vertex u : g.neighbors(v)) bag.push_back(col[u]);
      std::sort(bag.begin(), bag.end());
      std::uint64_t h = mix64(col[v] + 0x9e3779b97f4a7c15ULL);
      for (auto c : bag) h = mix64(h ^ c);
      next[v] = h;
    }
    col.swap(next);
  }
  return col;
}

}  // namespace

std::uint64_t invariant_hash(const Graph& g) {
  auto col = vertex_colours(g);
  std::sort(col.begin(), col.end());
  std::uint64_t h = mix64(static_cast<std::uint64_t>(g.order()) + 17);
  for (auto c : col) h = mix64(h ^ c);
  return h;
}

bool isomorphic(const Graph& a, const Graph& b) {
  const int n = a.order();
  if (n != b.order() || a.edge_count() != b.edge_count()) return false;
  if (n == 0) return true;
  auto ca = vertex_colours(a);
  auto cb = vertex_colours(b);
  {
    auto sa = ca;
    auto sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }

  // Visit order: each next vertex maximises links to already ordered ones.
  std::vector<Vertex> order;
  VertexSet placed;
  while (static_cast<int>(order.size()) < n) {
    Vertex best = -1;
    int best_links = -1;
    for (Vertex v : a.vertices() - placed) {
      int links = (a.neighbors(v) & placed).size();
      if (links > best_links) {
        best = v;
        best_links = links;
      }
    }
    order.push_back(best);
    placed.insert(best);
  }

  std::vector<Vertex> image(n, -1);
  VertexSet used;
  auto search = [&](auto&& self, int depth) -> bool {
    if (depth == n) return true;
    Vertex x = order[depth];
    Mask want = 0;  // images of already-mapped neighbours of x
    for (Vertex u : a.neighbors(x))
      if (image[u] >= 0) want |= bit(image[u]);
    for (Vertex y : b.vertices() - used) {
      if (cb[y] != ca[x]) continue;
      if ((b.neighbors(y) & used).bits() != want) continue;
      image[x] = y;
      used.insert(y);
      if (self(self, depth + 1)) return true;
      used.erase(y);
      image[x] = -1;
    }
    return false;
  };
  return search(search, 0);
}

}  // namespace kcon
