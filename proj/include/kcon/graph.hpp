#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "kcon/vertex_set.hpp"

namespace kcon {

using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph on vertices 0..n-1 with bitset adjacency.
class Graph {
public:
  Graph() = default;

  // Throws InvalidArgument on loops or parallel edges, OutOfRange on bad ids,
  // TooLarge when n exceeds kMaxVertices.
  Graph(int n, const std::vector<Edge>& edges);

  static Graph from_adjacency(std::vector<Mask> adj);
  static Graph empty(int n) { return Graph(n, {}); }

  int order() const { return static_cast<int>(adj_.size()); }
  VertexSet vertices() const { return VertexSet::range(order()); }
  VertexSet neighbors(Vertex v) const { return VertexSet(adj_[v]); }
  // N_G(S) = union of neighborhoods minus S.
  VertexSet neighbors(VertexSet s) const;
  int degree(Vertex v) const { return neighbors(v).size(); }
  int min_degree() const;
  bool adjacent(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1U; }
  int edge_count() const;
  std::vector<Edge> edges() const;
  bool is_complete() const;

  // Connected components of G[within] (default: whole graph), sorted by least vertex.
  std::vector<VertexSet> components(VertexSet within) const;
  std::vector<VertexSet> components() const { return components(vertices()); }
  bool connected_within(VertexSet within) const;
  bool is_connected() const { return connected_within(vertices()); }

  const std::vector<Mask>& adjacency() const { return adj_; }
  std::uint64_t fingerprint() const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  std::vector<Mask> adj_;
};

// Old<->new vertex correspondence produced by subgraph operations.
struct IndexMap {
  std::vector<Vertex> to_parent;  // child id -> parent id
  std::vector<Vertex> to_child;   // parent id -> child id, or -1

  Vertex parent(Vertex c) const { return to_parent.at(c); }
  Vertex child(Vertex p) const { return to_child.at(p); }
  VertexSet lift(VertexSet child_set) const;
  // Members of the parent set absent from the child are dropped.
  VertexSet project(VertexSet parent_set) const;
  std::vector<Vertex> lift(const std::vector<Vertex>& seq) const;
};

struct Subgraph {
  Graph graph;
  IndexMap map;
};

Subgraph induced_subgraph(const Graph& g, VertexSet s);
// Rejects removal of every vertex.
Subgraph remove_vertices(const Graph& g, VertexSet s);
// G<S> = G u K(S); vertex ids unchanged.
Graph clique_augment(const Graph& g, VertexSet s);
// Both graphs must have the same vertex universe.
Graph graph_union(const Graph& a, const Graph& b);

// Throws OutOfRange when s has members >= g.order().
void check_range(const Graph& g, VertexSet s);

// Validated 2-colouring.
class Bipartition {
public:
  // Throws InvalidArgument if some edge lies inside x or inside its complement.
  Bipartition(const Graph& g, VertexSet x);

  // Colours each component by BFS, smallest vertex of a component goes to X.
  static std::optional<Bipartition> of(const Graph& g);

  VertexSet x() const { return x_; }
  VertexSet y() const { return y_; }
  bool in_x(Vertex v) const { return x_.contains(v); }

private:
  VertexSet x_;
  VertexSet y_;
};

bool is_bipartite(const Graph& g);

// Ordered sequence of distinct, consecutively adjacent vertices.
class Path {
public:
  Path() = default;
  // Throws InvalidArgument when seq is empty, repeats a vertex or skips an edge.
  Path(const Graph& g, std::vector<Vertex> seq);

  int order() const { return static_cast<int>(seq_.size()); }
  const std::vector<Vertex>& seq() const { return seq_; }
  Vertex front() const { return seq_.front(); }
  Vertex back() const { return seq_.back(); }
  VertexSet ends() const { return VertexSet{seq_.front(), seq_.back()}; }
  VertexSet vertex_set() const { return VertexSet::from(seq_); }

  friend bool operator==(const Path&, const Path&) = default;

private:
  std::vector<Vertex> seq_;
};

bool is_path(const Graph& g, const std::vector<Vertex>& seq);

// Backtracking isomorphism test with degree-based candidate pruning.
bool isomorphic(const Graph& a, const Graph& b);

// Vertex-invariant hash, equal for isomorphic graphs.
std::uint64_t invariant_hash(const Graph& g);

}  // namespace kcon
