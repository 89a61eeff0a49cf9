#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "kcon/classes.hpp"
#include "kcon/connectivity.hpp"
#include "kcon/graph.hpp"

namespace kcon {

// A path whose removal was re-verified to keep the host k-connected.
struct PathWitness {
  Path path;
  int k = 0;
  int kappa_after = 0;  // kappa(G - V(P)), recomputed at construction
  std::optional<Vertex> start;
  std::uint64_t host = 0;

  int order() const { return path.order(); }
};

// Verifies order, start and kappa(G - V(P)) >= k; throws InvariantViolation
// when any of them fails.
PathWitness make_witness(const Graph& g, std::vector<Vertex> seq, int k, int m,
                         std::optional<Vertex> start = std::nullopt);

// One audit record of the improvement loop. Vertex ids are those of the
// top-level input graph.
struct TraceStep {
  int depth = 0;
  int step = 0;
  std::string action;  // extend | case1 | case2 | done | recurse-case1 ...
  std::vector<Vertex> path;
  VertexSet cut;
  VertexSet fragment;
  Vertex w = -1;
  Vertex w_prime = -1;
  Vertex w_second = -1;
  int l = -1;
  std::vector<Vertex> q;
  std::vector<Vertex> r;
  std::vector<Vertex> sub_path;  // R' or R'' returned by the recursion
  std::optional<std::pair<int, int>> measure;  // (m - |P|, |F|)
};

struct FinderOptions {
  bool record_trace = false;
  CutOptions cuts;
  // Top-level starting path for the class-instance finder instead of <v0>.
  // It must start at v0, avoid C, have order <= m and keep G k-connected.
  std::vector<Vertex> seed_path;
};

struct FinderResult {
  PathWitness witness;
  std::vector<TraceStep> trace;
  std::string route;  // which top-level case produced the witness
};

struct Pivot {
  Vertex w = -1;
  Vertex w_prime = -1;
  int index = -1;  // position of w on the path
};

// w is the last vertex of the path with a neighbour in f, w' its
// smallest-id such neighbour. Throws InvalidArgument when none exists.
Pivot locate_pivot(const Graph& g, const std::vector<Vertex>& path, VertexSet f);

// Path of order m from v0 inside G - C keeping G k-connected, for (G, C) in
// the plus class with t = ceil((m+1)/2).
FinderResult find_path_thm31(const Graph& g, VertexSet c, int k, int m, Vertex v0,
                             const FinderOptions& opts = {});

// Path of order m in a k-connected bipartite graph with
// delta(G) >= k + ceil((m+1)/2) whose removal keeps G k-connected.
FinderResult find_removable_path_thm32(const Graph& g, int k, int m,
                                       const FinderOptions& opts = {});

void to_json(nlohmann::json& j, const PathWitness& w);
void to_json(nlohmann::json& j, const TraceStep& s);

}  // namespace kcon
