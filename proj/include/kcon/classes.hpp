#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "kcon/graph.hpp"

namespace kcon {

// A pair (G, C) tested against the bipartite clique classes: C is the
// distinguished k-clique and t the degree surplus over k outside C.
struct ClassInstance {
  Graph graph;
  VertexSet clique;
  int k = 0;
  int t = 0;
};

enum class Membership { Member, MemberPlus, NotMember };

struct MembershipResult {
  Membership verdict = Membership::NotMember;
  char failed = 0;  // 'a'..'d' for the first failing condition, 0 otherwise
  std::string reason;

  bool member() const { return verdict != Membership::NotMember; }
};

// Conditions, checked in order:
//   (a) kappa(G) >= k
//   (b) G[C] is complete and |C| = k
//   (c) G - C is bipartite and every vertex outside C has degree >= k + t in G
//   (d) adjacent vertices outside C have no common neighbour in G
// MemberPlus additionally needs kappa(G) >= k + 1.
MembershipResult class_membership(const Graph& g, VertexSet c, int k, int t);
inline MembershipResult class_membership(const ClassInstance& inst) {
  return class_membership(inst.graph, inst.clique, inst.k, inst.t);
}

std::string_view to_string(Membership m);

constexpr int ceil_half(int x) { return (x + 1) / 2; }

struct TransferVerdict {
  bool holds = false;  // kappa(G - V(P)) >= k, recomputed
  int kappa_after = 0;
};

// Bipartite transfer: with kappa(G) = k, delta(G) >= k + ceil(m/2), S a
// minimum cut, F a fragment to S and P a path of order <= m inside
// G - (S u F) with kappa(G<S> - (F u P)) >= k, concludes kappa(G - P) >= k.
// Hypotheses are verified first (HypothesisNotMet names the failing one);
// the conclusion is recomputed, never assumed.
TransferVerdict lemma23_transfer(const Graph& g, int k, int m, VertexSet s, VertexSet f,
                                 const std::vector<Vertex>& path);

// Class-instance transfer: (G, C) in the class with t = ceil(m/2), kappa(G) = k,
// C inside S u F, otherwise as lemma23_transfer.
TransferVerdict lemma24_transfer(const Graph& g, VertexSet c, int k, int m, VertexSet s,
                                 VertexSet f, const std::vector<Vertex>& path);

void to_json(nlohmann::json& j, const MembershipResult& r);

}  // namespace kcon
