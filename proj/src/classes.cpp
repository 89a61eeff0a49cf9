#include "kcon/classes.hpp"

#include "kcon/connectivity.hpp"
#include "kcon/error.hpp"

namespace kcon {

std::string_view to_string(Membership m) {
  switch (m) {
    case Membership::Member: return "member";
    case Membership::MemberPlus: return "member_plus";
    case Membership::NotMember: return "not_member";
  }
  return "not_member";
}

MembershipResult class_membership(const Graph& g, VertexSet c, int k, int t) {
  check_range(g, c);
  auto reject = [](char which, std::string why) {
    return MembershipResult{Membership::NotMember, which, std::move(why)};
  };
  if (!is_k_connected(g, k)) return reject('a', "kappa(G) < " + std::to_string(k));
  if (c.size() != k)
    return reject('b', "|C| = " + std::to_string(c.size()) + " != k = " + std::to_string(k));
  for (Vertex v : c)
    if (!(c - VertexSet{v}).subset_of(g.neighbors(v)))
      return reject('b', "G[C] is not complete");
  const VertexSet outside = g.vertices() - c;
  if (!is_bipartite(induced_subgraph(g, outside).graph))
    return reject('c', "G - C is not bipartite");
  for (Vertex v : outside)
    if (g.degree(v) < k + t)
      return reject('c', "vertex " + std::to_string(v) + " has degree " +
                             std::to_string(g.degree(v)) + " < " + std::to_string(k + t));
  for (Vertex u : outside)
    for (Vertex v : g.neighbors(u) & outside)
      if (u < v && g.neighbors(u).intersects(g.neighbors(v)))
        return reject('d', "adjacent " + std::to_string(u) + "," + std::to_string(v) +
                               " share a neighbour");
  if (is_k_connected(g, k + 1)) return {Membership::MemberPlus, 0, ""};
  return {Membership::Member, 0, "kappa(G) = " + std::to_string(k)};
}

namespace {

[[noreturn]] void unmet(const std::string& what) { fail(ErrorCode::HypothesisNotMet, what); }

// Shared hypotheses of both transfers; returns V(P).
VertexSet check_common(const Graph& g, int k, int m, VertexSet s, VertexSet f,
                       const std::vector<Vertex>& path) {
  check_range(g, s | f);
  if (k < 1 || m < 1) unmet("k and m must be positive");
  if (!is_path(g, path)) unmet("P is not a path of G");
  const VertexSet p = VertexSet::from(path);
  if (p.size() > m) unmet("|V(P)| > m");
  if (!is_k_connected(g, k) || is_k_connected(g, k + 1)) unmet("kappa(G) != k");
  if (s.size() != k || g.connected_within(g.vertices() - s)) unmet("S is not a minimum cut");
  const VertexSet rest = g.vertices() - s;
  if (f.empty() || !f.subset_of(rest) || f == rest || !g.neighbors(f).subset_of(s))
    unmet("F is not a fragment to S");
  if (p.intersects(s | f)) unmet("P meets S u F");
  Graph aug = clique_augment(g, s);
  if (!is_k_connected(remove_vertices(aug, f | p).graph, k))
    unmet("kappa(G<S> - (F u P)) < k");
  return p;
}

TransferVerdict conclude(const Graph& g, int k, VertexSet p) {
  Graph rest = remove_vertices(g, p).graph;
  return {is_k_connected(rest, k), kappa(rest).value};
}

}  // namespace

TransferVerdict lemma23_transfer(const Graph& g, int k, int m, VertexSet s, VertexSet f,
                                 const std::vector<Vertex>& path) {
  if (!is_bipartite(g)) unmet("G is not bipartite");
  if (g.min_degree() < k + ceil_half(m)) unmet("delta(G) < k + ceil(m/2)");
  VertexSet p = check_common(g, k, m, s, f, path);
  return conclude(g, k, p);
}

TransferVerdict lemma24_transfer(const Graph& g, VertexSet c, int k, int m, VertexSet s,
                                 VertexSet f, const std::vector<Vertex>& path) {
  check_range(g, c);
  auto membership = class_membership(g, c, k, ceil_half(m));
  if (!membership.member())
    unmet(std::string("(G, C) not in class: condition ") + membership.failed + ", " +
          membership.reason);
  if (!c.subset_of(s | f)) unmet("C is not inside S u F");
  VertexSet p = check_common(g, k, m, s, f, path);
  return conclude(g, k, p);
}

void to_json(nlohmann::json& j, const MembershipResult& r) {
  j = nlohmann::json{{"verdict", to_string(r.verdict)}};
  if (r.failed != 0) j["failed_condition"] = std::string(1, r.failed);
  if (!r.reason.empty()) j["reason"] = r.reason;
}

}  // namespace kcon
