#include "kcon/connectivity.hpp"

#include <algorithm>
#include <string>

#include "kcon/error.hpp"

namespace kcon {

namespace {

// Unit vertex-capacity flow on the vertex-split digraph: every vertex v
// becomes v_in -> v_out with capacity 1, every edge uv becomes uncapacitated
// arcs u_out -> v_in and v_out -> u_in. Source is s_out, sink is t_in. Vertex
// capacities keep every arc flow in {0, 1}.
class SplitFlow {
public:
  SplitFlow(const Graph& g, Vertex s, Vertex t)
      : g_(g), s_(s), t_(t), arc_flow_(g.order(), 0), arc_flow_in_(g.order(), 0) {}

  // Augments until the flow reaches cap or no augmenting path remains.
  int run(int cap) {
    while (value_ < cap && augment()) ++value_;
    return value_;
  }

  // Vertices whose in-node is reachable in the residual graph but whose
  // out-node is not; valid after run() terminated without hitting cap.
  VertexSet min_cut() const {
    auto [in_seen, out_seen] = reach(nullptr, nullptr);
    return (VertexSet(in_seen) - VertexSet(out_seen)) - VertexSet{s_, t_};
  }

private:
  // BFS over residual arcs; fills parent links when provided.
  std::pair<Mask, Mask> reach(std::vector<int>* parent_in, std::vector<int>* parent_out) const {
    Mask in_seen = bit(s_);
    Mask out_seen = bit(s_);
    // Node encoding in the queue: 2v = v_in, 2v+1 = v_out.
    std::vector<int> queue{2 * s_ + 1};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int node = queue[head];
      Vertex v = node / 2;
      if (node % 2 == 1) {
        // Edge arcs are uncapacitated; only vertex arcs carry the unit bound.
        Mask next = g_.adjacency()[v] & ~in_seen;
        for (Vertex u : VertexSet(next)) {
          in_seen |= bit(u);
          if (parent_in) (*parent_in)[u] = node;
          if (u == t_) return {in_seen, out_seen};
          queue.push_back(2 * u);
        }
        // Reverse of the internal arc when it carries flow.
        if (internal_ & bit(v) && !(in_seen & bit(v))) {
          in_seen |= bit(v);
          if (parent_in) (*parent_in)[v] = node;
          queue.push_back(2 * v);
        }
      } else {
        if (!(internal_ & bit(v)) && !(out_seen & bit(v))) {
          out_seen |= bit(v);
          if (parent_out) (*parent_out)[v] = node;
          queue.push_back(2 * v + 1);
        }
        // Reverse of u_out -> v_in arcs that carry flow.
        Mask back = arc_flow_in_[v] & ~out_seen;
        for (Vertex u : VertexSet(back)) {
          out_seen |= bit(u);
          if (parent_out) (*parent_out)[u] = node;
          queue.push_back(2 * u + 1);
        }
      }
    }
    return {in_seen, out_seen};
  }

  bool augment() {
    std::vector<int> parent_in(g_.order(), -1);
    std::vector<int> parent_out(g_.order(), -1);
    auto [in_seen, out_seen] = reach(&parent_in, &parent_out);
    if (!(in_seen & bit(t_))) return false;
    int node = 2 * t_;
    while (node != 2 * s_ + 1) {
      Vertex v = node / 2;
      int prev = node % 2 == 0 ? parent_in[v] : parent_out[v];
      Vertex u = prev / 2;
      if (node % 2 == 0 && prev % 2 == 1 && u != v) {
        arc_flow_[u] |= bit(v);  // forward u_out -> v_in
        arc_flow_in_[v] |= bit(u);
      } else if (node % 2 == 1 && prev % 2 == 0 && u != v) {
        arc_flow_[v] &= ~bit(u);  // cancel v_out -> u_in
        arc_flow_in_[u] &= ~bit(v);
      } else if (node % 2 == 1) {
        internal_ |= bit(v);  // forward v_in -> v_out
      } else {
        internal_ &= ~bit(v);  // cancel internal arc
      }
      node = prev;
    }
    return true;
  }

  const Graph& g_;
  Vertex s_;
  Vertex t_;
  int value_ = 0;
  Mask internal_ = 0;
  std::vector<Mask> arc_flow_;     // arc_flow_[u] bit v: flow on u_out -> v_in
  std::vector<Mask> arc_flow_in_;  // transpose of arc_flow_
};

// Pairs that certify the connectivity of a non-complete graph.
template <typename Fn>
void for_each_certifying_pair(const Graph& g, Fn&& fn) {
  Vertex v = 0;
  for (Vertex u = 1; u < g.order(); ++u)
    if (g.degree(u) < g.degree(v)) v = u;
  VertexSet nv = g.neighbors(v);
  for (Vertex w : g.vertices() - nv - VertexSet{v})
    if (!fn(v, w)) return;
  for (Vertex x : nv)
    for (Vertex y : (nv - g.neighbors(x)) - VertexSet(low_bits(x + 1)))
      if (!fn(x, y)) return;
}

template <typename Fn>
bool for_each_subset(int n, int size, Fn&& fn) {
  if (size == 0) return fn(VertexSet());
  if (size > n) return true;
  unsigned __int128 limit = static_cast<unsigned __int128>(1) << n;
  unsigned __int128 x = (static_cast<unsigned __int128>(1) << size) - 1;
  while (x < limit) {
    if (!fn(VertexSet(static_cast<Mask>(x)))) return false;
    unsigned __int128 c = x & (~x + 1);
    unsigned __int128 r = x + c;
    x = (((r ^ x) >> 2) / c) | r;
  }
  return true;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<std::uint64_t>(r);
}

int local_connectivity(const Graph& g, Vertex s, Vertex t, int cap) {
  if (g.adjacent(s, t) || s == t)
    fail(ErrorCode::InvalidArgument, "local connectivity needs distinct non-adjacent vertices");
  SplitFlow flow(g, s, t);
  return flow.run(cap);
}

Kappa kappa(const Graph& g) {
  const int n = g.order();
  if (n == 0) fail(ErrorCode::InvalidArgument, "kappa of the empty graph");
  if (g.is_complete()) return {n - 1, std::nullopt};
  int best = n;
  VertexSet cut;
  for_each_certifying_pair(g, [&](Vertex s, Vertex t) {
    SplitFlow flow(g, s, t);
    int value = flow.run(best);
    if (value < best) {
      best = value;
      cut = flow.min_cut();
    }
    return best > 0;
  });
  return {best, cut};
}

bool is_k_connected(const Graph& g, int k) {
  if (k <= 0) return true;
  if (g.order() < k + 1) return false;
  if (g.is_complete()) return true;
  if (g.min_degree() < k) return false;
  bool ok = true;
  for_each_certifying_pair(g, [&](Vertex s, Vertex t) {
    ok = SplitFlow(g, s, t).run(k) >= k;
    return ok;
  });
  return ok;
}

Kappa kappa_exhaustive(const Graph& g) {
  const int n = g.order();
  if (n == 0) fail(ErrorCode::InvalidArgument, "kappa of the empty graph");
  if (g.is_complete()) return {n - 1, std::nullopt};
  for (int size = 0; size <= n - 2; ++size) {
    std::optional<VertexSet> found;
    for_each_subset(n, size, [&](VertexSet s) {
      if (!g.connected_within(g.vertices() - s)) {
        found = s;
        return false;
      }
      return true;
    });
    if (found) return {size, found};
  }
  fail(ErrorCode::InvariantViolation, "non-complete graph without a vertex cut");
}

std::vector<VertexSet> all_min_cuts(const Graph& g, CutOptions opts) {
  if (g.order() == 0 || g.is_complete())
    fail(ErrorCode::InvalidArgument, "complete graphs have no vertex cut");
  return all_min_cuts(g, kappa(g).value, opts);
}

std::vector<VertexSet> all_min_cuts(const Graph& g, int kappa_value, CutOptions opts) {
  if (g.order() == 0 || g.is_complete())
    fail(ErrorCode::InvalidArgument, "complete graphs have no vertex cut");
  const int n = g.order();
  if (binomial(n, kappa_value) > opts.budget)
    fail(ErrorCode::TooLarge, "C(" + std::to_string(n) + "," + std::to_string(kappa_value) +
                                  ") candidate cuts exceed the enumeration budget");
  std::vector<VertexSet> cuts;
  for_each_subset(n, kappa_value, [&](VertexSet s) {
    if (!g.connected_within(g.vertices() - s)) cuts.push_back(s);
    return true;
  });
  std::sort(cuts.begin(), cuts.end(), LexLess{});
  return cuts;
}

}  // namespace kcon
