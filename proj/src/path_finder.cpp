#include "kcon/path_finder.hpp"

#include <algorithm>

#include "kcon/error.hpp"
#include "kcon/fragments.hpp"

namespace kcon {

PathWitness make_witness(const Graph& g, std::vector<Vertex> seq, int k, int m,
                         std::optional<Vertex> start) {
  if (!is_path(g, seq)) fail(ErrorCode::InvariantViolation, "witness is not a path");
  if (static_cast<int>(seq.size()) != m)
    fail(ErrorCode::InvariantViolation, "witness order " + std::to_string(seq.size()) +
                                            " != " + std::to_string(m));
  if (start && seq.front() != *start)
    fail(ErrorCode::InvariantViolation, "witness does not start at v0");
  PathWitness w;
  w.path = Path(g, std::move(seq));
  w.k = k;
  w.start = start;
  w.host = g.fingerprint();
  Graph rest = remove_vertices(g, w.path.vertex_set()).graph;
  if (!is_k_connected(rest, k))
    fail(ErrorCode::InvariantViolation, "kappa(G - V(P)) < k for the produced path");
  w.kappa_after = kappa(rest).value;
  return w;
}

Pivot locate_pivot(const Graph& g, const std::vector<Vertex>& path, VertexSet f) {
  for (int i = static_cast<int>(path.size()) - 1; i >= 0; --i) {
    VertexSet hits = g.neighbors(path[i]) & f;
    if (!hits.empty()) return {path[i], hits.first(), i};
  }
  fail(ErrorCode::InvalidArgument, "no vertex of the path has a neighbour in F");
}

namespace {

enum class PullBack { ClassTransfer, BipartiteTransfer };

struct Loop {
  const Graph& g;
  VertexSet clique;    // vertices the path must avoid (empty in the bipartite route)
  bool avoid_clique;   // fragments must miss the clique
  int k;
  int m;
  Vertex v0;
  std::vector<Vertex> seed_path;  // empty: start from <v0>
  PullBack pull_back;
  int depth;
  std::vector<Vertex> to_root;  // local id -> top-level id
  const FinderOptions& opts;
  std::vector<TraceStep>* trace;
};

std::vector<Vertex> run_loop(const Loop& ctx);

std::vector<Vertex> lift_root(const Loop& ctx, const std::vector<Vertex>& seq) {
  std::vector<Vertex> out;
  out.reserve(seq.size());
  for (Vertex v : seq) out.push_back(ctx.to_root[v]);
  return out;
}

VertexSet lift_root(const Loop& ctx, VertexSet s) {
  VertexSet out;
  for (Vertex v : s) out.insert(ctx.to_root[v]);
  return out;
}

[[noreturn]] void broken(const std::string& what) {
  fail(ErrorCode::InvariantViolation, what);
}

struct Choice {
  VertexSet cut;
  VertexSet part;  // ids of the loop graph
};

// Minimum-order fragment of G_P (optionally avoiding the clique), ties by
// lexicographic (S, F). Ids of G_P are translated back through `map`.
std::optional<Choice> choose_fragment(const Graph& gp, const IndexMap& map, VertexSet clique,
                                      bool avoid, const CutOptions& cuts) {
  auto cat = fragment_catalogue(gp, cuts);
  std::optional<Choice> best;
  for (const Fragment& f : cat.fragments) {
    VertexSet part = map.lift(f.part);
    VertexSet cut = map.lift(f.cut);
    if (avoid && part.intersects(clique)) continue;
    if (best) {
      if (part.size() > best->part.size()) continue;
      if (part.size() == best->part.size()) {
        if (lex_less(best->cut, cut)) continue;
        if (best->cut == cut && !lex_less(part, best->part)) continue;
      }
    }
    best = Choice{cut, part};
  }
  return best;
}

std::vector<Vertex> run_loop(const Loop& ctx) {
  const Graph& g = ctx.g;
  const int n = g.order();
  std::vector<Vertex> p = ctx.seed_path.empty() ? std::vector<Vertex>{ctx.v0} : ctx.seed_path;
  if (!is_k_connected(remove_vertices(g, VertexSet::from(p)).graph, ctx.k))
    broken("starting path is not removable");

  auto record = [&](TraceStep step) {
    if (!ctx.trace) return;
    step.depth = ctx.depth;
    step.step = static_cast<int>(ctx.trace->size());
    ctx.trace->push_back(std::move(step));
  };

  std::optional<std::pair<int, int>> last_measure;
  const int max_iterations = ctx.m * n + 1;
  for (int iter = 0;; ++iter) {
    if (static_cast<int>(p.size()) == ctx.m) break;
    if (iter > max_iterations)
      fail(ErrorCode::MeasureStall, "iteration bound m*n exceeded");

    const VertexSet on_path = VertexSet::from(p);
    const Vertex end = p.back();
    const VertexSet candidates = g.neighbors(end) - ctx.clique - on_path;
    if (candidates.empty())
      broken("end vertex " + std::to_string(ctx.to_root[end]) +
             " has no neighbour outside C u P although |P| < m");

    // Greedy extension, smallest eligible id first.
    bool extended = false;
    for (Vertex next : candidates) {
      if (is_k_connected(remove_vertices(g, on_path | VertexSet{next}).graph, ctx.k)) {
        p.push_back(next);
        extended = true;
        TraceStep step;
        step.action = "extend";
        step.path = lift_root(ctx, p);
        record(std::move(step));
        break;
      }
    }
    if (extended) continue;

    // Blocked: kappa(G_P) = k exactly.
    Subgraph gp = remove_vertices(g, on_path);
    if (!is_k_connected(gp.graph, ctx.k) || is_k_connected(gp.graph, ctx.k + 1))
      broken("blocked path with kappa(G - V(P)) != k");
    auto choice = choose_fragment(gp.graph, gp.map, ctx.clique, ctx.avoid_clique, ctx.opts.cuts);
    if (!choice)
      fail(ErrorCode::NoCFreeFragment,
           "every minimum fragment of G - V(P) meets C at path " +
               VertexSet::from(lift_root(ctx, p)).str());
    const VertexSet s = choice->cut;
    const VertexSet f = choice->part;

    const std::pair<int, int> measure{ctx.m - static_cast<int>(p.size()), f.size()};
    if (last_measure && !(measure < *last_measure))
      fail(ErrorCode::MeasureStall,
           "measure (" + std::to_string(measure.first) + "," + std::to_string(measure.second) +
               ") did not decrease from (" + std::to_string(last_measure->first) + "," +
               std::to_string(last_measure->second) + ")");
    last_measure = measure;
    if (f.size() < 2) broken("minimum fragment of order 1");

    const Pivot pivot = locate_pivot(g, p, f);
    std::vector<Vertex> q(p.begin(), p.begin() + pivot.index + 1);
    std::vector<Vertex> r(p.begin() + pivot.index + 1, p.end());
    const int l = static_cast<int>(r.size());
    if (l == 0) broken("pivot at the path end: greedy extension into F should have succeeded");
    if (g.neighbors(VertexSet::from(r)).intersects(f)) broken("R has a neighbour in F");

    const bool case1 = ctx.m % 2 == 1 && l % 2 == 1;
    const int target = case1 ? l : l + 1;
    const int t_rec = case1 ? ceil_half(l + 1) : ceil_half(l + 2);

    // Recursive instance G_Q<S>[S u F] with clique K(S); as Q misses S u F it
    // equals G<S>[S u F].
    Subgraph h = induced_subgraph(clique_augment(g, s), s | f);
    const VertexSet h_clique = h.map.project(s);
    auto membership = class_membership(h.graph, h_clique, ctx.k, t_rec);
    if (membership.verdict != Membership::MemberPlus)
      broken(std::string("recursive instance not in the plus class: condition ") +
             membership.failed + ", " + membership.reason);

    std::vector<Vertex> sub_root(h.graph.order());
    for (Vertex v = 0; v < h.graph.order(); ++v) sub_root[v] = ctx.to_root[h.map.parent(v)];
    Loop sub{h.graph, h_clique, true, ctx.k, target, h.map.child(pivot.w_prime), {},
             PullBack::ClassTransfer, ctx.depth + 1, std::move(sub_root), ctx.opts, ctx.trace};
    std::vector<Vertex> sub_path = h.map.lift(run_loop(sub));
    if (!VertexSet::from(sub_path).subset_of(f)) broken("recursive path leaves F");

    // Pull back through G_Q with the complementary fragment of F.
    Subgraph gq = remove_vertices(g, VertexSet::from(q));
    const VertexSet s_q = gq.map.project(s);
    const VertexSet fbar_q = gq.graph.vertices() - s_q - gq.map.project(f);
    std::vector<Vertex> sub_q;
    for (Vertex v : sub_path) sub_q.push_back(gq.map.child(v));
    TransferVerdict verdict;
    try {
      verdict = ctx.pull_back == PullBack::ClassTransfer
                    ? lemma24_transfer(gq.graph, gq.map.project(ctx.clique), ctx.k, target, s_q,
                                       fbar_q, sub_q)
                    : lemma23_transfer(gq.graph, ctx.k, target, s_q, fbar_q, sub_q);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::HypothesisNotMet) throw;
      broken(std::string("transfer hypothesis failed during pull-back: ") + e.what());
    }
    if (!verdict.holds) broken("transfer conclusion failed: kappa(G_Q - V(R)) < k");

    std::vector<Vertex> spliced = q;
    spliced.insert(spliced.end(), sub_path.begin(), sub_path.end());
    if (!is_path(g, spliced)) broken("spliced sequence is not a path");

    TraceStep step;
    step.action = case1 ? "case1" : "case2";
    step.path = lift_root(ctx, p);
    step.cut = lift_root(ctx, s);
    step.fragment = lift_root(ctx, f);
    step.w = ctx.to_root[pivot.w];
    step.w_prime = ctx.to_root[pivot.w_prime];
    step.l = l;
    step.q = lift_root(ctx, q);
    step.r = lift_root(ctx, r);
    step.sub_path = lift_root(ctx, sub_path);
    step.measure = measure;
    if (case1) {
      const Vertex w2 = sub_path.back();
      step.w_second = ctx.to_root[w2];
      const VertexSet residual = f - VertexSet::from(sub_path);
      if (!g.neighbors(w2).intersects(residual))
        broken("second end of R' has no neighbour in F - V(R')");
    }
    record(std::move(step));
    p = std::move(spliced);
  }
  TraceStep done;
  done.action = "done";
  done.path = lift_root(ctx, p);
  record(std::move(done));
  return p;
}

std::vector<Vertex> identity_ids(int n) {
  std::vector<Vertex> ids(n);
  for (int v = 0; v < n; ++v) ids[v] = v;
  return ids;
}

}  // namespace

FinderResult find_path_thm31(const Graph& g, VertexSet c, int k, int m, Vertex v0,
                             const FinderOptions& opts) {
  if (m < 1 || k < 1) fail(ErrorCode::HypothesisNotMet, "k and m must be positive");
  if (v0 < 0 || v0 >= g.order() || c.contains(v0))
    fail(ErrorCode::HypothesisNotMet, "v0 must be a vertex outside C");
  auto membership = class_membership(g, c, k, ceil_half(m + 1));
  if (membership.verdict != Membership::MemberPlus)
    fail(ErrorCode::HypothesisNotMet,
         membership.failed ? std::string("condition ") + membership.failed + ": " +
                                 membership.reason
                           : "kappa(G) < k+1");
  if (!opts.seed_path.empty()) {
    const auto& sp = opts.seed_path;
    if (sp.front() != v0 || static_cast<int>(sp.size()) > m || !is_path(g, sp) ||
        VertexSet::from(sp).intersects(c))
      fail(ErrorCode::HypothesisNotMet, "seed path must start at v0, avoid C and have order <= m");
    if (!is_k_connected(remove_vertices(g, VertexSet::from(sp)).graph, k))
      fail(ErrorCode::HypothesisNotMet, "seed path is not removable");
  }
  FinderResult result;
  Loop ctx{g, c, true, k, m, v0, opts.seed_path, PullBack::ClassTransfer, 0,
           identity_ids(g.order()), opts, opts.record_trace ? &result.trace : nullptr};
  auto seq = run_loop(ctx);
  result.witness = make_witness(g, std::move(seq), k, m, v0);
  result.route = "class";
  return result;
}

FinderResult find_removable_path_thm32(const Graph& g, int k, int m, const FinderOptions& opts) {
  if (m < 1 || k < 1) fail(ErrorCode::HypothesisNotMet, "k and m must be positive");
  if (!is_bipartite(g)) fail(ErrorCode::HypothesisNotMet, "G is not bipartite");
  if (g.min_degree() < k + ceil_half(m + 1))
    fail(ErrorCode::HypothesisNotMet, "delta " + std::to_string(g.min_degree()) + " < " +
                                          std::to_string(k + ceil_half(m + 1)));
  if (!is_k_connected(g, k)) fail(ErrorCode::HypothesisNotMet, "G is not k-connected");

  FinderResult result;
  auto* trace = opts.record_trace ? &result.trace : nullptr;
  if (!is_k_connected(g, k + 1)) {
    // kappa(G) = k: solve inside a minimum fragment, then transfer back.
    const Fragment frag = minimum_fragment(g, opts.cuts);
    if (frag.order() < 2) fail(ErrorCode::InvariantViolation, "minimal fragment of order 1");
    Subgraph h = induced_subgraph(clique_augment(g, frag.cut), frag.cut | frag.part);
    const VertexSet h_clique = h.map.project(frag.cut);
    auto membership = class_membership(h.graph, h_clique, k, ceil_half(m + 1));
    if (membership.verdict != Membership::MemberPlus)
      fail(ErrorCode::InvariantViolation,
           std::string("fragment instance not in the plus class: ") + membership.reason);
    std::vector<Vertex> to_root(h.graph.order());
    for (Vertex v = 0; v < h.graph.order(); ++v) to_root[v] = h.map.parent(v);
    const Vertex v0 = h.map.child(frag.part.first());
    if (trace) {
      TraceStep step;
      step.action = "fragment";
      step.cut = frag.cut;
      step.fragment = frag.part;
      trace->push_back(step);
    }
    Loop ctx{h.graph, h_clique, true, k, m, v0, {}, PullBack::ClassTransfer, 1, std::move(to_root),
             opts, trace};
    std::vector<Vertex> seq = h.map.lift(run_loop(ctx));
    TransferVerdict verdict;
    try {
      verdict = lemma23_transfer(g, k, m, frag.cut, frag.complement, seq);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::HypothesisNotMet) throw;
      fail(ErrorCode::InvariantViolation, std::string("final transfer: ") + e.what());
    }
    if (!verdict.holds) fail(ErrorCode::InvariantViolation, "final transfer conclusion failed");
    result.witness = make_witness(g, std::move(seq), k, m);
    result.route = "kappa=k";
    return result;
  }

  Loop ctx{g, VertexSet(), false, k, m, 0, {}, PullBack::BipartiteTransfer, 0,
           identity_ids(g.order()), opts, trace};
  auto seq = run_loop(ctx);
  result.witness = make_witness(g, std::move(seq), k, m);
  result.route = "kappa>k";
  return result;
}

void to_json(nlohmann::json& j, const PathWitness& w) {
  j = nlohmann::json{{"path", w.path.seq()},
                     {"order", w.order()},
                     {"k", w.k},
                     {"kappa_after", w.kappa_after}};
  if (w.start) j["start"] = *w.start;
}

void to_json(nlohmann::json& j, const TraceStep& s) {
  j = nlohmann::json{{"step", s.step}, {"depth", s.depth}, {"case", s.action}, {"P", s.path}};
  if (!s.cut.empty() || !s.fragment.empty()) {
    j["S"] = s.cut.to_vector();
    j["F"] = s.fragment.to_vector();
  }
  if (s.w >= 0) {
    j["w"] = s.w;
    j["w_prime"] = s.w_prime;
    j["l"] = s.l;
    j["Q"] = s.q;
    j["R"] = s.r;
    j["sub_path"] = s.sub_path;
  }
  if (s.w_second >= 0) j["w_second"] = s.w_second;
  if (s.measure) j["measure"] = {s.measure->first, s.measure->second};
}

}  // namespace kcon
