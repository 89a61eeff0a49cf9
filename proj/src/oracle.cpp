#include "kcon/oracle.hpp"

#include <chrono>

#include "kcon/classes.hpp"
#include "kcon/connectivity.hpp"
#include "kcon/error.hpp"
#include "kcon/graph_io.hpp"
#include "kcon/parallel.hpp"
#include "kcon/path_finder.hpp"

namespace kcon {

void enumerate_paths(const Graph& g, int m,
                     const std::function<bool(const std::vector<Vertex>&)>& emit) {
  if (m < 1 || m > g.order()) return;
  std::vector<Vertex> seq;
  seq.reserve(m);
  bool stop = false;
  auto dfs = [&](auto&& self, VertexSet used) -> void {
    if (stop) return;
    if (static_cast<int>(seq.size()) == m) {
      if (m == 1 || seq.front() < seq.back()) stop = !emit(seq);
      return;
    }
    for (Vertex next : g.neighbors(seq.back()) - used) {
      seq.push_back(next);
      self(self, used | VertexSet{next});
      seq.pop_back();
      if (stop) return;
    }
  };
  for (Vertex v = 0; v < g.order() && !stop; ++v) {
    seq.assign(1, v);
    dfs(dfs, VertexSet{v});
  }
}

std::vector<std::vector<Vertex>> all_paths(const Graph& g, int m) {
  std::vector<std::vector<Vertex>> out;
  enumerate_paths(g, m, [&](const std::vector<Vertex>& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::optional<std::vector<Vertex>> exists_removable_path(const Graph& g, int k, int m) {
  std::optional<std::vector<Vertex>> found;
  enumerate_paths(g, m, [&](const std::vector<Vertex>& p) {
    const VertexSet used = VertexSet::from(p);
    if (used == g.vertices()) return true;
    if (is_k_connected(remove_vertices(g, used).graph, k)) {
      found = p;
      return false;
    }
    return true;
  });
  return found;
}

std::string_view to_string(Agreement a) {
  switch (a) {
    case Agreement::Agreement: return "Agreement";
    case Agreement::Violation: return "Violation";
    case Agreement::NotApplicable: return "NotApplicable";
  }
  return "NotApplicable";
}

namespace {

// Second route for witness checks: exhaustive-subset connectivity.
bool recheck(const Graph& g, const std::vector<Vertex>& p, int k, int m) {
  if (static_cast<int>(p.size()) != m || !is_path(g, p)) return false;
  const VertexSet used = VertexSet::from(p);
  if (used == g.vertices()) return false;
  Graph rest = remove_vertices(g, used).graph;
  return rest.order() >= k + 1 && kappa_exhaustive(rest).value >= k;
}

}  // namespace

VerificationReport verify_instance(const Graph& g, int k, int m) {
  const auto started = std::chrono::steady_clock::now();
  VerificationReport r;
  r.instance = to_graph6(g);
  r.n = g.order();
  r.k = k;
  r.m = m;
  r.bipartite = is_bipartite(g);
  r.k_connected = g.order() > 0 && is_k_connected(g, k);
  r.min_degree = g.min_degree();
  r.required_degree = k + ceil_half(m + 1);
  r.hypotheses_hold =
      k >= 1 && m >= 1 && r.bipartite && r.k_connected && r.min_degree >= r.required_degree;

  if (m >= 1 && m <= g.order()) r.oracle_witness = exists_removable_path(g, k, m);
  if (!r.hypotheses_hold) {
    r.verdict = Agreement::NotApplicable;
    if (!r.bipartite) r.detail = "graph is not bipartite";
    else if (!r.k_connected) r.detail = "graph is not " + std::to_string(k) + "-connected";
    else if (r.min_degree < r.required_degree)
      r.detail = "delta " + std::to_string(r.min_degree) + " < " + std::to_string(r.required_degree);
    else r.detail = "k and m must be positive";
  } else {
    try {
      auto found = find_removable_path_thm32(g, k, m);
      r.finder_witness = found.witness.path.seq();
      r.finder_route = found.route;
    } catch (const Error& e) {
      r.detail = std::string("finder failed: ") + std::string(to_string(e.code())) + ": " + e.what();
    }
    const bool finder_ok = r.finder_witness && recheck(g, *r.finder_witness, k, m);
    const bool oracle_ok = r.oracle_witness && recheck(g, *r.oracle_witness, k, m);
    if (finder_ok && oracle_ok) {
      r.verdict = Agreement::Agreement;
    } else {
      r.verdict = Agreement::Violation;
      if (r.detail.empty())
        r.detail = !oracle_ok ? "oracle found no removable path" : "finder witness failed recheck";
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return r;
}

SweepReport sweep(const std::vector<Graph>& family, int k, int m, SweepOptions opts) {
  SweepReport report;
  report.family_size = family.size();
  std::size_t count = family.size();
  if (opts.budget > 0 && count > opts.budget) {
    count = opts.budget;
    report.budget_exhausted = true;
  }
  report.instances.resize(count);
  parallel_for(count, opts.jobs,
               [&](std::size_t i) { report.instances[i] = verify_instance(family[i], k, m); });
  for (const auto& r : report.instances) {
    switch (r.verdict) {
      case Agreement::Agreement: ++report.agreements; break;
      case Agreement::Violation: ++report.violations; break;
      case Agreement::NotApplicable: ++report.not_applicable; break;
    }
  }
  return report;
}

HuntReport hunt_even(const std::vector<Graph>& family, int k, int m, SweepOptions opts) {
  if (m < 2 || m % 2 != 0) fail(ErrorCode::InvalidArgument, "hunt-even needs an even m >= 2");
  if (k < 1) fail(ErrorCode::InvalidArgument, "hunt-even needs k >= 1");
  HuntReport report;
  report.k = k;
  report.m = m;
  report.family_size = family.size();
  std::size_t count = family.size();
  if (opts.budget > 0 && count > opts.budget) {
    count = opts.budget;
    report.budget_exhausted = true;
  }
  report.instances.resize(count);
  parallel_for(count, opts.jobs, [&](std::size_t i) {
    const Graph& g = family[i];
    HuntInstance& h = report.instances[i];
    h.instance = to_graph6(g);
    h.n = g.order();
    h.min_degree = g.min_degree();
    h.applicable = is_bipartite(g) && is_k_connected(g, k) && h.min_degree >= k + m / 2;
    if (!h.applicable) return;
    h.witness = exists_removable_path(g, k, m);
    h.counterexample = !h.witness;
    if (h.witness && !recheck(g, *h.witness, k, m))
      fail(ErrorCode::InvariantViolation, "oracle witness failed the exhaustive recheck");
  });
  for (const auto& h : report.instances) {
    report.applicable += h.applicable ? 1 : 0;
    report.counterexamples += h.counterexample ? 1 : 0;
  }
  return report;
}

namespace {

nlohmann::json optional_path(const std::optional<std::vector<Vertex>>& p) {
  return p ? nlohmann::json(*p) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json report_json(const VerificationReport& r, bool with_timing) {
  nlohmann::json j{{"instance", r.instance},
                   {"n", r.n},
                   {"k", r.k},
                   {"m", r.m},
                   {"hypotheses",
                    {{"bipartite", r.bipartite},
                     {"k_connected", r.k_connected},
                     {"min_degree", r.min_degree},
                     {"required_degree", r.required_degree},
                     {"hold", r.hypotheses_hold}}},
                   {"oracle_witness", optional_path(r.oracle_witness)},
                   {"finder_witness", optional_path(r.finder_witness)},
                   {"verdict", to_string(r.verdict)}};
  if (!r.finder_route.empty()) j["finder_route"] = r.finder_route;
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (with_timing) j["seconds"] = r.seconds;
  return j;
}

void to_json(nlohmann::json& j, const VerificationReport& r) { j = report_json(r, false); }

nlohmann::json aggregate_json(const SweepReport& r) {
  return {{"aggregate",
           {{"family_size", r.family_size},
            {"checked", r.instances.size()},
            {"budget_exhausted", r.budget_exhausted},
            {"agreements", r.agreements},
            {"violations", r.violations},
            {"not_applicable", r.not_applicable}}}};
}

void to_json(nlohmann::json& j, const HuntInstance& h) {
  j = nlohmann::json{{"instance", h.instance},
                     {"n", h.n},
                     {"min_degree", h.min_degree},
                     {"applicable", h.applicable},
                     {"witness", optional_path(h.witness)},
                     {"counterexample", h.counterexample}};
}

nlohmann::json aggregate_json(const HuntReport& r) {
  return {{"aggregate",
           {{"k", r.k},
            {"m", r.m},
            {"family_size", r.family_size},
            {"checked", r.instances.size()},
            {"budget_exhausted", r.budget_exhausted},
            {"applicable", r.applicable},
            {"counterexamples", r.counterexamples},
            {"summary", r.counterexamples == 0 ? "no counterexample in budget"
                                               : "counterexample candidates found"}}}};
}

}  // namespace kcon
