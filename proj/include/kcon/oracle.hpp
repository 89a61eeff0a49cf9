#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kcon/graph.hpp"

namespace kcon {

// Every simple path of order m, each once with its smaller end first, in
// lexicographic order of the vertex sequence. The callback returns false to
// stop early.
void enumerate_paths(const Graph& g, int m,
                     const std::function<bool(const std::vector<Vertex>&)>& emit);
std::vector<std::vector<Vertex>> all_paths(const Graph& g, int m);

// First path in canonical order with kappa(G - V(P)) >= k.
std::optional<std::vector<Vertex>> exists_removable_path(const Graph& g, int k, int m);

enum class Agreement { Agreement, Violation, NotApplicable };
std::string_view to_string(Agreement a);

struct VerificationReport {
  std::string instance;  // graph6
  int n = 0;
  int k = 0;
  int m = 0;
  bool bipartite = false;
  bool k_connected = false;
  int min_degree = 0;
  int required_degree = 0;
  bool hypotheses_hold = false;
  std::optional<std::vector<Vertex>> oracle_witness;
  std::optional<std::vector<Vertex>> finder_witness;
  std::string finder_route;
  std::string detail;
  Agreement verdict = Agreement::NotApplicable;
  double seconds = 0.0;  // wall time; excluded from JSON unless asked for
};

// Checks the bipartite removable-path hypotheses; when they hold, runs both
// the constructive finder and the brute-force oracle and cross-checks them.
VerificationReport verify_instance(const Graph& g, int k, int m);

struct SweepOptions {
  int jobs = 1;
  std::size_t budget = 0;  // max instances; 0 means unlimited
};

struct SweepReport {
  std::vector<VerificationReport> instances;
  std::size_t family_size = 0;
  bool budget_exhausted = false;
  int agreements = 0;
  int violations = 0;
  int not_applicable = 0;
};

SweepReport sweep(const std::vector<Graph>& family, int k, int m, SweepOptions opts = {});

struct HuntInstance {
  std::string instance;
  int n = 0;
  int min_degree = 0;
  bool applicable = false;  // bipartite, k-connected, delta >= k + m/2
  std::optional<std::vector<Vertex>> witness;
  bool counterexample = false;
};

struct HuntReport {
  int k = 0;
  int m = 0;
  std::vector<HuntInstance> instances;
  std::size_t family_size = 0;
  bool budget_exhausted = false;
  int applicable = 0;
  int counterexamples = 0;
};

// Searches for instances at the conjectured even-order bound delta >= k + m/2
// that have no removable path of order m. Throws InvalidArgument for odd m.
HuntReport hunt_even(const std::vector<Graph>& family, int k, int m, SweepOptions opts = {});

void to_json(nlohmann::json& j, const VerificationReport& r);
nlohmann::json report_json(const VerificationReport& r, bool with_timing);
nlohmann::json aggregate_json(const SweepReport& r);
void to_json(nlohmann::json& j, const HuntInstance& h);
nlohmann::json aggregate_json(const HuntReport& r);

}  // namespace kcon
