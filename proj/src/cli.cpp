#include "kcon/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kcon/classes.hpp"
#include "kcon/connectivity.hpp"
#include "kcon/error.hpp"
#include "kcon/fragments.hpp"
#include "kcon/generators.hpp"
#include "kcon/graph_io.hpp"
#include "kcon/oracle.hpp"
#include "kcon/path_finder.hpp"

namespace kcon::cli {

namespace {

struct Globals {
  std::string format = "edge-list";
  bool json = false;
  bool trace = false;
  bool timing = false;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int limit_n = kMaxVertices;
  int jobs = 1;
  std::string input = "-";
};

std::string read_text(const std::string& path, std::istream& in) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) fail(ErrorCode::InvalidArgument, "cannot open " + path);
    buffer << file.rdbuf();
  }
  return buffer.str();
}

std::string join(const std::vector<Vertex>& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(seq[i]);
  }
  return out;
}

VertexSet parse_set(const std::string& text) {
  VertexSet s;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    int v = std::stoi(item);
    if (v < 0 || v >= kMaxVertices) fail(ErrorCode::OutOfRange, "vertex " + item + " out of range");
    s.insert(v);
  }
  return s;
}

class Runner {
public:
  Runner(const Globals& globals, std::istream& in, std::ostream& out)
      : g_(globals), in_(in), out_(out) {}

  Graph graph() const {
    return parse_graph(read_text(g_.input, in_), parse_format(g_.format), {g_.limit_n});
  }

  std::vector<Graph> family(const std::string& family_path) const {
    if (family_path.empty())
      return parse_graph6_lines(read_text(g_.input, in_), {g_.limit_n});
    auto config = nlohmann::json::parse(read_text(family_path, in_));
    if (g_.seed_given && !config.contains("seed")) config["seed"] = g_.seed;
    auto graphs = generate_family(parse_family(config), g_.jobs);
    for (const auto& gr : graphs)
      if (gr.order() > g_.limit_n)
        fail(ErrorCode::TooLarge, "family graph exceeds --limit-n");
    return graphs;
  }

  int kappa_cmd() {
    Graph gr = graph();
    Kappa kv = kappa(gr);
    if (g_.json) {
      nlohmann::json j{{"kappa", kv.value}, {"n", gr.order()}};
      j["cut"] = kv.witness_cut ? nlohmann::json(kv.witness_cut->to_vector()) : nlohmann::json(nullptr);
      out_ << j.dump() << '\n';
    } else {
      out_ << "kappa=" << kv.value << " cut=" << (kv.witness_cut ? kv.witness_cut->str() : "none")
           << '\n';
    }
    return kOk;
  }

  int mincuts_cmd() {
    Graph gr = graph();
    auto cuts = all_min_cuts(gr);
    if (g_.json) {
      nlohmann::json j = nlohmann::json::array();
      for (VertexSet s : cuts) j.push_back(s.to_vector());
      out_ << nlohmann::json{{"kappa", kappa(gr).value}, {"cuts", j}}.dump() << '\n';
    } else {
      out_ << "kappa=" << kappa(gr).value << " cuts=" << cuts.size() << '\n';
      for (VertexSet s : cuts) out_ << s.str() << '\n';
    }
    return kOk;
  }

  int fragments_cmd() {
    Graph gr = graph();
    auto cat = fragment_catalogue(gr);
    if (g_.json) {
      out_ << nlohmann::json{{"kappa", cat.kappa}, {"fragments", cat.fragments}}.dump() << '\n';
    } else {
      for (const auto& f : cat.fragments) {
        out_ << "cut=" << f.cut.str() << " fragment=" << f.part.str();
        if (f.is_minimal) out_ << " minimal";
        if (f.is_minimum) out_ << " minimum";
        out_ << '\n';
      }
    }
    return kOk;
  }

  int classify_cmd(const std::string& clique, int k, int t) {
    Graph gr = graph();
    auto r = class_membership(gr, parse_set(clique), k, t);
    if (g_.json) {
      out_ << nlohmann::json(r).dump() << '\n';
    } else {
      out_ << to_string(r.verdict);
      if (r.failed) out_ << " (" << r.failed << "): " << r.reason;
      out_ << '\n';
    }
    return kOk;
  }

  int find_path_cmd(int k, int m, const std::string& clique, int start) {
    Graph gr = graph();
    FinderOptions opts;
    opts.record_trace = g_.trace;
    FinderResult result;
    if (!clique.empty()) {
      VertexSet c = parse_set(clique);
      Vertex v0 = start;
      if (v0 < 0) {
        VertexSet outside = gr.vertices() - c;
        if (outside.empty()) fail(ErrorCode::HypothesisNotMet, "no vertex outside C");
        v0 = outside.first();
      }
      result = find_path_thm31(gr, c, k, m, v0, opts);
    } else {
      if (start >= 0) fail(ErrorCode::InvalidArgument, "--start requires --clique");
      result = find_removable_path_thm32(gr, k, m, opts);
    }
    if (g_.json) {
      nlohmann::json j{{"witness", result.witness}, {"route", result.route}};
      if (g_.trace) j["trace"] = result.trace;
      out_ << j.dump() << '\n';
    } else {
      out_ << "path=" << join(result.witness.path.seq()) << " order=" << result.witness.order()
           << " kappa_after=" << result.witness.kappa_after << '\n';
      if (g_.trace)
        for (const auto& step : result.trace) out_ << nlohmann::json(step).dump() << '\n';
    }
    return kOk;
  }

  int verify_cmd(int k, int m) {
    Graph gr = graph();
    auto r = verify_instance(gr, k, m);
    if (g_.json) {
      out_ << report_json(r, g_.timing).dump() << '\n';
    } else if (r.verdict == Agreement::NotApplicable) {
      out_ << "NotApplicable: " << r.detail << '\n';
    } else if (r.verdict == Agreement::Agreement) {
      out_ << "Agreement: finder=" << join(*r.finder_witness)
           << " oracle=" << join(*r.oracle_witness) << '\n';
    } else {
      out_ << "Violation: " << r.detail << '\n';
    }
    if (r.verdict == Agreement::NotApplicable) return kHypothesisNotMet;
    return r.verdict == Agreement::Violation ? kViolation : kOk;
  }

  int sweep_cmd(int k, int m, const std::string& family_path, std::size_t budget) {
    auto graphs = family(family_path);
    auto report = sweep(graphs, k, m, {g_.jobs, budget});
    if (g_.json) {
      for (const auto& r : report.instances) out_ << report_json(r, g_.timing).dump() << '\n';
      out_ << aggregate_json(report).dump() << '\n';
    } else {
      out_ << "checked=" << report.instances.size() << " agreements=" << report.agreements
           << " violations=" << report.violations << " not_applicable=" << report.not_applicable
           << (report.budget_exhausted ? " budget_exhausted" : "") << '\n';
    }
    return report.violations > 0 ? kViolation : kOk;
  }

  int hunt_cmd(int k, int m, const std::string& family_path, std::size_t budget) {
    auto graphs = family(family_path);
    auto report = hunt_even(graphs, k, m, {g_.jobs, budget});
    if (g_.json) {
      for (const auto& h : report.instances) out_ << nlohmann::json(h).dump() << '\n';
      out_ << aggregate_json(report).dump() << '\n';
    } else {
      for (const auto& h : report.instances)
        if (h.counterexample)
          out_ << "counterexample candidate: " << h.instance << " delta=" << h.min_degree << '\n';
      out_ << "checked=" << report.instances.size() << " applicable=" << report.applicable
           << " counterexamples=" << report.counterexamples
           << (report.budget_exhausted ? " budget_exhausted" : "") << '\n';
      if (report.counterexamples == 0) out_ << "no counterexample in budget\n";
    }
    return kOk;
  }

private:
  const Globals& g_;
  std::istream& in_;
  std::ostream& out_;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::HypothesisNotMet: return kHypothesisNotMet;
    case ErrorCode::InvariantViolation:
    case ErrorCode::MeasureStall:
    case ErrorCode::NoCFreeFragment: return kViolation;
    default: return kUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"kcon: connectivity-keeping paths in k-connected bipartite graphs", "kcon"};
  app.require_subcommand(1, 1);
  Globals globals;

  auto add_globals = [&](CLI::App* sub) {
    sub->add_option("--format", globals.format, "Input format")
        ->check(CLI::IsMember({"edge-list", "graph6"}));
    sub->add_flag("--json", globals.json, "Emit JSON");
    sub->add_option("--seed", globals.seed, "Seed for generated families (default 0)");
    sub->add_option("--limit-n", globals.limit_n, "Reject graphs with more vertices")
        ->check(CLI::Range(1, kMaxVertices));
    sub->add_option("--jobs", globals.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("input", globals.input, "Input file, '-' for stdin");
  };

  int k = 1;
  int m = 1;
  int t = 1;
  int start = -1;
  std::string clique;
  std::string family_path;
  std::size_t budget = 0;

  auto* kappa_cmd = app.add_subcommand("kappa", "Vertex connectivity with a witness cut");
  auto* mincuts_cmd = app.add_subcommand("mincuts", "All minimum vertex cuts");
  auto* fragments_cmd = app.add_subcommand("fragments", "Fragments over all minimum cuts");
  auto* classify_cmd = app.add_subcommand("classify", "Clique-class membership of (G, C)");
  auto* find_cmd = app.add_subcommand("find-path", "Construct a removable path of order m");
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check finder and oracle on one graph");
  auto* sweep_cmd = app.add_subcommand("sweep", "Verify every graph of a family");
  auto* hunt_cmd = app.add_subcommand("hunt-even", "Search for even-order counterexamples");
  for (auto* sub : {kappa_cmd, mincuts_cmd, fragments_cmd, classify_cmd, find_cmd, verify_cmd,
                    sweep_cmd, hunt_cmd})
    add_globals(sub);

  classify_cmd->add_option("-C,--clique", clique, "Comma-separated clique vertices")->required();
  classify_cmd->add_option("-k", k)->required();
  classify_cmd->add_option("-t", t)->required();
  for (auto* sub : {find_cmd, verify_cmd, sweep_cmd, hunt_cmd}) {
    sub->add_option("-k", k)->required();
    sub->add_option("-m", m)->required();
  }
  find_cmd->add_option("--clique", clique, "Clique C; selects the class-instance finder");
  find_cmd->add_option("--start", start, "Start vertex v0 (class-instance finder)");
  find_cmd->add_flag("--trace", globals.trace, "Print the audit trace");
  for (auto* sub : {sweep_cmd, hunt_cmd}) {
    sub->add_option("--family", family_path, "JSON family config; default reads graph6 lines");
    sub->add_option("--budget", budget, "Maximum number of instances (0 = all)");
  }
  for (auto* sub : {verify_cmd, sweep_cmd}) sub->add_flag("--timing", globals.timing, "Include wall time in JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "kcon: " << e.what() << '\n';
    return kUsage;
  }
  for (auto* sub : app.get_subcommands())
    globals.seed_given = globals.seed_given || sub->count("--seed") > 0;

  Runner runner(globals, in, out);
  try {
    if (kappa_cmd->parsed()) return runner.kappa_cmd();
    if (mincuts_cmd->parsed()) return runner.mincuts_cmd();
    if (fragments_cmd->parsed()) return runner.fragments_cmd();
    if (classify_cmd->parsed()) return runner.classify_cmd(clique, k, t);
    if (find_cmd->parsed()) return runner.find_path_cmd(k, m, clique, start);
    if (verify_cmd->parsed()) return runner.verify_cmd(k, m);
    if (sweep_cmd->parsed()) return runner.sweep_cmd(k, m, family_path, budget);
    if (hunt_cmd->parsed()) return runner.hunt_cmd(k, m, family_path, budget);
  } catch (const Error& e) {
    err << "kcon: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const nlohmann::json::exception& e) {
    err << "kcon: bad family config: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "kcon: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace kcon::cli
