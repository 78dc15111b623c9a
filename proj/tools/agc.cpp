#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "agc/detail/sorted.hpp"

#include "agc/bench.hpp"
#include "agc/divergence.hpp"
#include "agc/dsim.hpp"
#include "agc/graph_io.hpp"
#include "agc/liveness.hpp"
#include "agc/random_graph.hpp"
#include "agc/report.hpp"
#include "agc/version.hpp"

namespace {

using namespace agc;

// Exit contract: 0 success, 1 invariant violation, 2 usage or parse error.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvariantFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  try {
    return read_file(path);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
}

ActorGraph load_graph_checked(const std::string& path) {
  std::vector<std::string> warnings;
  ActorGraph g = parse_graph(slurp(path), &warnings);
  for (const std::string& w : warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
  const std::vector<std::string> issues = validate(g);
  if (!issues.empty()) {
    for (const std::string& issue : issues)
      std::fprintf(stderr, "invalid graph: %s\n", issue.c_str());
    throw InvariantFailure("graph failed validation");
  }
  return g;
}

struct Output {
  std::string dir;  // empty writes to stdout

  void emit(const std::string& name, const std::string& content) const {
    if (dir.empty()) {
      std::fwrite(content.data(), 1, content.size(), stdout);
      return;
    }
    std::filesystem::create_directories(dir);
    write_file((std::filesystem::path(dir) / name).string(), content);
  }
};

std::string id_line(const char* label, const std::vector<ActorId>& ids) {
  std::ostringstream out;
  out << label;
  for (ActorId a : ids) out << ' ' << a;
  out << '\n';
  return out.str();
}

// DOT with liveness verdicts baked in: live actors solid, garbage gray.
std::string liveness_dot(const ActorGraph& g, const std::vector<ActorId>& live) {
  std::ostringstream out;
  out << "digraph liveness {\n";
  for (ActorId a : g.actors) {
    const bool is_live = detail::contains(live, a);
    out << "  a" << a << " [label=\"" << a << "\"";
    if (g.is_root(a)) out << ", shape=triangle";
    out << (is_live ? ", style=filled, fillcolor=white"
                    : ", style=filled, fillcolor=gray80");
    out << "];\n";
  }
  for (const auto& [src, dst] : g.references)
    out << "  a" << src << " -> a" << dst << ";\n";
  out << "}\n";
  return out.str();
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw UsageError("format '" + format + "' is not available for this subcommand");
}

Method method_arg(const std::string& name) {
  const auto m = method_from_name(name);
  if (!m) throw UsageError("unknown method: " + name);
  return *m;
}

Strategy strategy_arg(const std::string& name) {
  const auto s = strategy_from_name(name);
  if (!s) throw UsageError("unknown strategy: " + name);
  return *s;
}

// Workload selection shared by sim and dsim: either a generated trace
// (--workload + --args) or a trace file (--trace).
struct TraceSource {
  std::string workload;
  std::vector<std::uint64_t> args;
  std::string trace_file;

  void add_options(CLI::App* cmd) {
    cmd->add_option("--workload", workload, "fib, nq, mx or dmx")
        ->check(CLI::IsMember({"fib", "nq", "mx", "dmx"}));
    cmd->add_option("--args", args,
                    "workload arguments: fib k[,threshold]; nq n; mx/dmx dim")
        ->delimiter(',');
    cmd->add_option("--trace", trace_file, "replay a trace file instead of generating one");
  }

  MutationTrace resolve() const {
    if (!trace_file.empty()) {
      if (!workload.empty()) throw UsageError("--trace and --workload are exclusive");
      return parse_trace(slurp(trace_file));
    }
    if (workload.empty()) throw UsageError("one of --workload or --trace is required");
    WorkloadSpec spec;
    spec.kind = workload == "dmx" ? "mx" : workload;
    spec.distributed = workload == "dmx";
    if (args.empty()) throw UsageError("--args is required with --workload");
    spec.arg = args[0];
    if (args.size() > 1) {
      if (workload != "fib") throw UsageError("only fib takes a second argument");
      spec.threshold = args[1];
    }
    if (args.size() > 2) throw UsageError("too many workload arguments");
    try {
      return gen_workload(spec);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
};

std::string sanitize(const std::string& label) {
  std::string out;
  for (char c : label) {
    if (std::isalnum(static_cast<unsigned char>(c)))
      out += c;
    else if (!out.empty() && out.back() != '_')
      out += '_';
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out;
}

std::string bench_csv(const BenchResult& res) {
  std::ostringstream out;
  out << "workload,method,strategy,actors,references,live,garbage,collected,"
         "event_ops,gc_ops,overhead_num,overhead_den,ok\n";
  for (const BenchCell& c : res.cells) {
    const GcReport& r = c.report;
    out << c.workload << ',' << method_name(c.method) << ','
        << strategy_name(c.strategy) << ',' << r.actors << ',' << r.references
        << ',' << r.live << ',' << r.garbage << ',' << r.collected << ','
        << r.event_ops << ',' << r.gc_ops << ',' << r.overhead.num << ','
        << r.overhead.den << ',' << (c.ok ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"actor reference-graph garbage collection workbench"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::string out_dir;
  std::string format = "table";
  app.add_option("--seed", seed, "seed for all randomized pieces");
  app.add_option("--out", out_dir, "write outputs into this directory instead of stdout");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "table", "dot"}));

  // gen
  auto* gen = app.add_subcommand("gen", "generate a seeded random actor graph");
  std::size_t gen_actors = 32;
  double gen_density = 0.08;
  double gen_unblocked = 0.3;
  std::size_t gen_roots = 1;
  gen->add_option("--actors", gen_actors, "actor count");
  gen->add_option("--density", gen_density, "probability of each ordered reference");
  gen->add_option("--unblocked", gen_unblocked, "probability a non-root actor is unblocked");
  gen->add_option("--roots", gen_roots, "root count");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "semantic liveness of a graph file");
  std::string oracle_file;
  oracle->add_option("graph", oracle_file, "graph file")->required();

  // transform
  auto* transform_cmd =
      app.add_subcommand("transform", "rewrite an actor graph into a passive graph");
  std::string transform_file;
  std::string transform_method = "va";
  transform_cmd->add_option("graph", transform_file, "graph file")->required();
  transform_cmd->add_option("--method", transform_method, "va, direct or indirect")
      ->check(CLI::IsMember({"va", "direct", "indirect"}));

  // collect
  auto* collect_cmd = app.add_subcommand("collect", "transform, mark and report liveness");
  std::string collect_file;
  std::string collect_method = "va";
  std::string collect_strategy = "two_scan";
  std::string collect_frontier = "fifo";
  collect_cmd->add_option("graph", collect_file, "graph file")->required();
  collect_cmd->add_option("--method", collect_method, "va, direct or indirect")
      ->check(CLI::IsMember({"va", "direct", "indirect"}));
  collect_cmd->add_option("--strategy", collect_strategy, "marking strategy")
      ->check(CLI::IsMember({"two_scan", "one_scan"}));
  collect_cmd->add_option("--frontier", collect_frontier, "traversal frontier order")
      ->check(CLI::IsMember({"fifo", "lifo"}));

  // diff
  auto* diff = app.add_subcommand("diff", "compare every method against the oracle");
  std::string diff_file;
  std::string diff_strategy = "two_scan";
  diff->add_option("graph", diff_file, "graph file")->required();
  diff->add_option("--strategy", diff_strategy, "marking strategy")
      ->check(CLI::IsMember({"two_scan", "one_scan"}));

  // sim
  auto* sim = app.add_subcommand("sim", "replay a mutation trace with periodic collection");
  TraceSource sim_source;
  sim_source.add_options(sim);
  std::size_t sim_gc_every = 5;
  std::string sim_method = "direct";
  std::string sim_strategy = "two_scan";
  std::string sim_trace_out;
  sim->add_option("--gc-every", sim_gc_every, "collect after this many events; 0 disables");
  sim->add_option("--method", sim_method, "va, direct or indirect")
      ->check(CLI::IsMember({"va", "direct", "indirect"}));
  sim->add_option("--strategy", sim_strategy, "marking strategy")
      ->check(CLI::IsMember({"two_scan", "one_scan"}));
  sim->add_option("--trace-out", sim_trace_out, "also write the trace to this file");

  // dsim
  auto* dsim = app.add_subcommand("dsim", "replay a trace split across simulated nodes");
  TraceSource dsim_source;
  dsim_source.add_options(dsim);
  std::uint32_t dsim_nodes = 2;
  std::string dsim_policy = "locality";
  std::size_t dsim_local_every = 5;
  std::size_t dsim_global_every = 25;
  std::string dsim_mode = "all";
  std::string dsim_method = "direct";
  std::string dsim_strategy = "one_scan";
  dsim->add_option("--nodes", dsim_nodes, "simulated node count");
  dsim->add_option("--policy", dsim_policy, "placement policy")
      ->check(CLI::IsMember({"locality", "round_robin_bfs", "bfs"}));
  dsim->add_option("--local-every", dsim_local_every, "local collection period; 0 disables");
  dsim->add_option("--global-every", dsim_global_every, "global collection period; 0 disables");
  dsim->add_option("--mode", dsim_mode, "which mechanism rows to print")
      ->check(CLI::IsMember({"nogc", "gdp", "lgc", "cdgc", "all"}));
  dsim->add_option("--method", dsim_method, "va, direct or indirect")
      ->check(CLI::IsMember({"va", "direct", "indirect"}));
  dsim->add_option("--strategy", dsim_strategy, "marking strategy")
      ->check(CLI::IsMember({"two_scan", "one_scan"}));

  // bench
  auto* bench = app.add_subcommand("bench", "run a suite of workload cells");
  std::vector<std::string> bench_workloads;
  std::vector<std::string> bench_methods;
  std::vector<std::string> bench_strategies;
  std::size_t bench_gc_every = 5;
  bench->add_option("--workload", bench_workloads,
                    "workload spec, repeatable: fib:12, fib:12:1, nq:6, mx:8, dmx:8");
  bench->add_option("--method", bench_methods, "methods to run; default all")
      ->check(CLI::IsMember({"va", "direct", "indirect"}));
  bench->add_option("--strategy", bench_strategies, "strategies to run; default both")
      ->check(CLI::IsMember({"two_scan", "one_scan"}));
  bench->add_option("--gc-every", bench_gc_every, "collection period inside each cell");

  for (CLI::App* sub : {gen, oracle, transform_cmd, collect_cmd, diff, sim, dsim, bench})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const Output out{out_dir};
  try {
    if (gen->parsed()) {
      ActorGraph g;
      try {
        g = random_graph(seed, gen_actors, gen_density, gen_unblocked, gen_roots);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (format == "dot") {
        out.emit("graph.dot", to_dot(g));
      } else if (format == "json") {
        nlohmann::json actors = nlohmann::json::array();
        for (ActorId a : g.actors)
          actors.push_back(
              {{"id", a}, {"root", g.is_root(a)}, {"unblocked", g.is_unblocked(a)}});
        nlohmann::json refs = nlohmann::json::array();
        for (const auto& [src, dst] : g.references)
          refs.push_back({src, dst});
        const nlohmann::json j = {
            {"tool", {{"name", std::string(kToolName)}, {"version", std::string(kToolVersion)}}},
            {"seed", seed},
            {"params",
             {{"actors", gen_actors},
              {"density", gen_density},
              {"p_unblocked", gen_unblocked},
              {"roots", gen_roots}}},
            {"stats", graph_stats_json(g)},
            {"actors", actors},
            {"references", refs}};
        out.emit("graph.json", json_text(j));
      } else {
        out.emit("graph.txt", serialize_graph(g));
      }
      return 0;
    }

    if (oracle->parsed()) {
      const ActorGraph g = load_graph_checked(oracle_file);
      const LivenessResult fix = live_fixpoint(g);
      const LivenessResult reach = live_reachset(g);
      if (fix.live != reach.live)
        throw InvariantFailure("the two liveness algorithms disagree");
      if (format == "json") {
        out.emit("oracle.json", json_text(oracle_json(g, fix)));
      } else if (format == "dot") {
        out.emit("oracle.dot", liveness_dot(g, fix.live));
      } else {
        std::string text = id_line("live", fix.live);
        text += id_line("garbage", fix.garbage);
        text += id_line("potentially_active", fix.potentially_active);
        out.emit("oracle.txt", text);
      }
      return 0;
    }

    if (transform_cmd->parsed()) {
      const ActorGraph g = load_graph_checked(transform_file);
      const Method m = method_arg(transform_method);
      const TransformResult res = transform(g, m);
      std::vector<std::string> issues = validate(res.graph);
      const std::vector<std::string> map_issues = validate(res.map, g, res.graph);
      issues.insert(issues.end(), map_issues.begin(), map_issues.end());
      if (!issues.empty()) {
        for (const std::string& issue : issues)
          std::fprintf(stderr, "invalid transform output: %s\n", issue.c_str());
        throw InvariantFailure("transform output failed validation");
      }
      if (!out_dir.empty()) {
        out.emit("passive.txt", serialize_passive(res.graph, &res.map));
        out.emit("stats.json", json_text(transform_report_json(g, res, m)));
        if (format == "dot") out.emit("passive.dot", to_dot(res.graph, &res.map));
        return 0;
      }
      if (format == "json")
        out.emit("", json_text(transform_report_json(g, res, m)));
      else if (format == "dot")
        out.emit("", to_dot(res.graph, &res.map));
      else
        out.emit("", serialize_passive(res.graph, &res.map));
      return 0;
    }

    if (collect_cmd->parsed()) {
      const ActorGraph g = load_graph_checked(collect_file);
      const Method m = method_arg(collect_method);
      const Strategy s = strategy_arg(collect_strategy);
      const Frontier f = collect_frontier == "lifo" ? Frontier::lifo : Frontier::fifo;
      const CollectResult c = collect(g, m, s, f);
      const LivenessResult oracle_res = live_fixpoint(g);

      GcReport rep;
      rep.seed = seed;
      rep.method = method_name(m);
      rep.strategy = strategy_name(s);
      rep.actors = g.actors.size();
      rep.references = g.references.size();
      rep.roots = g.roots.size();
      rep.unblocked = g.unblocked.size();
      rep.transform = c.transform.stats;
      rep.mark_ops = c.mark.ops;
      rep.mark_scans = c.mark.scans;
      rep.live = c.liveness.live.size();
      rep.garbage = c.liveness.garbage.size();
      rep.methods_agree = c.liveness.live == oracle_res.live;
      if (!rep.methods_agree && m == Method::dual_node) {
        std::vector<ActorId> diffset;
        std::set_symmetric_difference(c.liveness.live.begin(), c.liveness.live.end(),
                                      oracle_res.live.begin(), oracle_res.live.end(),
                                      std::back_inserter(diffset));
        rep.dual_divergences = diffset.size();
      }

      if (format == "json") {
        nlohmann::json j = collect_json(g, m, s, c);
        j["report"] = rep;
        out.emit("collect.json", json_text(j));
      } else if (format == "dot") {
        out.emit("collect.dot", liveness_dot(g, c.liveness.live));
      } else {
        std::string text = id_line("live", c.liveness.live);
        text += id_line("garbage", c.liveness.garbage);
        text += report_table(rep);
        out.emit("collect.txt", text);
      }
      return 0;
    }

    if (diff->parsed()) {
      require_format(format, {"table", "json"});
      const ActorGraph g = load_graph_checked(diff_file);
      const DivergenceReport rep = divergence_report(g, strategy_arg(diff_strategy));
      if (rep.dual_divergences > 0)
        std::fprintf(stderr, "warning: dual-node verdict differs from the oracle on %zu actor(s)\n",
                     rep.dual_divergences);
      if (format == "json")
        out.emit("diff.json", json_text(divergence_json(rep)));
      else
        out.emit("diff.txt", divergence_table(rep));
      if (!rep.back_pointer_methods_agree) {
        std::fprintf(stderr, "invariant violation: a back-pointer method disagrees with the oracle\n");
        return 1;
      }
      return 0;
    }

    if (sim->parsed()) {
      require_format(format, {"table", "json"});
      const MutationTrace trace = sim_source.resolve();
      if (!sim_trace_out.empty()) write_file(sim_trace_out, serialize_trace(trace));
      const ReplayReport rep =
          replay(trace, sim_gc_every, method_arg(sim_method), strategy_arg(sim_strategy));
      if (format == "json")
        out.emit("sim.json", json_text(replay_json(rep)));
      else
        out.emit("sim.txt", replay_table(rep));
      return 0;
    }

    if (dsim->parsed()) {
      require_format(format, {"table", "json"});
      const MutationTrace trace = dsim_source.resolve();
      const auto policy = policy_from_name(dsim_policy);
      if (!policy) throw UsageError("unknown policy: " + dsim_policy);
      DsimReport rep = run_modes(trace, dsim_nodes, *policy, dsim_local_every,
                                 dsim_global_every, method_arg(dsim_method),
                                 strategy_arg(dsim_strategy));
      const bool all_ok = rep.all_ok;
      if (dsim_mode != "all") {
        const GcMode wanted = *mode_from_name(dsim_mode);
        std::erase_if(rep.runs, [wanted](const ModeRun& r) { return r.mode != wanted; });
      }
      if (format == "json")
        out.emit("dsim.json", json_text(dsim_json(rep)));
      else
        out.emit("dsim.txt", dsim_table(rep));
      if (!all_ok) {
        std::fprintf(stderr, "invariant violation: a distributed collection check failed\n");
        return 1;
      }
      return 0;
    }

    if (bench->parsed()) {
      require_format(format, {"table", "json"});
      SuiteSpec suite;
      suite.seed = seed;
      suite.gc_every = bench_gc_every;
      for (const std::string& s : bench_workloads) {
        const auto spec = workload_from_string(s);
        if (!spec) throw UsageError("bad workload spec: " + s);
        suite.workloads.push_back(*spec);
      }
      if (bench_methods.empty())
        suite.methods = {Method::dual_node, Method::direct, Method::indirect};
      else
        for (const std::string& m : bench_methods) suite.methods.push_back(method_arg(m));
      if (bench_strategies.empty())
        suite.strategies = {Strategy::two_scan, Strategy::one_scan};
      else
        for (const std::string& s : bench_strategies)
          suite.strategies.push_back(strategy_arg(s));

      const BenchResult res = run_suite(suite);
      if (!out_dir.empty()) {
        for (const BenchCell& c : res.cells) {
          const std::string name = "cell_" + sanitize(c.workload) + "_" +
                                   std::string(method_name(c.method)) + "_" +
                                   std::string(strategy_name(c.strategy)) + ".json";
          nlohmann::json j = {{"report", c.report}, {"ok", c.ok}, {"note", c.note}};
          out.emit(name, json_text(j));
        }
        out.emit("bench.json", json_text(bench_json(res)));
        out.emit("bench.csv", bench_csv(res));
        out.emit("bench.txt", bench_table(res));
      } else if (format == "json") {
        out.emit("", json_text(bench_json(res)));
      } else {
        out.emit("", bench_table(res));
      }
      if (!res.all_ok) {
        std::fprintf(stderr, "invariant violation: a bench cell failed its checks\n");
        return 1;
      }
      return 0;
    }
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const InvariantFailure& e) {
    std::fprintf(stderr, "invariant violation: %s\n", e.what());
    return 1;
  } catch (const ReplayError& e) {
    std::fprintf(stderr, "invariant violation: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
