#include "agc/bench.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <tuple>

#include "agc/liveness.hpp"

namespace agc {

namespace {

constexpr std::uint64_t kDefaultFibThreshold = 30;

std::optional<std::uint64_t> parse_u64(std::string_view s) {
  std::uint64_t value = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end || s.empty()) return std::nullopt;
  return value;
}

}  // namespace

std::string workload_label(const WorkloadSpec& w) {
  std::string label = w.kind == "mx" && w.distributed ? "dmx" : w.kind;
  label += "(" + std::to_string(w.arg);
  if (w.kind == "fib" && w.threshold != 0 && w.threshold != kDefaultFibThreshold)
    label += ",t=" + std::to_string(w.threshold);
  label += ")";
  return label;
}

MutationTrace gen_workload(const WorkloadSpec& w) {
  if (w.kind == "fib")
    return gen_fib_trace(w.arg, w.threshold == 0 ? kDefaultFibThreshold : w.threshold);
  if (w.kind == "nq") return gen_nqueens_trace(w.arg);
  if (w.kind == "mx") return gen_matmul_trace(w.arg, w.distributed);
  throw std::invalid_argument("unknown workload kind: " + w.kind);
}

std::optional<WorkloadSpec> workload_from_string(std::string_view s) {
  std::vector<std::string_view> parts;
  while (!s.empty()) {
    const std::size_t colon = s.find(':');
    parts.push_back(s.substr(0, colon));
    if (colon == std::string_view::npos) break;
    s.remove_prefix(colon + 1);
  }
  if (parts.size() < 2 || parts.size() > 3) return std::nullopt;
  WorkloadSpec spec;
  if (parts[0] == "fib" || parts[0] == "nq" || parts[0] == "mx") {
    spec.kind = std::string(parts[0]);
  } else if (parts[0] == "dmx") {
    spec.kind = "mx";
    spec.distributed = true;
  } else {
    return std::nullopt;
  }
  const auto arg = parse_u64(parts[1]);
  if (!arg) return std::nullopt;
  spec.arg = *arg;
  if (parts.size() == 3) {
    if (spec.kind != "fib") return std::nullopt;
    const auto threshold = parse_u64(parts[2]);
    if (!threshold || *threshold == 0) return std::nullopt;
    spec.threshold = *threshold;
  }
  return spec;
}

BenchResult run_suite(const SuiteSpec& suite) {
  BenchResult result;
  for (const WorkloadSpec& w : suite.workloads) {
    for (const Method m : suite.methods) {
      for (const Strategy s : suite.strategies) {
        BenchCell cell;
        cell.workload = workload_label(w);
        cell.method = m;
        cell.strategy = s;
        GcReport& rep = cell.report;
        rep.seed = suite.seed;
        rep.workload = cell.workload;
        rep.method = method_name(m);
        rep.strategy = strategy_name(s);
        try {
          const MutationTrace trace = gen_workload(w);
          const ReplayReport base = replay(trace, 0, m, s);
          const ReplayReport run = replay(trace, suite.gc_every, m, s);

          const ActorGraph topo = trace_topology(trace);
          rep.actors = topo.actors.size();
          rep.references = topo.references.size();
          rep.roots = topo.roots.size();
          rep.unblocked = topo.unblocked.size();

          // Transform and mark stats are measured on the baseline's final
          // heap: the largest graph a cycle would ever face on this trace.
          const CollectResult snap = collect(base.final_graph, m, s);
          rep.transform = snap.transform.stats;
          rep.mark_ops = snap.mark.ops;
          rep.mark_scans = snap.mark.scans;

          const LivenessResult oracle = live_fixpoint(base.final_graph);
          rep.live = oracle.live.size();
          rep.garbage = oracle.garbage.size();
          rep.collected = run.collected_total.size();
          rep.event_ops = run.event_ops;
          rep.gc_ops = run.gc_ops;
          rep.overhead = Ratio{run.event_ops + run.gc_ops,
                               base.event_ops + base.gc_ops};

          if (snap.liveness.live != oracle.live) {
            if (m == Method::dual_node) {
              rep.methods_agree = false;
              std::vector<ActorId> diff;
              std::set_symmetric_difference(
                  snap.liveness.live.begin(), snap.liveness.live.end(),
                  oracle.live.begin(), oracle.live.end(),
                  std::back_inserter(diff));
              rep.dual_divergences = diff.size();
              cell.note = "dual-node verdicts differ from the oracle on " +
                          std::to_string(diff.size()) + " actor(s)";
            } else {
              cell.ok = false;
              cell.note = "live set disagrees with the oracle";
            }
          }
          if (cell.ok && run.collected_total.size() +
                                 run.final_graph.actors.size() !=
                             trace.expected_actor_total) {
            cell.ok = false;
            cell.note = "collected + surviving does not cover the trace";
          }
          if (cell.ok && !run.cycles.empty() && rep.collected > 0 &&
              !exceeds_one(rep.overhead)) {
            cell.ok = false;
            cell.note = "collection cycles reported no extra cost";
          }
        } catch (const std::exception& e) {
          cell.ok = false;
          cell.note = e.what();
        }
        result.all_ok = result.all_ok && cell.ok;
        result.cells.push_back(std::move(cell));
      }
    }
  }
  std::sort(result.cells.begin(), result.cells.end(),
            [](const BenchCell& a, const BenchCell& b) {
              return std::tuple(a.workload, method_name(a.method),
                                strategy_name(a.strategy)) <
                     std::tuple(b.workload, method_name(b.method),
                                strategy_name(b.strategy));
            });
  return result;
}

nlohmann::json bench_json(const BenchResult& res) {
  nlohmann::json cells = nlohmann::json::array();
  for (const BenchCell& c : res.cells) {
    cells.push_back({{"workload", c.workload},
                     {"method", method_name(c.method)},
                     {"strategy", strategy_name(c.strategy)},
                     {"report", c.report},
                     {"ok", c.ok},
                     {"note", c.note}});
  }
  return {{"cells", cells}, {"all_ok", res.all_ok}};
}

std::string bench_table(const BenchResult& res) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"workload", "method", "strategy", "actors", "collected",
                  "event_ops", "gc_ops", "overhead", "status"});
  for (const BenchCell& c : res.cells) {
    rows.push_back({c.workload, std::string(method_name(c.method)),
                    std::string(strategy_name(c.strategy)),
                    std::to_string(c.report.actors),
                    std::to_string(c.report.collected),
                    std::to_string(c.report.event_ops),
                    std::to_string(c.report.gc_ops), render(c.report.overhead),
                    c.ok ? (c.note.empty() ? "ok" : "ok (" + c.note + ")")
                         : "FAIL: " + c.note});
  }
  std::string out = render_columns(rows);
  out += res.all_ok ? "suite: ok\n" : "suite: FAIL\n";
  return out;
}

}  // namespace agc
