#include "agc/report.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "agc/liveness.hpp"
#include "agc/version.hpp"

namespace agc {

namespace {

nlohmann::json tool_json() {
  return {{"name", std::string(kToolName)}, {"version", std::string(kToolVersion)}};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string kv_table(const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::size_t width = 0;
  for (const auto& [k, v] : pairs) width = std::max(width, k.size());
  std::ostringstream out;
  for (const auto& [k, v] : pairs) {
    out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  }
  return out.str();
}

}  // namespace

void to_json(nlohmann::json& j, const Ratio& r) {
  j = {{"num", r.num}, {"den", r.den}, {"text", render(r)}};
}

void to_json(nlohmann::json& j, const TransformStats& s) {
  j = {{"input_nodes", s.input_nodes},
       {"input_edges", s.input_edges},
       {"output_nodes", s.output_nodes},
       {"output_edges", s.output_edges},
       {"node_ratio", s.node_ratio},
       {"edge_ratio", s.edge_ratio},
       {"traversal_passes", s.traversal_passes}};
}

void to_json(nlohmann::json& j, const GcReport& r) {
  j = {{"tool", tool_json()},
       {"seed", r.seed},
       {"workload", r.workload},
       {"method", r.method},
       {"strategy", r.strategy},
       {"graph",
        {{"actors", r.actors},
         {"references", r.references},
         {"roots", r.roots},
         {"unblocked", r.unblocked}}},
       {"transform", r.transform},
       {"marking", {{"ops", r.mark_ops}, {"scans", r.mark_scans}}},
       {"live", r.live},
       {"garbage", r.garbage},
       {"collected", r.collected},
       {"event_ops", r.event_ops},
       {"gc_ops", r.gc_ops},
       {"overhead", r.overhead},
       {"dual_divergences", r.dual_divergences},
       {"methods_agree", r.methods_agree}};
}

std::string report_table(const GcReport& r) {
  return kv_table({
      {"workload", r.workload.empty() ? "-" : r.workload},
      {"method", r.method},
      {"strategy", r.strategy},
      {"seed", std::to_string(r.seed)},
      {"actors", std::to_string(r.actors)},
      {"references", std::to_string(r.references)},
      {"roots", std::to_string(r.roots)},
      {"unblocked", std::to_string(r.unblocked)},
      {"transform nodes", std::to_string(r.transform.input_nodes) + " -> " +
                              std::to_string(r.transform.output_nodes)},
      {"transform edges", std::to_string(r.transform.input_edges) + " -> " +
                              std::to_string(r.transform.output_edges)},
      {"node ratio", render(r.transform.node_ratio)},
      {"edge ratio", render(r.transform.edge_ratio)},
      {"traversal passes", std::to_string(r.transform.traversal_passes)},
      {"mark ops", std::to_string(r.mark_ops)},
      {"mark scans", std::to_string(r.mark_scans)},
      {"live", std::to_string(r.live)},
      {"garbage", std::to_string(r.garbage)},
      {"collected", std::to_string(r.collected)},
      {"event ops", std::to_string(r.event_ops)},
      {"gc ops", std::to_string(r.gc_ops)},
      {"overhead", render(r.overhead)},
      {"dual divergences", std::to_string(r.dual_divergences)},
      {"methods agree", yes_no(r.methods_agree)},
  });
}

nlohmann::json graph_stats_json(const ActorGraph& g) {
  return {{"actors", g.actors.size()},
          {"references", g.references.size()},
          {"roots", g.roots.size()},
          {"unblocked", g.unblocked.size()}};
}

nlohmann::json oracle_json(const ActorGraph& g, const LivenessResult& res) {
  return {{"tool", tool_json()},
          {"graph", graph_stats_json(g)},
          {"live", res.live},
          {"garbage", res.garbage},
          {"potentially_active", res.potentially_active},
          {"counts",
           {{"live", res.live.size()},
            {"garbage", res.garbage.size()},
            {"potentially_active", res.potentially_active.size()}}}};
}

nlohmann::json transform_report_json(const ActorGraph& g, const TransformResult& t, Method m) {
  nlohmann::json j = {{"tool", tool_json()},
                      {"method", method_name(m)},
                      {"graph", graph_stats_json(g)},
                      {"stats", t.stats}};
  if (m == Method::dual_node) {
    std::uint64_t self_refs = 0;
    std::uint64_t unblocked_self_refs = 0;
    for (const auto& [src, dst] : g.references) {
      if (src != dst) continue;
      ++self_refs;
      if (g.is_unblocked(src)) ++unblocked_self_refs;
    }
    const std::uint64_t pair_rule =
        g.actors.size() + g.unblocked.size() + 2 * g.references.size();
    const std::int64_t actual = static_cast<std::int64_t>(t.stats.output_edges);
    const std::int64_t triple = static_cast<std::int64_t>(3 * g.references.size());
    j["edge_reading"] = std::string(kDualEdgeReading);
    j["edge_accounting"] = {{"pair_rule_total", pair_rule},
                            {"self_reference_collisions", self_refs + unblocked_self_refs},
                            {"actual", t.stats.output_edges},
                            {"approx_triple", 3 * g.references.size()},
                            {"delta_vs_triple", actual - triple}};
  }
  return j;
}

std::string transform_table(const ActorGraph& g, const TransformResult& t, Method m) {
  std::vector<std::pair<std::string, std::string>> pairs = {
      {"method", std::string(method_name(m))},
      {"input nodes", std::to_string(t.stats.input_nodes)},
      {"input edges", std::to_string(t.stats.input_edges)},
      {"output nodes", std::to_string(t.stats.output_nodes)},
      {"output edges", std::to_string(t.stats.output_edges)},
      {"node ratio", render(t.stats.node_ratio)},
      {"edge ratio", render(t.stats.edge_ratio)},
      {"traversal passes", std::to_string(t.stats.traversal_passes)},
  };
  if (m == Method::dual_node) {
    const std::uint64_t pair_rule =
        g.actors.size() + g.unblocked.size() + 2 * g.references.size();
    pairs.emplace_back("edge reading", std::string(kDualEdgeReading));
    pairs.emplace_back("pair rule total", std::to_string(pair_rule));
    pairs.emplace_back("approx triple", std::to_string(3 * g.references.size()));
  }
  return kv_table(pairs);
}

nlohmann::json collect_json(const ActorGraph& g, Method m, Strategy s, const CollectResult& c) {
  return {{"tool", tool_json()},
          {"method", method_name(m)},
          {"strategy", strategy_name(s)},
          {"graph", graph_stats_json(g)},
          {"transform", c.transform.stats},
          {"marking", {{"ops", c.mark.ops}, {"scans", c.mark.scans}}},
          {"live", c.liveness.live},
          {"garbage", c.liveness.garbage},
          {"potentially_active", c.liveness.potentially_active},
          {"counts",
           {{"live", c.liveness.live.size()}, {"garbage", c.liveness.garbage.size()}}}};
}

nlohmann::json divergence_json(const DivergenceReport& rep) {
  nlohmann::json rows = nlohmann::json::array();
  for (const DivergenceRow& row : rep.rows) {
    rows.push_back({{"actor", row.actor},
                    {"oracle_live", row.oracle_live},
                    {"direct_live", row.direct_live},
                    {"indirect_live", row.indirect_live},
                    {"dual_live", row.dual_live},
                    {"dual_class", divergence_class_name(row.dual_class)}});
  }
  return {{"tool", tool_json()},
          {"edge_reading", std::string(kDualEdgeReading)},
          {"rows", rows},
          {"back_pointer_methods_agree", rep.back_pointer_methods_agree},
          {"dual_divergences", rep.dual_divergences}};
}

std::string divergence_table(const DivergenceReport& rep) {
  std::ostringstream out;
  out << "dual-node edge reading: " << kDualEdgeReading << '\n';
  out << "back-pointer methods agree with oracle: "
      << yes_no(rep.back_pointer_methods_agree) << '\n';
  out << "dual-node divergences: " << rep.dual_divergences << '\n';
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"actor", "oracle", "direct", "indirect", "dual", "class"});
  for (const DivergenceRow& row : rep.rows) {
    rows.push_back({std::to_string(row.actor), yes_no(row.oracle_live),
                    yes_no(row.direct_live), yes_no(row.indirect_live),
                    yes_no(row.dual_live),
                    std::string(divergence_class_name(row.dual_class))});
  }
  out << render_columns(rows);
  return out.str();
}

nlohmann::json replay_json(const ReplayReport& rep) {
  nlohmann::json cycles = nlohmann::json::array();
  for (const GcCycleRecord& c : rep.cycles) {
    cycles.push_back({{"at_event", c.at_event},
                      {"live", c.live},
                      {"collected", c.collected.size()},
                      {"cumulative_collected", c.cumulative_collected},
                      {"surviving", c.surviving},
                      {"not_yet_spawned", c.not_yet_spawned},
                      {"gc_ops", c.gc_ops}});
  }
  return {{"tool", tool_json()},
          {"gc_every", rep.gc_every},
          {"method", method_name(rep.method)},
          {"strategy", strategy_name(rep.strategy)},
          {"events_applied", rep.events_applied},
          {"event_ops", rep.event_ops},
          {"gc_ops", rep.gc_ops},
          {"cycles", cycles},
          {"collected_total", rep.collected_total.size()},
          {"distinct_actors", rep.distinct_actors},
          {"final", graph_stats_json(rep.final_graph)}};
}

std::string replay_table(const ReplayReport& rep) {
  std::ostringstream out;
  out << kv_table({
      {"gc every", rep.gc_every == 0 ? "off" : std::to_string(rep.gc_every)},
      {"method", std::string(method_name(rep.method))},
      {"strategy", std::string(strategy_name(rep.strategy))},
      {"events applied", std::to_string(rep.events_applied)},
      {"event ops", std::to_string(rep.event_ops)},
      {"gc ops", std::to_string(rep.gc_ops)},
      {"collected", std::to_string(rep.collected_total.size())},
      {"distinct actors", std::to_string(rep.distinct_actors)},
      {"final actors", std::to_string(rep.final_graph.actors.size())},
  });
  if (!rep.cycles.empty()) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"cycle", "at_event", "live", "collected", "cumulative",
                    "surviving", "unspawned", "gc_ops"});
    std::size_t i = 0;
    for (const GcCycleRecord& c : rep.cycles) {
      rows.push_back({std::to_string(++i), std::to_string(c.at_event),
                      std::to_string(c.live), std::to_string(c.collected.size()),
                      std::to_string(c.cumulative_collected),
                      std::to_string(c.surviving),
                      std::to_string(c.not_yet_spawned),
                      std::to_string(c.gc_ops)});
    }
    out << render_columns(rows);
  }
  return out.str();
}

nlohmann::json dsim_json(const DsimReport& rep) {
  nlohmann::json runs = nlohmann::json::array();
  for (const ModeRun& r : rep.runs) {
    runs.push_back({{"mode", mode_name(r.mode)},
                    {"local_cycles", r.local_cycles},
                    {"global_cycles", r.global_cycles},
                    {"collected", r.collected},
                    {"detected", r.detected},
                    {"residual_garbage", r.residual_garbage},
                    {"surviving", r.surviving},
                    {"event_ops", r.event_ops},
                    {"gc_ops", r.gc_ops},
                    {"overhead", r.overhead},
                    {"subsumption_held", r.subsumption_held},
                    {"detection_matched", r.detection_matched}});
  }
  return {{"tool", tool_json()},
          {"nodes", rep.n_nodes},
          {"policy", policy_name(rep.policy)},
          {"method", method_name(rep.method)},
          {"strategy", strategy_name(rep.strategy)},
          {"local_every", rep.local_every},
          {"global_every", rep.global_every},
          {"actor_total", rep.actor_total},
          {"warnings", rep.warnings},
          {"runs", runs},
          {"all_ok", rep.all_ok}};
}

std::string dsim_table(const DsimReport& rep) {
  std::ostringstream out;
  out << kv_table({
      {"nodes", std::to_string(rep.n_nodes)},
      {"policy", std::string(policy_name(rep.policy))},
      {"method", std::string(method_name(rep.method))},
      {"strategy", std::string(strategy_name(rep.strategy))},
      {"local every", std::to_string(rep.local_every)},
      {"global every", std::to_string(rep.global_every)},
      {"actors", std::to_string(rep.actor_total)},
  });
  for (const std::string& w : rep.warnings) out << "warning: " << w << '\n';
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"mode", "local", "global", "collected", "detected", "residual",
                  "surviving", "event_ops", "gc_ops", "overhead", "checks"});
  for (const ModeRun& r : rep.runs) {
    const bool ok = r.subsumption_held && r.detection_matched;
    rows.push_back({std::string(mode_name(r.mode)), std::to_string(r.local_cycles),
                    std::to_string(r.global_cycles), std::to_string(r.collected),
                    std::to_string(r.detected), std::to_string(r.residual_garbage),
                    std::to_string(r.surviving), std::to_string(r.event_ops),
                    std::to_string(r.gc_ops), render(r.overhead),
                    ok ? "ok" : "FAIL"});
  }
  out << render_columns(rows);
  out << "all checks: " << (rep.all_ok ? "ok" : "FAIL") << '\n';
  return out.str();
}

std::string render_columns(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return "";
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size());
    for (std::size_t i = 0; i < row.size(); ++i)
      widths[i] = std::max(widths[i], row[i].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << row[i];
      if (i + 1 < row.size()) out << std::string(widths[i] - row[i].size() + 2, ' ');
    }
    out << '\n';
  }
  return out.str();
}

std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace agc
