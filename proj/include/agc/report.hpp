#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "agc/divergence.hpp"
#include "agc/dsim.hpp"
#include "agc/ratio.hpp"
#include "agc/trace.hpp"

namespace agc {

void to_json(nlohmann::json& j, const Ratio& r);
void to_json(nlohmann::json& j, const TransformStats& s);

// One structured record per command run or bench cell. Counters are exact
// and every ratio keeps its numerator and denominator, so two runs with the
// same inputs produce byte-identical reports.
struct GcReport {
  std::uint64_t seed = 0;
  std::string workload;  // label; empty outside trace-driven runs
  std::string method;
  std::string strategy;
  std::size_t actors = 0;
  std::size_t references = 0;
  std::size_t roots = 0;
  std::size_t unblocked = 0;
  TransformStats transform;
  std::size_t mark_ops = 0;
  std::size_t mark_scans = 0;
  std::size_t live = 0;
  std::size_t garbage = 0;
  std::size_t collected = 0;
  std::size_t event_ops = 0;
  std::size_t gc_ops = 0;
  Ratio overhead;  // ops with collection over ops without
  std::size_t dual_divergences = 0;
  bool methods_agree = true;
};

void to_json(nlohmann::json& j, const GcReport& r);
std::string report_table(const GcReport& r);

nlohmann::json graph_stats_json(const ActorGraph& g);
nlohmann::json oracle_json(const ActorGraph& g, const LivenessResult& res);

// Stats plus edge accounting for the dual-node construction: the exact
// pair-rule total |V| + |U| + 2|E|, collisions eaten by edge-set semantics
// on self-references, and the distance from the approximate "three edges
// per reference" rule of thumb.
nlohmann::json transform_report_json(const ActorGraph& g, const TransformResult& t, Method m);
std::string transform_table(const ActorGraph& g, const TransformResult& t, Method m);

nlohmann::json collect_json(const ActorGraph& g, Method m, Strategy s, const CollectResult& c);

nlohmann::json divergence_json(const DivergenceReport& rep);
std::string divergence_table(const DivergenceReport& rep);

nlohmann::json replay_json(const ReplayReport& rep);
std::string replay_table(const ReplayReport& rep);

nlohmann::json dsim_json(const DsimReport& rep);
std::string dsim_table(const DsimReport& rep);

// Aligned plain-text table; first row is the header.
std::string render_columns(const std::vector<std::vector<std::string>>& rows);

// dump with sorted keys, two-space indent, trailing newline
std::string json_text(const nlohmann::json& j);

}  // namespace agc
