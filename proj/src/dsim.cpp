#include "agc/dsim.hpp"

#include <stdexcept>

#include "agc/detail/sorted.hpp"

namespace agc {

std::string_view mode_name(GcMode m) {
  switch (m) {
    case GcMode::nogc:
      return "nogc";
    case GcMode::gdp:
      return "gdp";
    case GcMode::lgc:
      return "lgc";
    case GcMode::cdgc:
      return "cdgc";
  }
  throw std::logic_error("unhandled mode");
}

std::optional<GcMode> mode_from_name(std::string_view name) {
  if (name == "nogc") return GcMode::nogc;
  if (name == "gdp") return GcMode::gdp;
  if (name == "lgc") return GcMode::lgc;
  if (name == "cdgc") return GcMode::cdgc;
  return std::nullopt;
}

namespace {

struct ModeOutcome {
  ModeRun run;
  // Per local cycle: live actors detected, union across nodes. Used to hold
  // the detection-only mode against the collecting one.
  std::vector<std::vector<ActorId>> cycle_live;
  ActorGraph final_graph;
};

struct Simulator {
  const MutationTrace& trace;
  const std::vector<std::pair<ActorId, std::uint32_t>>& placement;
  const std::map<ActorId, std::size_t>& last_named;
  std::size_t local_every;
  std::size_t global_every;
  Method method;
  Strategy strategy;

  ModeOutcome run(GcMode mode) const {
    const bool locals = mode != GcMode::nogc && local_every != 0;
    const bool removes = mode == GcMode::lgc || mode == GcMode::cdgc;
    const bool globals = mode == GcMode::cdgc && global_every != 0;

    ModeOutcome out;
    out.run.mode = mode;

    ActorGraph g = trace.initial;
    std::vector<ActorId> ever = g.actors;
    std::vector<ActorId> detected;
    std::vector<ActorId> collected_total;

    auto remove_garbage = [&](const std::vector<ActorId>& garbage, std::size_t at_event) {
      for (ActorId a : garbage) {
        auto it = last_named.find(a);
        if (it != last_named.end() && it->second > at_event)
          throw ReplayError(at_event, "actor " + std::to_string(a) +
                                          " collected but still named at event " +
                                          std::to_string(it->second));
        g.remove_actor(a);
        detail::insert_sorted(collected_total, a);
        ++out.run.gc_ops;
      }
    };

    // Every node collects against the same snapshot (the collections are
    // independent), then the union of their garbage goes away at once.
    auto local_cycle = [&](std::size_t at_event) {
      PartitionedGraph pg = partition_by_placement(g, placement);
      CollectResult whole = collect(g, method, strategy);
      LivenessResult oracle = live_fixpoint(g);

      std::vector<ActorId> live_union;
      std::vector<ActorId> garbage_union;
      for (const auto& [node, sub] : pg.partitions) {
        (void)sub;
        CollectResult local = local_collect(pg, node, method, strategy);
        for (ActorId a : local.liveness.live) detail::insert_sorted(live_union, a);
        for (ActorId a : local.liveness.garbage) detail::insert_sorted(garbage_union, a);
        out.run.gc_ops += local.transform.stats.output_nodes +
                          local.transform.stats.output_edges + local.mark.ops;
      }
      for (ActorId a : garbage_union) {
        detail::insert_sorted(detected, a);
        if (!detail::contains(whole.liveness.garbage, a) || !detail::contains(oracle.garbage, a))
          out.run.subsumption_held = false;
      }
      for (ActorId a : whole.liveness.garbage) {
        if (!detail::contains(oracle.garbage, a)) out.run.subsumption_held = false;
      }
      out.cycle_live.push_back(std::move(live_union));
      ++out.run.local_cycles;
      if (removes) remove_garbage(garbage_union, at_event);
    };

    auto global_cycle = [&](std::size_t at_event) {
      CollectResult whole = collect(g, method, strategy);
      LivenessResult oracle = live_fixpoint(g);
      for (ActorId a : whole.liveness.garbage) {
        detail::insert_sorted(detected, a);
        if (!detail::contains(oracle.garbage, a)) out.run.subsumption_held = false;
      }
      out.run.gc_ops += whole.transform.stats.output_nodes + whole.transform.stats.output_edges +
                        whole.mark.ops;
      ++out.run.global_cycles;
      remove_garbage(whole.liveness.garbage, at_event);
    };

    std::size_t step = 0;
    for (const MutationEvent& ev : trace.events) {
      ++step;
      if (ev.kind == EventKind::spawn && detail::contains(ever, ev.b))
        throw ReplayError(step, "spawn reuses id " + std::to_string(ev.b));
      out.run.event_ops += apply_event(g, ev, step);
      if (ev.kind == EventKind::spawn) detail::insert_sorted(ever, ev.b);
      if (locals && step % local_every == 0) local_cycle(step);
      if (globals && step % global_every == 0) global_cycle(step);
    }
    // Finish clean: one more local pass, and for cdgc the closing global one.
    if (locals) local_cycle(step);
    if (globals) global_cycle(step);

    if (trace.expected_actor_total != ever.size())
      throw ReplayError(0, "trace declared " + std::to_string(trace.expected_actor_total) +
                               " actors but " + std::to_string(ever.size()) + " existed");

    out.run.collected = collected_total.size();
    out.run.detected = detected.size();
    out.run.surviving = g.actors.size();
    out.run.residual_garbage = live_fixpoint(g).garbage.size();
    out.final_graph = std::move(g);
    return out;
  }
};

}  // namespace

DsimReport run_modes(const MutationTrace& trace, std::uint32_t n_nodes, Policy policy,
                     std::size_t local_every, std::size_t global_every, Method method,
                     Strategy strategy) {
  DsimReport rep;
  rep.n_nodes = n_nodes;
  rep.policy = policy;
  rep.method = method;
  rep.strategy = strategy;
  rep.local_every = local_every;
  rep.global_every = global_every;

  ActorGraph topo = trace_topology(trace);
  rep.actor_total = topo.actors.size();
  PartitionedGraph seed = partition(topo, n_nodes, policy);
  rep.warnings = seed.warnings;

  std::map<ActorId, std::size_t> last_named = last_named_steps(trace);
  Simulator sim{trace, seed.placement, last_named, local_every, global_every, method, strategy};

  ModeOutcome nogc = sim.run(GcMode::nogc);
  ModeOutcome lgc = sim.run(GcMode::lgc);
  ModeOutcome gdp = sim.run(GcMode::gdp);
  ModeOutcome cdgc = sim.run(GcMode::cdgc);

  gdp.run.detection_matched = gdp.cycle_live == lgc.cycle_live;

  const std::size_t base = nogc.run.event_ops + nogc.run.gc_ops;
  for (ModeOutcome* out : {&nogc, &gdp, &lgc, &cdgc}) {
    out->run.overhead = Ratio{out->run.event_ops + out->run.gc_ops, base};
    rep.all_ok = rep.all_ok && out->run.subsumption_held && out->run.detection_matched;
  }
  if (cdgc.run.residual_garbage > lgc.run.residual_garbage) rep.all_ok = false;
  if (gdp.run.collected != 0) rep.all_ok = false;

  rep.runs = {nogc.run, gdp.run, lgc.run, cdgc.run};
  return rep;
}

}  // namespace agc
