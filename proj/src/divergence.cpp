#include "agc/divergence.hpp"

#include <stdexcept>

#include "agc/detail/sorted.hpp"

namespace agc {

std::string_view divergence_class_name(DivergenceClass c) {
  switch (c) {
    case DivergenceClass::none:
      return "none";
    case DivergenceClass::blocked_receiver:
      return "blocked_receiver";
    case DivergenceClass::inactive_referencer:
      return "inactive_referencer";
    case DivergenceClass::unclassified:
      return "unclassified";
  }
  throw std::logic_error("unhandled divergence class");
}

namespace {

DivergenceClass classify(const ActorGraph& g, ActorId a, bool oracle_live, bool dual_live,
                         const std::vector<ActorId>& oracle_live_set,
                         const std::vector<ActorId>& active) {
  if (oracle_live == dual_live) return DivergenceClass::none;
  if (oracle_live && !dual_live) {
    // Dropped object node despite a live holder: blocked, and silent in the
    // sense of having nothing to say (no outgoing references).
    bool has_out = false;
    for (const auto& [src, dst] : g.references) {
      if (src == a) {
        has_out = true;
        break;
      }
    }
    if (!g.is_unblocked(a) && !has_out) return DivergenceClass::blocked_receiver;
    return DivergenceClass::unclassified;
  }
  // Kept despite the oracle dropping it: inactive, but its reference into a
  // live actor pulls its object node in through that actor's queue.
  if (!detail::contains(active, a)) {
    for (const auto& [src, dst] : g.references) {
      if (src == a && detail::contains(oracle_live_set, dst)) return DivergenceClass::inactive_referencer;
    }
  }
  return DivergenceClass::unclassified;
}

}  // namespace

DivergenceReport divergence_report(const ActorGraph& g, Strategy strategy) {
  LivenessResult oracle = live_fixpoint(g);
  CollectResult direct = collect(g, Method::direct, strategy);
  CollectResult indirect = collect(g, Method::indirect, strategy);
  CollectResult dual = collect(g, Method::dual_node, strategy);

  DivergenceReport rep;
  rep.rows.reserve(g.actors.size());
  rep.back_pointer_methods_agree = true;
  for (ActorId a : g.actors) {
    DivergenceRow row;
    row.actor = a;
    row.oracle_live = detail::contains(oracle.live, a);
    row.direct_live = detail::contains(direct.liveness.live, a);
    row.indirect_live = detail::contains(indirect.liveness.live, a);
    row.dual_live = detail::contains(dual.liveness.live, a);
    row.dual_class =
        classify(g, a, row.oracle_live, row.dual_live, oracle.live, oracle.potentially_active);
    if (row.direct_live != row.oracle_live || row.indirect_live != row.oracle_live)
      rep.back_pointer_methods_agree = false;
    if (row.dual_class != DivergenceClass::none) ++rep.dual_divergences;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace agc
