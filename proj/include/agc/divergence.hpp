#pragma once

#include <string_view>
#include <vector>

#include "agc/marking.hpp"

namespace agc {

// How a dual-node verdict can differ from the semantic oracle.
//
//   blocked_receiver     blocked actor with no outgoing references, held
//                        live by the oracle through an incoming reference,
//                        but unreachable as an object node: kept by the
//                        oracle, dropped by dual_node.
//   inactive_referencer  actor outside the potentially-active set whose
//                        outgoing reference makes its object node reachable
//                        through the target's queue: dropped by the oracle,
//                        kept by dual_node.
enum class DivergenceClass { none, blocked_receiver, inactive_referencer, unclassified };

std::string_view divergence_class_name(DivergenceClass c);

struct DivergenceRow {
  ActorId actor = 0;
  bool oracle_live = false;
  bool direct_live = false;
  bool indirect_live = false;
  bool dual_live = false;
  DivergenceClass dual_class = DivergenceClass::none;

  friend bool operator==(const DivergenceRow&, const DivergenceRow&) = default;
};

struct DivergenceReport {
  std::vector<DivergenceRow> rows;  // one per actor, sorted by id
  // direct and indirect agree with the oracle on every actor
  bool back_pointer_methods_agree = false;
  std::size_t dual_divergences = 0;
};

// Per-actor agreement matrix between the semantic oracle and the three
// transform-then-mark pipelines.
DivergenceReport divergence_report(const ActorGraph& g, Strategy strategy = Strategy::two_scan);

}  // namespace agc
