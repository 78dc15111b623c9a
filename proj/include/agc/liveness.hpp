#pragma once

#include <vector>

#include "agc/graph.hpp"

namespace agc {

struct LivenessResult {
  std::vector<ActorId> live;
  std::vector<ActorId> garbage;            // actors \ live
  std::vector<ActorId> potentially_active;

  bool operator==(const LivenessResult&) const = default;
};

// Forward reachability closure of (unblocked ∪ roots): the actors that can
// be caused to run by some message delivery.
std::vector<ActorId> potentially_active(const ActorGraph& g);

enum class WorklistOrder { fifo, lifo };

/*
 * Ground-truth liveness as a least fixpoint. live is the least set L with
 *
 *   (r)  roots ⊆ L,
 *   (i)  a ∈ L and (a, b) ∈ E  implies  b ∈ L,
 *   (ii) a potentially active, (a, b) ∈ E and b ∈ L  implies  a ∈ L.
 *
 * The worklist order must not affect the result (set semantics); the order
 * parameter exists so tests can run both disciplines.
 */
LivenessResult live_fixpoint(const ActorGraph& g, WorklistOrder order = WorklistOrder::fifo);

/*
 * The same live set computed by an unrelated algorithm, used as a mutual
 * oracle for live_fixpoint: start from the forward reach set of the roots,
 * then repeatedly absorb the reach set of any unblocked or root actor whose
 * reach set meets the current set, until stable. Shares no traversal code
 * with live_fixpoint.
 */
LivenessResult live_reachset(const ActorGraph& g);

}  // namespace agc
