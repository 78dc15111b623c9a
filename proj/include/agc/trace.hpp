#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "agc/graph.hpp"
#include "agc/marking.hpp"

namespace agc {

enum class EventKind { spawn, add_ref, drop_ref, send, block, unblock, terminate };

std::string_view event_kind_name(EventKind k);
std::optional<EventKind> event_kind_from_name(std::string_view name);

// One graph mutation. Meaning of a/b by kind:
//   spawn      a = parent, b = fresh child id; the child starts unblocked
//              and the parent holds a reference to it
//   add_ref    a = holder, b = target; edge a->b appears
//   drop_ref   a = holder, b = target; edge a->b goes away
//   send       a = sender (must be unblocked and hold a reference to b),
//              b = receiver; the receiver becomes unblocked
//   block      a = subject, b unused; no effect on roots
//   unblock    a = subject, b unused
//   terminate  a = subject (never a root), b unused; drops all of a's
//              outgoing references and blocks it
struct MutationEvent {
  EventKind kind = EventKind::spawn;
  ActorId a = 0;
  ActorId b = 0;

  friend bool operator==(const MutationEvent&, const MutationEvent&) = default;
};

struct MutationTrace {
  ActorGraph initial;
  std::vector<MutationEvent> events;
  std::size_t expected_actor_total = 0;  // distinct actors over the whole trace

  friend bool operator==(const MutationTrace&, const MutationTrace&) = default;
};

struct ReplayError : std::runtime_error {
  std::size_t step;  // 1-based event position; 0 for trace-level problems
  ReplayError(std::size_t step, const std::string& msg);
};

// Applies one event in place, throwing ReplayError (with the given step) on
// anything invalid. Returns the event's cost: 2 for spawn, 1 + dropped
// out-edges for terminate, 1 otherwise.
std::size_t apply_event(ActorGraph& g, const MutationEvent& ev, std::size_t step);

// Last event step (1-based) naming each actor in any role; actors never
// named are absent. Collectors consult this so a premature removal fails
// loudly instead of corrupting a later event.
std::map<ActorId, std::size_t> last_named_steps(const MutationTrace& trace);

struct GcCycleRecord {
  std::size_t at_event = 0;  // events applied when the cycle ran
  std::size_t live = 0;
  std::vector<ActorId> collected;  // removed this cycle, sorted
  std::size_t cumulative_collected = 0;
  std::size_t surviving = 0;         // actors left after removal
  std::size_t not_yet_spawned = 0;   // remainder of the trace's actor budget
  std::size_t gc_ops = 0;            // transform output size + mark ops + removals
};

struct ReplayReport {
  std::size_t gc_every = 0;
  Method method = Method::direct;
  Strategy strategy = Strategy::two_scan;
  std::size_t events_applied = 0;
  std::size_t event_ops = 0;
  std::size_t gc_ops = 0;  // summed over cycles
  std::vector<GcCycleRecord> cycles;
  std::vector<ActorId> collected_total;  // sorted, distinct
  std::size_t distinct_actors = 0;       // actors that ever existed
  ActorGraph final_graph;
};

// Replays the trace, collecting after every gc_every applied events
// (gc_every == 0 never collects). Each cycle removes the garbage actors
// reported by collect() from the evolving graph. Throws ReplayError on an
// invalid event, on a collected actor still named by a later event, on a
// conservation mismatch (collected + surviving + unspawned must equal the
// trace's actor total at every cycle), and on a final actor-total mismatch.
ReplayReport replay(const MutationTrace& trace, std::size_t gc_every, Method method,
                    Strategy strategy);

// Union of the trace over time: every actor that ever exists, every edge
// ever present, roots from the initial graph, spawned actors unblocked.
// Used when a whole trace must be placed before it runs.
ActorGraph trace_topology(const MutationTrace& trace);

// Text form: the initial graph in the graph file format, then
//   expected_actors <count>
//   events
//   <step> <kind> <a> [<b>]
// with steps numbered from 1 in order.
std::string serialize_trace(const MutationTrace& trace);
MutationTrace parse_trace(std::string_view text);

}  // namespace agc
