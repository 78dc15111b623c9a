#pragma once

#include "agc/partition.hpp"
#include "agc/ratio.hpp"
#include "agc/trace.hpp"

namespace agc {

// Collection mechanisms compared by the simulator.
//
//   nogc  nothing is ever collected; the baseline every ratio is against
//   gdp   detection only: local collections run and their results are
//         recorded, but nothing is removed
//   lgc   per-node local collection on the local period
//   cdgc  lgc plus a whole-graph collection on the global period
enum class GcMode { nogc, gdp, lgc, cdgc };

std::string_view mode_name(GcMode m);
std::optional<GcMode> mode_from_name(std::string_view name);

struct ModeRun {
  GcMode mode = GcMode::nogc;
  std::size_t local_cycles = 0;
  std::size_t global_cycles = 0;
  std::size_t collected = 0;         // actors removed over the run
  std::size_t detected = 0;          // distinct actors ever seen as garbage
  std::size_t residual_garbage = 0;  // garbage left in the final graph
  std::size_t surviving = 0;         // actors left in the final graph
  std::size_t event_ops = 0;
  std::size_t gc_ops = 0;
  Ratio overhead;  // (event_ops + gc_ops) over the nogc row's total
  // Every cycle satisfied: locally collected set within the whole-graph
  // collectible set within the semantic garbage set.
  bool subsumption_held = true;
  // gdp only: per-cycle detected live sets equal the lgc run's.
  bool detection_matched = true;
};

struct DsimReport {
  std::uint32_t n_nodes = 1;
  Policy policy = Policy::locality;
  Method method = Method::direct;
  Strategy strategy = Strategy::one_scan;
  std::size_t local_every = 0;
  std::size_t global_every = 0;
  std::size_t actor_total = 0;
  std::vector<std::string> warnings;  // from placement
  std::vector<ModeRun> runs;          // nogc, gdp, lgc, cdgc
  bool all_ok = true;
};

// Replays the trace once per mechanism against a placement fixed up front
// from the whole trace's topology. Local cycles fire every local_every
// events, global cycles every global_every events (0 disables a layer);
// runs with a local layer add one final local cycle after the last event,
// and cdgc adds a final global cycle, so a finished trace ends clean.
// Safety and subsumption are checked at every cycle and reported, not
// hidden; a premature removal still throws ReplayError.
DsimReport run_modes(const MutationTrace& trace, std::uint32_t n_nodes, Policy policy,
                     std::size_t local_every, std::size_t global_every,
                     Method method = Method::direct, Strategy strategy = Strategy::one_scan);

}  // namespace agc
