#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "agc/marking.hpp"

namespace agc {

// How actors are spread across simulated computing nodes.
//
//   locality         depth-first order from the roots, cut into contiguous
//                    runs, so connected regions (whole subtrees on tree
//                    shapes) land on one node
//   round_robin_bfs  breadth-first order from the roots, dealt out
//                    cyclically, which scatters neighbors across nodes
enum class Policy { locality, round_robin_bfs };

std::string_view policy_name(Policy p);
std::optional<Policy> policy_from_name(std::string_view name);

struct PartitionedGraph {
  // Nonempty partitions, ascending node id. Each subgraph keeps only
  // intra-partition references; flags are inherited from the whole graph.
  std::vector<std::pair<std::uint32_t, ActorGraph>> partitions;
  std::vector<ActorEdge> cross_edges;  // references spanning partitions, sorted
  std::vector<std::pair<ActorId, std::uint32_t>> placement;  // sorted by actor
  std::vector<std::string> warnings;
};

// Node an actor lives on; throws std::out_of_range for unplaced actors.
std::uint32_t node_of(const PartitionedGraph& pg, ActorId a);

// Splits g over n_nodes by the given policy. Deterministic. When there are
// fewer actors than nodes the result has fewer, nonempty partitions and a
// warning says so.
PartitionedGraph partition(const ActorGraph& g, std::uint32_t n_nodes, Policy policy);

// Splits g by a fixed actor-to-node assignment; placement entries for
// actors absent from g are carried along unused. Lets a whole trace be
// placed once and its snapshots partitioned consistently as actors come
// and go.
PartitionedGraph partition_by_placement(
    const ActorGraph& g, const std::vector<std::pair<ActorId, std::uint32_t>>& placement);

// The single-machine view: union of the partitions plus the cross edges.
ActorGraph reassemble(const PartitionedGraph& pg);

// One node's stand-alone view. Actors referenced from another node become
// extra roots (a remote holder may message them at any time). Targets of
// outgoing cross references appear as stand-in actors, rooted and
// unblocked, so paths running through remote actors still count.
ActorGraph local_view(const PartitionedGraph& pg, std::uint32_t node);

// Collects within one node's view; live/garbage are filtered back to the
// actors actually on that node. Never collects an actor a whole-graph
// collection would keep.
CollectResult local_collect(const PartitionedGraph& pg, std::uint32_t node, Method method,
                            Strategy strategy);

// Collects over the reassembled graph; equals collect() on the original.
CollectResult global_collect(const PartitionedGraph& pg, Method method, Strategy strategy);

}  // namespace agc
