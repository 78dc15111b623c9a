#pragma once

#include <optional>
#include <string_view>

#include "agc/graph.hpp"
#include "agc/ratio.hpp"

namespace agc {

// Construction used to turn an actor graph into a passive reference graph
// whose plain root reachability decides which actors to keep.
//
//   dual_node  every actor becomes an object/queue node pair ("va" on the
//              command line); the actor's fate follows its object node.
//   direct     keeps the vertex set; every actor reachable out of an
//              unblocked or root actor gains a back pointer straight to it.
//   indirect   keeps the vertex set; each edge out of a potentially active
//              actor is mirrored in reverse, giving a counter-directional
//              path instead of a single jump.
enum class Method { dual_node, direct, indirect };

std::string_view method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

// Edge reading used by the dual-node construction for a reference (a,b):
// object(a)->queue(b) plus the inverse queue(b)->object(a). An alternative
// queue(a)->queue(b) reading (which would push edge counts toward 3|E|) is
// not implemented; reports name the active reading so output is attributable.
inline constexpr std::string_view kDualEdgeReading = "object_to_queue_and_back";

struct TransformStats {
  std::size_t input_nodes = 0;
  std::size_t input_edges = 0;
  std::size_t output_nodes = 0;
  std::size_t output_edges = 0;
  Ratio node_ratio;  // output_nodes / input_nodes
  Ratio edge_ratio;  // output_edges / input_edges
  // Reachability traversals performed. The dual-node rewrite needs none;
  // direct runs one per unblocked/root actor; indirect runs exactly one.
  std::size_t traversal_passes = 0;

  friend bool operator==(const TransformStats&, const TransformStats&) = default;
};

struct TransformResult {
  PassiveGraph graph;
  NodeMap map;
  TransformStats stats;

  friend bool operator==(const TransformResult&, const TransformResult&) = default;
};

// Object node 2a and queue node 2a+1 per actor a, with edges
//   object(a) -> queue(a)                      for every actor
//   queue(a)  -> object(a)                     for every unblocked actor
//   object(a) -> queue(b), queue(b) -> object(a)   for every reference (a,b)
// and roots {queue(r)}. On self-reference-free input the edge count is
// exactly |V| + |U| + 2|E|; a self-reference collapses against the
// per-actor edges above (the edge list is a set), once always and once
// more when the actor is unblocked.
TransformResult transform_dual_node(const ActorGraph& g);

// Vertex-preserving. For every unblocked or root actor u, each actor
// reachable from u over at least one edge gains a back pointer to u; u
// itself gains one only when a cycle leads back to it. One traversal per
// such u.
TransformResult transform_direct_backpointers(const ActorGraph& g);

// Vertex-preserving. Adds the reverse of every edge whose source is
// unblocked, a root, or reachable from one. A single traversal finds the
// eligible sources.
TransformResult transform_indirect_backpointers(const ActorGraph& g);

TransformResult transform(const ActorGraph& g, Method m);

}  // namespace agc
