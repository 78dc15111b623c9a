#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace agc {

using ActorId = std::uint64_t;
using NodeId = std::uint64_t;

using ActorEdge = std::pair<ActorId, ActorId>;
using NodeEdge = std::pair<NodeId, NodeId>;

/*
 * Directed actor reference graph.
 *
 * An edge (a, b) means a holds b's mail-queue address (b is an acquaintance
 * of a). Roots are actors designated always useful; unblocked actors have at
 * least one runnable behavior. Addresses contained in pending or in-transit
 * messages count as references, and an actor with a pending message is
 * modeled as unblocked, so the graph carries no separate message records.
 *
 * All four vectors are sorted and duplicate-free. Use the mutators below, or
 * call sort_unique() after bulk edits. Values are plain data: copy freely,
 * share const references across threads.
 */
struct ActorGraph {
  std::vector<ActorId> actors;
  std::vector<ActorEdge> references;
  std::vector<ActorId> roots;
  std::vector<ActorId> unblocked;

  bool operator==(const ActorGraph&) const = default;

  bool has_actor(ActorId a) const;
  bool has_reference(ActorId src, ActorId dst) const;
  bool is_root(ActorId a) const;
  bool is_unblocked(ActorId a) const;

  void add_actor(ActorId a);
  void add_root(ActorId a);  // also marks a unblocked; roots are never blocked
  bool add_reference(ActorId src, ActorId dst);
  bool drop_reference(ActorId src, ActorId dst);
  void set_unblocked(ActorId a, bool value);

  // Removes a together with its flags and every incident reference.
  void remove_actor(ActorId a);

  void sort_unique();
};

/*
 * Passive reference graph: plain objects, edges, and passive roots.
 * A node is live exactly when it is forward-reachable from a root.
 */
struct PassiveGraph {
  std::vector<NodeId> nodes;
  std::vector<NodeEdge> edges;
  std::vector<NodeId> roots;

  bool operator==(const PassiveGraph&) const = default;

  bool has_node(NodeId n) const;
  void sort_unique();
};

/*
 * Actor-to-node correspondence produced by a transformation.
 *
 * The dual-node construction maps each actor to a pair: an object node
 * (alpha) and a mail-queue node (mu). Vertex-preserving transformations map
 * each actor to a single node, stored with alpha == mu. The map is total
 * over the source actors, injective, and covers every node of the output
 * graph.
 */
struct NodeMap {
  bool paired = false;
  std::vector<ActorId> actors;  // sorted; parallel to alpha/mu
  std::vector<NodeId> alpha;
  std::vector<NodeId> mu;

  bool operator==(const NodeMap&) const = default;

  NodeId alpha_of(ActorId a) const;
  NodeId mu_of(ActorId a) const;
};

// Returns an empty list iff all invariants hold; each entry names the
// offending element (violations are data, not failures).
std::vector<std::string> validate(const ActorGraph& g);
std::vector<std::string> validate(const PassiveGraph& p);
std::vector<std::string> validate(const NodeMap& map, const ActorGraph& g,
                                  const PassiveGraph& p);

}  // namespace agc
