#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "agc/graph.hpp"
#include "agc/liveness.hpp"
#include "agc/transform.hpp"

namespace agc {

enum class Strategy { two_scan, one_scan };

std::string_view strategy_name(Strategy s);
std::optional<Strategy> strategy_from_name(std::string_view name);

// Frontier discipline for the marking traversal. Either order yields the
// same marked set; tests exercise both.
enum class Frontier { fifo, lifo };

struct MarkResult {
  std::vector<NodeId> marked;  // sorted
  // Node visits plus edge traversals. two_scan spends at most
  // 2*(nodes + edges), one_scan at most nodes + edges.
  std::size_t ops = 0;
  std::size_t scans = 0;  // full-graph passes, counting the marking traversal

  friend bool operator==(const MarkResult&, const MarkResult&) = default;
};

// Root-seeded traversal setting a provisional mark, then a second full pass
// that finalizes marks and counts the unmarked remainder. scans == 2.
MarkResult mark_two_scan(const PassiveGraph& p, Frontier f = Frontier::fifo);

// Single traversal with no finishing pass. scans == 1.
MarkResult mark_one_scan(const PassiveGraph& p, Frontier f = Frontier::fifo);

// Marker with a persistent per-slot stamp. Each call opens a fresh epoch,
// so stale marks from earlier collections never need clearing and repeated
// collections stay at one scan each. A single instance may be reused across
// graphs; only the current call's marks are ever read.
class EpochMarker {
 public:
  MarkResult mark(const PassiveGraph& p, Frontier f = Frontier::fifo);

 private:
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
};

struct CollectResult {
  TransformResult transform;
  MarkResult mark;
  LivenessResult liveness;

  friend bool operator==(const CollectResult&, const CollectResult&) = default;
};

// Transform, mark, then map marks back onto actors: under dual_node an
// actor survives iff its object node is marked; under the vertex-preserving
// methods iff its own node is. liveness.potentially_active is filled from
// the graph itself so the result is self-contained.
CollectResult collect(const ActorGraph& g, Method method, Strategy strategy,
                      Frontier f = Frontier::fifo);

}  // namespace agc
