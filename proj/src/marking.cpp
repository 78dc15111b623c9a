#include "agc/marking.hpp"

#include <algorithm>
#include <stdexcept>

#include "agc/detail/csr.hpp"
#include "agc/detail/sorted.hpp"

namespace agc {

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::two_scan:
      return "two_scan";
    case Strategy::one_scan:
      return "one_scan";
  }
  throw std::logic_error("unhandled strategy");
}

std::optional<Strategy> strategy_from_name(std::string_view name) {
  if (name == "two_scan") return Strategy::two_scan;
  if (name == "one_scan") return Strategy::one_scan;
  return std::nullopt;
}

namespace {

// Traversal core shared by both strategies. try_mark(i) must return true
// the first time node index i is marked and false afterwards; the mark
// storage itself belongs to the caller. Returns node visits plus edge
// traversals.
template <typename TryMark>
std::size_t traverse(const PassiveGraph& p, Frontier f, TryMark try_mark) {
  detail::Csr fwd = detail::csr_forward(p.nodes, p.edges);
  std::vector<std::uint32_t> frontier;
  frontier.reserve(p.roots.size());
  for (NodeId r : p.roots) {
    auto ri = static_cast<std::uint32_t>(detail::index_of(p.nodes, r));
    if (try_mark(ri)) frontier.push_back(ri);
  }
  std::size_t ops = 0;
  std::size_t head = 0;
  while (f == Frontier::fifo ? head < frontier.size() : !frontier.empty()) {
    std::uint32_t x;
    if (f == Frontier::fifo) {
      x = frontier[head++];
    } else {
      x = frontier.back();
      frontier.pop_back();
    }
    ++ops;  // node visit
    for (std::uint32_t t : fwd.row(x)) {
      ++ops;  // edge traversal
      if (try_mark(t)) frontier.push_back(t);
    }
  }
  return ops;
}

}  // namespace

MarkResult mark_two_scan(const PassiveGraph& p, Frontier f) {
  std::vector<char> provisional(p.nodes.size(), 0);
  MarkResult res;
  res.ops = traverse(p, f, [&](std::uint32_t i) {
    if (provisional[i]) return false;
    provisional[i] = 1;
    return true;
  });

  // Finalize pass over every node; unmarked ones are the sweep's take.
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    ++res.ops;
    if (provisional[i]) res.marked.push_back(p.nodes[i]);
  }
  res.scans = 2;
  return res;
}

MarkResult mark_one_scan(const PassiveGraph& p, Frontier f) {
  EpochMarker marker;
  return marker.mark(p, f);
}

MarkResult EpochMarker::mark(const PassiveGraph& p, Frontier f) {
  ++epoch_;
  if (stamp_.size() < p.nodes.size()) stamp_.resize(p.nodes.size(), 0);

  MarkResult res;
  res.ops = traverse(p, f, [&](std::uint32_t i) {
    if (stamp_[i] == epoch_) return false;
    stamp_[i] = epoch_;
    res.marked.push_back(p.nodes[i]);
    return true;
  });
  detail::sort_unique(res.marked);
  res.scans = 1;
  return res;
}

CollectResult collect(const ActorGraph& g, Method method, Strategy strategy, Frontier f) {
  CollectResult res;
  res.transform = transform(g, method);
  res.mark = strategy == Strategy::two_scan ? mark_two_scan(res.transform.graph, f)
                                            : mark_one_scan(res.transform.graph, f);

  const NodeMap& map = res.transform.map;
  for (std::size_t i = 0; i < map.actors.size(); ++i) {
    if (detail::contains(res.mark.marked, map.alpha[i]))
      res.liveness.live.push_back(map.actors[i]);
    else
      res.liveness.garbage.push_back(map.actors[i]);
  }
  res.liveness.potentially_active = potentially_active(g);
  return res;
}

}  // namespace agc
