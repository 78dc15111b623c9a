#include "agc/partition.hpp"

#include <algorithm>
#include <stdexcept>

#include "agc/detail/csr.hpp"
#include "agc/detail/sorted.hpp"

namespace agc {

std::string_view policy_name(Policy p) {
  switch (p) {
    case Policy::locality:
      return "locality";
    case Policy::round_robin_bfs:
      return "round_robin_bfs";
  }
  throw std::logic_error("unhandled policy");
}

std::optional<Policy> policy_from_name(std::string_view name) {
  if (name == "locality") return Policy::locality;
  if (name == "round_robin_bfs" || name == "bfs") return Policy::round_robin_bfs;
  return std::nullopt;
}

std::uint32_t node_of(const PartitionedGraph& pg, ActorId a) {
  auto it = std::lower_bound(pg.placement.begin(), pg.placement.end(), a,
                             [](const auto& entry, ActorId key) { return entry.first < key; });
  if (it == pg.placement.end() || it->first != a)
    throw std::out_of_range("actor " + std::to_string(a) + " not placed");
  return it->second;
}

namespace {

// Traversal order over actor indices: roots first (ascending), then any
// actor not reachable from them, each in ascending id order.
std::vector<std::uint32_t> visit_order(const ActorGraph& g, bool depth_first) {
  detail::Csr fwd = detail::csr_forward(g.actors, g.references);
  std::vector<char> seen(g.actors.size(), 0);
  std::vector<std::uint32_t> order;
  order.reserve(g.actors.size());

  auto visit_from = [&](std::uint32_t start) {
    if (seen[start]) return;
    seen[start] = 1;
    if (depth_first) {
      // preorder, children in ascending id order
      std::vector<std::pair<std::uint32_t, const std::uint32_t*>> stack;
      order.push_back(start);
      stack.emplace_back(start, fwd.row(start).begin());
      while (!stack.empty()) {
        auto& [v, cursor] = stack.back();
        if (cursor == fwd.row(v).end()) {
          stack.pop_back();
          continue;
        }
        std::uint32_t child = *cursor++;
        if (!seen[child]) {
          seen[child] = 1;
          order.push_back(child);
          stack.emplace_back(child, fwd.row(child).begin());
        }
      }
    } else {
      std::size_t head = order.size();
      order.push_back(start);
      while (head < order.size()) {
        for (std::uint32_t t : fwd.row(order[head])) {
          if (!seen[t]) {
            seen[t] = 1;
            order.push_back(t);
          }
        }
        ++head;
      }
    }
  };

  for (ActorId r : g.roots) visit_from(static_cast<std::uint32_t>(detail::index_of(g.actors, r)));
  for (std::uint32_t i = 0; i < g.actors.size(); ++i) visit_from(i);
  return order;
}

}  // namespace

PartitionedGraph partition(const ActorGraph& g, std::uint32_t n_nodes, Policy policy) {
  if (n_nodes < 1) throw std::invalid_argument("at least one node required");

  std::vector<std::pair<ActorId, std::uint32_t>> placement;
  placement.reserve(g.actors.size());

  std::vector<std::uint32_t> order = visit_order(g, policy == Policy::locality);
  if (policy == Policy::locality) {
    std::size_t chunk = (g.actors.size() + n_nodes - 1) / n_nodes;  // ceil
    for (std::size_t i = 0; i < order.size(); ++i)
      placement.emplace_back(g.actors[order[i]], static_cast<std::uint32_t>(i / chunk));
  } else {
    for (std::size_t i = 0; i < order.size(); ++i)
      placement.emplace_back(g.actors[order[i]], static_cast<std::uint32_t>(i % n_nodes));
  }
  std::sort(placement.begin(), placement.end());

  PartitionedGraph pg = partition_by_placement(g, placement);
  if (n_nodes > g.actors.size())
    pg.warnings.push_back("requested " + std::to_string(n_nodes) + " nodes for " +
                          std::to_string(g.actors.size()) + " actors; using " +
                          std::to_string(pg.partitions.size()) + " partitions");
  return pg;
}

PartitionedGraph partition_by_placement(
    const ActorGraph& g, const std::vector<std::pair<ActorId, std::uint32_t>>& placement) {
  PartitionedGraph pg;
  pg.placement = placement;

  auto node_for = [&](ActorId a) { return node_of(pg, a); };

  auto part_of = [&](std::uint32_t node) -> ActorGraph& {
    for (auto& [id, sub] : pg.partitions) {
      if (id == node) return sub;
    }
    auto pos = std::lower_bound(pg.partitions.begin(), pg.partitions.end(), node,
                                [](const auto& p, std::uint32_t key) { return p.first < key; });
    return pg.partitions.insert(pos, {node, ActorGraph{}})->second;
  };

  for (ActorId a : g.actors) {
    ActorGraph& sub = part_of(node_for(a));
    sub.add_actor(a);
    if (g.is_root(a)) sub.add_root(a);
    if (g.is_unblocked(a)) sub.set_unblocked(a, true);
  }
  for (const auto& [src, dst] : g.references) {
    std::uint32_t s = node_for(src);
    if (s == node_for(dst))
      part_of(s).add_reference(src, dst);
    else
      pg.cross_edges.emplace_back(src, dst);
  }
  detail::sort_unique(pg.cross_edges);
  return pg;
}

ActorGraph reassemble(const PartitionedGraph& pg) {
  ActorGraph g;
  for (const auto& [id, sub] : pg.partitions) {
    (void)id;
    g.actors.insert(g.actors.end(), sub.actors.begin(), sub.actors.end());
    g.references.insert(g.references.end(), sub.references.begin(), sub.references.end());
    g.roots.insert(g.roots.end(), sub.roots.begin(), sub.roots.end());
    g.unblocked.insert(g.unblocked.end(), sub.unblocked.begin(), sub.unblocked.end());
  }
  g.references.insert(g.references.end(), pg.cross_edges.begin(), pg.cross_edges.end());
  g.sort_unique();
  return g;
}

ActorGraph local_view(const PartitionedGraph& pg, std::uint32_t node) {
  const ActorGraph* base = nullptr;
  for (const auto& [id, sub] : pg.partitions) {
    if (id == node) base = &sub;
  }
  if (!base) throw std::out_of_range("no partition " + std::to_string(node));

  ActorGraph view = *base;
  for (const auto& [src, dst] : pg.cross_edges) {
    if (node_of(pg, src) == node) {
      // outgoing: keep the reference, stand in for the remote target
      view.add_root(dst);
      view.add_reference(src, dst);
    } else if (node_of(pg, dst) == node) {
      // incoming: the remote holder may message dst at any time
      view.add_root(dst);
    }
  }
  return view;
}

CollectResult local_collect(const PartitionedGraph& pg, std::uint32_t node, Method method,
                            Strategy strategy) {
  const ActorGraph* base = nullptr;
  for (const auto& [id, sub] : pg.partitions) {
    if (id == node) base = &sub;
  }
  if (!base) throw std::out_of_range("no partition " + std::to_string(node));

  CollectResult res = collect(local_view(pg, node), method, strategy);
  auto filter = [&](std::vector<ActorId>& ids) {
    std::erase_if(ids, [&](ActorId a) { return !base->has_actor(a); });
  };
  filter(res.liveness.live);
  filter(res.liveness.garbage);
  filter(res.liveness.potentially_active);
  return res;
}

CollectResult global_collect(const PartitionedGraph& pg, Method method, Strategy strategy) {
  return collect(reassemble(pg), method, strategy);
}

}  // namespace agc
