#include "agc/transform.hpp"

#include <limits>
#include <stdexcept>

#include "agc/detail/csr.hpp"
#include "agc/detail/sorted.hpp"

namespace agc {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::dual_node:
      return "va";
    case Method::direct:
      return "direct";
    case Method::indirect:
      return "indirect";
  }
  throw std::logic_error("unhandled method");
}

std::optional<Method> method_from_name(std::string_view name) {
  if (name == "va") return Method::dual_node;
  if (name == "direct") return Method::direct;
  if (name == "indirect") return Method::indirect;
  return std::nullopt;
}

namespace {

TransformStats make_stats(const ActorGraph& g, const PassiveGraph& p, std::size_t passes) {
  TransformStats s;
  s.input_nodes = g.actors.size();
  s.input_edges = g.references.size();
  s.output_nodes = p.nodes.size();
  s.output_edges = p.edges.size();
  s.node_ratio = {s.output_nodes, s.input_nodes};
  s.edge_ratio = {s.output_edges, s.input_edges};
  s.traversal_passes = passes;
  return s;
}

NodeMap identity_map(const ActorGraph& g) {
  NodeMap m;
  m.paired = false;
  m.actors = g.actors;
  m.alpha.assign(g.actors.begin(), g.actors.end());
  m.mu = m.alpha;
  return m;
}

std::vector<ActorId> seed_actors(const ActorGraph& g) {
  std::vector<ActorId> seeds = g.unblocked;
  seeds.insert(seeds.end(), g.roots.begin(), g.roots.end());
  detail::sort_unique(seeds);
  return seeds;
}

}  // namespace

TransformResult transform_dual_node(const ActorGraph& g) {
  if (!g.actors.empty() && g.actors.back() > (std::numeric_limits<NodeId>::max() - 1) / 2)
    throw std::invalid_argument("actor id too large to pair into object/queue nodes");

  TransformResult r;
  r.map.paired = true;
  r.map.actors = g.actors;
  r.map.alpha.reserve(g.actors.size());
  r.map.mu.reserve(g.actors.size());

  PassiveGraph& p = r.graph;
  p.nodes.reserve(2 * g.actors.size());
  for (ActorId a : g.actors) {
    NodeId obj = 2 * a;
    NodeId queue = 2 * a + 1;
    r.map.alpha.push_back(obj);
    r.map.mu.push_back(queue);
    p.nodes.push_back(obj);
    p.nodes.push_back(queue);
    p.edges.emplace_back(obj, queue);
  }
  for (ActorId a : g.unblocked) p.edges.emplace_back(2 * a + 1, 2 * a);
  for (const auto& [a, b] : g.references) {
    p.edges.emplace_back(2 * a, 2 * b + 1);
    p.edges.emplace_back(2 * b + 1, 2 * a);
  }
  for (ActorId root : g.roots) p.roots.push_back(2 * root + 1);
  p.sort_unique();

  r.stats = make_stats(g, p, 0);
  return r;
}

TransformResult transform_direct_backpointers(const ActorGraph& g) {
  TransformResult r;
  r.map = identity_map(g);

  PassiveGraph& p = r.graph;
  p.nodes = g.actors;
  p.edges = g.references;
  p.roots = g.roots;

  std::vector<ActorId> seeds = seed_actors(g);
  detail::Csr fwd = detail::csr_forward(g.actors, g.references);
  std::vector<char> seen(g.actors.size());
  std::vector<std::uint32_t> frontier;
  for (ActorId u : seeds) {
    std::fill(seen.begin(), seen.end(), 0);
    frontier.clear();
    auto ui = static_cast<std::uint32_t>(detail::index_of(g.actors, u));
    for (std::uint32_t t : fwd.row(ui)) {
      if (!seen[t]) {
        seen[t] = 1;
        frontier.push_back(t);
      }
    }
    for (std::size_t k = 0; k < frontier.size(); ++k) {
      std::uint32_t q = frontier[k];
      p.edges.emplace_back(g.actors[q], u);
      for (std::uint32_t t : fwd.row(q)) {
        if (!seen[t]) {
          seen[t] = 1;
          frontier.push_back(t);
        }
      }
    }
  }
  p.sort_unique();

  r.stats = make_stats(g, p, seeds.size());
  return r;
}

TransformResult transform_indirect_backpointers(const ActorGraph& g) {
  TransformResult r;
  r.map = identity_map(g);

  PassiveGraph& p = r.graph;
  p.nodes = g.actors;
  p.edges = g.references;
  p.roots = g.roots;

  detail::Csr fwd = detail::csr_forward(g.actors, g.references);
  std::vector<char> active(g.actors.size(), 0);
  std::vector<std::uint32_t> frontier;
  for (ActorId u : seed_actors(g)) {
    auto ui = static_cast<std::uint32_t>(detail::index_of(g.actors, u));
    active[ui] = 1;
    frontier.push_back(ui);
  }
  for (std::size_t k = 0; k < frontier.size(); ++k) {
    for (std::uint32_t t : fwd.row(frontier[k])) {
      if (!active[t]) {
        active[t] = 1;
        frontier.push_back(t);
      }
    }
  }
  for (const auto& [a, b] : g.references) {
    if (active[detail::index_of(g.actors, a)]) p.edges.emplace_back(b, a);
  }
  p.sort_unique();

  r.stats = make_stats(g, p, 1);
  return r;
}

TransformResult transform(const ActorGraph& g, Method m) {
  switch (m) {
    case Method::dual_node:
      return transform_dual_node(g);
    case Method::direct:
      return transform_direct_backpointers(g);
    case Method::indirect:
      return transform_indirect_backpointers(g);
  }
  throw std::logic_error("unhandled method");
}

}  // namespace agc
