#include "agc/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "agc/detail/sorted.hpp"

namespace agc {

bool ActorGraph::has_actor(ActorId a) const { return detail::contains(actors, a); }

bool ActorGraph::has_reference(ActorId src, ActorId dst) const {
  return detail::contains(references, ActorEdge{src, dst});
}

bool ActorGraph::is_root(ActorId a) const { return detail::contains(roots, a); }

bool ActorGraph::is_unblocked(ActorId a) const { return detail::contains(unblocked, a); }

void ActorGraph::add_actor(ActorId a) { detail::insert_sorted(actors, a); }

void ActorGraph::add_root(ActorId a) {
  detail::insert_sorted(actors, a);
  detail::insert_sorted(roots, a);
  detail::insert_sorted(unblocked, a);
}

bool ActorGraph::add_reference(ActorId src, ActorId dst) {
  return detail::insert_sorted(references, ActorEdge{src, dst});
}

bool ActorGraph::drop_reference(ActorId src, ActorId dst) {
  return detail::erase_sorted(references, ActorEdge{src, dst});
}

void ActorGraph::set_unblocked(ActorId a, bool value) {
  if (value) {
    detail::insert_sorted(unblocked, a);
  } else if (!is_root(a)) {  // roots stay unblocked
    detail::erase_sorted(unblocked, a);
  }
}

void ActorGraph::remove_actor(ActorId a) {
  detail::erase_sorted(actors, a);
  detail::erase_sorted(roots, a);
  detail::erase_sorted(unblocked, a);
  std::erase_if(references,
                [a](const ActorEdge& e) { return e.first == a || e.second == a; });
}

void ActorGraph::sort_unique() {
  detail::sort_unique(actors);
  detail::sort_unique(references);
  detail::sort_unique(roots);
  detail::sort_unique(unblocked);
}

bool PassiveGraph::has_node(NodeId n) const { return detail::contains(nodes, n); }

void PassiveGraph::sort_unique() {
  detail::sort_unique(nodes);
  detail::sort_unique(edges);
  detail::sort_unique(roots);
}

NodeId NodeMap::alpha_of(ActorId a) const {
  auto i = detail::index_of(actors, a);
  if (i == actors.size()) throw std::out_of_range("NodeMap: unmapped actor " + std::to_string(a));
  return alpha[i];
}

NodeId NodeMap::mu_of(ActorId a) const {
  auto i = detail::index_of(actors, a);
  if (i == actors.size()) throw std::out_of_range("NodeMap: unmapped actor " + std::to_string(a));
  return mu[i];
}

namespace {

template <class T>
void check_sorted_unique(const std::vector<T>& v, const char* what,
                         std::vector<std::string>& out) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i - 1] == v[i]) {
      out.push_back(std::string(what) + " contains a duplicate");
      return;
    }
    if (v[i] < v[i - 1]) {
      out.push_back(std::string(what) + " is out of order");
      return;
    }
  }
}

}  // namespace

std::vector<std::string> validate(const ActorGraph& g) {
  std::vector<std::string> out;
  check_sorted_unique(g.actors, "actors", out);
  check_sorted_unique(g.references, "references", out);
  check_sorted_unique(g.roots, "roots", out);
  check_sorted_unique(g.unblocked, "unblocked", out);
  for (ActorId r : g.roots) {
    if (!g.has_actor(r)) out.push_back("root " + std::to_string(r) + " not an actor");
  }
  for (ActorId u : g.unblocked) {
    if (!g.has_actor(u)) out.push_back("unblocked " + std::to_string(u) + " not an actor");
  }
  for (const auto& [src, dst] : g.references) {
    if (!g.has_actor(src)) {
      out.push_back("reference " + std::to_string(src) + "->" + std::to_string(dst) +
                    ": actor " + std::to_string(src) + " undeclared");
    }
    if (!g.has_actor(dst)) {
      out.push_back("reference " + std::to_string(src) + "->" + std::to_string(dst) +
                    ": actor " + std::to_string(dst) + " undeclared");
    }
  }
  return out;
}

std::vector<std::string> validate(const PassiveGraph& p) {
  std::vector<std::string> out;
  check_sorted_unique(p.nodes, "nodes", out);
  check_sorted_unique(p.edges, "edges", out);
  check_sorted_unique(p.roots, "roots", out);
  for (NodeId r : p.roots) {
    if (!p.has_node(r)) out.push_back("root " + std::to_string(r) + " not a node");
  }
  for (const auto& [src, dst] : p.edges) {
    if (!p.has_node(src)) out.push_back("edge source " + std::to_string(src) + " not a node");
    if (!p.has_node(dst)) out.push_back("edge target " + std::to_string(dst) + " not a node");
  }
  return out;
}

std::vector<std::string> validate(const NodeMap& map, const ActorGraph& g,
                                  const PassiveGraph& p) {
  std::vector<std::string> out;
  if (map.actors.size() != map.alpha.size() || map.actors.size() != map.mu.size()) {
    out.push_back("map arrays differ in length");
    return out;
  }
  if (map.actors != g.actors) out.push_back("map is not total over the actors");
  std::vector<NodeId> image;
  for (std::size_t i = 0; i < map.actors.size(); ++i) {
    image.push_back(map.alpha[i]);
    if (map.paired) {
      image.push_back(map.mu[i]);
    } else if (map.mu[i] != map.alpha[i]) {
      out.push_back("unpaired map has alpha != mu for actor " + std::to_string(map.actors[i]));
    }
  }
  std::size_t pre = image.size();
  detail::sort_unique(image);
  if (image.size() != pre) out.push_back("map is not injective");
  if (image != p.nodes) out.push_back("map image does not cover the node set");
  return out;
}

}  // namespace agc
