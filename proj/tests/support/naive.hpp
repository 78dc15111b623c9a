#pragma once

// Brute-force reference results and small-graph enumeration for tests.
// Deliberately slow and set-based so they share nothing with the library's
// worklist or CSR code.

#include <cstddef>
#include <set>
#include <vector>

#include "agc/graph.hpp"

namespace agc::test {

inline std::set<ActorId> naive_potential(const ActorGraph& g) {
  std::set<ActorId> p(g.roots.begin(), g.roots.end());
  p.insert(g.unblocked.begin(), g.unblocked.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [src, dst] : g.references)
      if (p.count(src) && !p.count(dst)) {
        p.insert(dst);
        changed = true;
      }
  }
  return p;
}

inline std::set<ActorId> naive_live(const ActorGraph& g) {
  const std::set<ActorId> potential = naive_potential(g);
  std::set<ActorId> live(g.roots.begin(), g.roots.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [src, dst] : g.references) {
      if (live.count(src) && !live.count(dst)) {
        live.insert(dst);
        changed = true;
      }
      if (potential.count(src) && live.count(dst) && !live.count(src)) {
        live.insert(src);
        changed = true;
      }
    }
  }
  return live;
}

inline std::set<NodeId> naive_marked(const PassiveGraph& p) {
  std::set<NodeId> marked(p.roots.begin(), p.roots.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [src, dst] : p.edges)
      if (marked.count(src) && !marked.count(dst)) {
        marked.insert(dst);
        changed = true;
      }
  }
  return marked;
}

inline std::vector<ActorId> to_ids(const std::set<ActorId>& s) {
  return {s.begin(), s.end()};
}

// Every actor graph on exactly n actors (ids 0..n-1): all 3^n per-actor flag
// states (blocked, unblocked, unblocked root) crossed with all 2^(n*n) edge
// subsets, self-references included. Graphs arrive already normalized and
// sorted. n above 4 is not supported (the counts explode).
template <class F>
void enumerate_graphs(std::size_t n, F&& fn) {
  std::size_t flag_states = 1;
  for (std::size_t i = 0; i < n; ++i) flag_states *= 3;
  const std::size_t edge_masks = std::size_t{1} << (n * n);

  std::vector<ActorId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = i;

  for (std::size_t flags = 0; flags < flag_states; ++flags) {
    ActorGraph base;
    base.actors = ids;
    std::size_t rest = flags;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t state = rest % 3;
      rest /= 3;
      if (state >= 1) base.unblocked.push_back(i);
      if (state == 2) base.roots.push_back(i);
    }
    for (std::size_t mask = 0; mask < edge_masks; ++mask) {
      ActorGraph g = base;
      std::size_t bit = 0;
      for (std::size_t src = 0; src < n; ++src)
        for (std::size_t dst = 0; dst < n; ++dst, ++bit)
          if (mask >> bit & 1) g.references.emplace_back(src, dst);
      fn(g);
    }
  }
}

}  // namespace agc::test
