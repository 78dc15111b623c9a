#include "agc/liveness.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "agc/detail/csr.hpp"
#include "agc/detail/sorted.hpp"

namespace agc {

namespace {

// Forward closure of the seed indices, as flags over actor indices.
std::vector<char> forward_closure(std::size_t n_actors, const detail::Csr& fwd,
                                  const std::vector<std::uint32_t>& seeds) {
  std::vector<char> in(n_actors, 0);
  std::vector<std::uint32_t> queue;
  for (auto s : seeds) {
    if (!in[s]) {
      in[s] = 1;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::uint32_t y : fwd.row(queue[head])) {
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return in;
}

std::vector<std::uint32_t> seed_indices(const ActorGraph& g) {
  std::vector<std::uint32_t> seeds;
  for (ActorId u : g.unblocked)
    seeds.push_back(static_cast<std::uint32_t>(detail::index_of(g.actors, u)));
  for (ActorId r : g.roots)
    seeds.push_back(static_cast<std::uint32_t>(detail::index_of(g.actors, r)));
  detail::sort_unique(seeds);
  return seeds;
}

std::vector<ActorId> flags_to_ids(const ActorGraph& g, const std::vector<char>& flags) {
  std::vector<ActorId> out;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (flags[i]) out.push_back(g.actors[i]);
  }
  return out;
}

}  // namespace

std::vector<ActorId> potentially_active(const ActorGraph& g) {
  detail::Csr fwd = detail::csr_forward(g.actors, g.references);
  return flags_to_ids(g, forward_closure(g.actors.size(), fwd, seed_indices(g)));
}

LivenessResult live_fixpoint(const ActorGraph& g, WorklistOrder order) {
  detail::Csr fwd = detail::csr_forward(g.actors, g.references);
  detail::Csr rev = detail::csr_reverse(g.actors, g.references);
  std::vector<char> active = forward_closure(g.actors.size(), fwd, seed_indices(g));

  std::vector<char> live(g.actors.size(), 0);
  std::vector<std::uint32_t> worklist;
  std::size_t head = 0;
  auto enqueue = [&](std::uint32_t x) {
    if (!live[x]) {
      live[x] = 1;
      worklist.push_back(x);
    }
  };
  for (ActorId r : g.roots) enqueue(static_cast<std::uint32_t>(detail::index_of(g.actors, r)));

  while (order == WorklistOrder::fifo ? head < worklist.size() : !worklist.empty()) {
    std::uint32_t x;
    if (order == WorklistOrder::fifo) {
      x = worklist[head++];
    } else {
      x = worklist.back();
      worklist.pop_back();
    }
    // everything x references is live
    for (std::uint32_t y : fwd.row(x)) enqueue(y);
    // a potentially active referencer of live x is live
    for (std::uint32_t a : rev.row(x)) {
      if (active[a]) enqueue(a);
    }
  }

  LivenessResult res;
  res.live = flags_to_ids(g, live);
  res.potentially_active = flags_to_ids(g, active);
  res.garbage.reserve(g.actors.size() - res.live.size());
  std::set_difference(g.actors.begin(), g.actors.end(), res.live.begin(), res.live.end(),
                      std::back_inserter(res.garbage));
  return res;
}

namespace {

// Reach sets for the second oracle. Deliberately written against a plain
// map-of-lists adjacency with recursive descent; it shares nothing with the
// worklist machinery above.
struct ReachSide {
  std::map<ActorId, std::vector<ActorId>> out;

  explicit ReachSide(const ActorGraph& g) {
    for (const auto& [src, dst] : g.references) out[src].push_back(dst);
  }

  void visit(ActorId a, std::set<ActorId>& seen) const {
    if (!seen.insert(a).second) return;
    auto it = out.find(a);
    if (it == out.end()) return;
    for (ActorId b : it->second) visit(b, seen);
  }

  // Reflexive-transitive forward reach.
  std::set<ActorId> reach(ActorId a) const {
    std::set<ActorId> seen;
    visit(a, seen);
    return seen;
  }
};

bool intersects(const std::set<ActorId>& a, const std::set<ActorId>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

}  // namespace

LivenessResult live_reachset(const ActorGraph& g) {
  ReachSide side(g);

  std::set<ActorId> s;
  for (ActorId r : g.roots) s.merge(side.reach(r));

  std::set<ActorId> seeds(g.unblocked.begin(), g.unblocked.end());
  seeds.insert(g.roots.begin(), g.roots.end());

  std::map<ActorId, std::set<ActorId>> pending;
  std::set<ActorId> activity;
  for (ActorId u : seeds) {
    auto r = side.reach(u);
    activity.insert(r.begin(), r.end());
    pending.emplace(u, std::move(r));
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = pending.begin(); it != pending.end();) {
      if (intersects(it->second, s)) {
        s.merge(it->second);
        it = pending.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }

  LivenessResult res;
  res.live.assign(s.begin(), s.end());
  res.potentially_active.assign(activity.begin(), activity.end());
  std::set_difference(g.actors.begin(), g.actors.end(), res.live.begin(), res.live.end(),
                      std::back_inserter(res.garbage));
  return res;
}

}  // namespace agc
