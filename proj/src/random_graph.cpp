#include "agc/random_graph.hpp"

#include <random>
#include <stdexcept>

namespace agc {

namespace {

// std::uniform_* distributions are not portable across standard libraries,
// so uniformity is derived from raw mt19937_64 output directly.
double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  return bound == 0 ? 0 : rng() % bound;
}

}  // namespace

ActorGraph random_graph(std::uint64_t seed, std::size_t n_actors, double edge_density,
                        double p_unblocked, std::size_t n_roots) {
  if (n_roots > n_actors) throw std::invalid_argument("random_graph: n_roots > n_actors");
  if (edge_density < 0.0 || edge_density > 1.0) {
    throw std::invalid_argument("random_graph: edge_density outside [0, 1]");
  }
  if (p_unblocked < 0.0 || p_unblocked > 1.0) {
    throw std::invalid_argument("random_graph: p_unblocked outside [0, 1]");
  }

  std::mt19937_64 rng(seed);
  ActorGraph g;
  for (ActorId a = 0; a < n_actors; ++a) g.add_actor(a);

  for (ActorId src = 0; src < n_actors; ++src) {
    for (ActorId dst = 0; dst < n_actors; ++dst) {
      if (unit_double(rng) < edge_density) g.add_reference(src, dst);
    }
  }

  // Fisher-Yates prefix for the root sample.
  std::vector<ActorId> ids(g.actors);
  for (std::size_t i = 0; i < n_roots; ++i) {
    std::size_t j = i + static_cast<std::size_t>(below(rng, ids.size() - i));
    std::swap(ids[i], ids[j]);
    g.add_root(ids[i]);
  }

  for (ActorId a = 0; a < n_actors; ++a) {
    if (g.is_root(a)) continue;  // roots are already unblocked
    if (unit_double(rng) < p_unblocked) g.set_unblocked(a, true);
  }
  return g;
}

}  // namespace agc
