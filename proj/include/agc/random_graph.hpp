#pragma once

#include <cstddef>
#include <cstdint>

#include "agc/graph.hpp"

namespace agc {

/*
 * Deterministic random actor graph: bit-identical output for identical
 * arguments on every platform. Actor ids are 0..n_actors-1; each ordered
 * pair (self-references included) becomes a reference with probability
 * edge_density; n_roots actors are sampled as roots; every non-root actor
 * is unblocked with probability p_unblocked, and roots are always unblocked.
 *
 * Throws std::invalid_argument on parameter range violations
 * (n_roots > n_actors, probabilities outside [0, 1]).
 */
ActorGraph random_graph(std::uint64_t seed, std::size_t n_actors, double edge_density,
                        double p_unblocked, std::size_t n_roots);

}  // namespace agc
