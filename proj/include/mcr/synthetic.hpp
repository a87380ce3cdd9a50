#ifndef MCR_SYNTHETIC_HPP_
#define MCR_SYNTHETIC_HPP_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "mcr/multiplex_network.hpp"

namespace mcr {

/// Generates a multiplex network with heavy-tailed per-layer degree sequences
/// whose cross-layer degree ranks are coupled toward target_correlation
/// (+1 aligned, 0 independent, -1 anti-aligned): one sampled degree multiset
/// is assigned to nodes per layer by rank order, then a (1-|target|) fraction
/// of positions is reshuffled. Each layer is wired by a configuration model
/// with self-loops and multi-edges rewired away. Deterministic for a fixed
/// seed. Throws InfeasibleDegreeError when rewiring cannot produce a simple
/// graph, std::invalid_argument on node_count < 2, layer_count < 2, or a
/// target outside [-1, 1].
MultiplexNetwork generate_synthetic(std::size_t node_count, std::size_t layer_count,
                                    double target_correlation, double degree_exponent,
                                    std::uint64_t seed);

/// Realizes a degree sequence as a simple undirected graph: stub pairing
/// followed by edge-swap repair of self-loops and duplicates. An all-zero
/// sequence yields an edgeless graph. Throws InfeasibleDegreeError for odd
/// degree sums or when the rewiring budget is exhausted.
std::vector<std::pair<NodeIndex, NodeIndex>> wire_configuration_model(
    std::vector<std::uint32_t> degrees, std::mt19937_64& rng);

}  // namespace mcr

#endif  // MCR_SYNTHETIC_HPP_
