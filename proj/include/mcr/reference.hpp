#ifndef MCR_REFERENCE_HPP_
#define MCR_REFERENCE_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include "mcr/multiplex_network.hpp"

namespace mcr::reference {

/// Serial reference implementations, deliberately naive and independent of
/// the optimized lattice code path. Tests use them as oracles; the benchmark
/// uses them as the baseline.

/// Direct peeling from the full node set: recompute induced degrees and drop
/// violators until a fixpoint. No shared code with mcr::peel_within.
std::vector<NodeIndex> k_core(const MultiplexNetwork& net,
                              const std::vector<std::uint32_t>& thresholds);

/// Exhaustive enumeration: peel every vector in the grid
/// [0..max_degree] per layer from the full node set, keep the non-empty ones.
std::map<std::vector<std::uint32_t>, std::vector<NodeIndex>> enumerate_cores(
    const MultiplexNetwork& net);

}  // namespace mcr::reference

#endif  // MCR_REFERENCE_HPP_
