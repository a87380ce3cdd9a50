#include "mcr/reference.hpp"

#include <stdexcept>

namespace mcr::reference {

std::vector<NodeIndex> k_core(const MultiplexNetwork& net,
                              const std::vector<std::uint32_t>& thresholds) {
    if (thresholds.size() != net.layer_count())
        throw std::invalid_argument("threshold vector length != layer count");
    std::vector<char> alive(net.node_count(), 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t v = 0; v < net.node_count(); ++v) {
            if (!alive[v]) continue;
            for (std::size_t a = 0; a < net.layer_count(); ++a) {
                std::uint32_t induced = 0;
                for (NodeIndex w :
                     net.neighbors(static_cast<LayerIndex>(a), static_cast<NodeIndex>(v)))
                    if (alive[w]) ++induced;
                if (induced < thresholds[a]) {
                    alive[v] = 0;
                    changed = true;
                    break;
                }
            }
        }
    }
    std::vector<NodeIndex> survivors;
    for (std::size_t v = 0; v < net.node_count(); ++v)
        if (alive[v]) survivors.push_back(static_cast<NodeIndex>(v));
    return survivors;
}

std::map<std::vector<std::uint32_t>, std::vector<NodeIndex>> enumerate_cores(
    const MultiplexNetwork& net) {
    std::map<std::vector<std::uint32_t>, std::vector<NodeIndex>> cores;
    if (net.node_count() == 0) return cores;

    const std::size_t layers = net.layer_count();
    std::vector<std::uint32_t> limit(layers);
    for (std::size_t a = 0; a < layers; ++a) limit[a] = net.max_degree(static_cast<LayerIndex>(a));

    std::vector<std::uint32_t> vec(layers, 0);
    while (true) {
        auto members = k_core(net, vec);
        if (!members.empty()) cores.emplace(vec, std::move(members));
        // Odometer step through the full grid [0..limit] per layer.
        std::size_t pos = 0;
        while (pos < layers && vec[pos] == limit[pos]) vec[pos++] = 0;
        if (pos == layers) break;
        ++vec[pos];
    }
    return cores;
}

}  // namespace mcr::reference
