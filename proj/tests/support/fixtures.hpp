#ifndef MCR_TESTS_SUPPORT_FIXTURES_HPP_
#define MCR_TESTS_SUPPORT_FIXTURES_HPP_

#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mcr/core_lattice.hpp"
#include "mcr/multiplex_network.hpp"

namespace mcr::testing {

inline std::filesystem::path data_file(const std::string& name) {
    return std::filesystem::path(MCR_DATA_DIR) / name;
}

/// The bundled 6-node two-layer example network, built programmatically
/// (nodes A..F in order, layers "1" and "2").
inline MultiplexNetwork example_network() {
    const std::vector<std::string> nodes = {"A", "B", "C", "D", "E", "F"};
    const std::vector<std::string> layers = {"1", "2"};
    auto edge = [](LayerIndex l, NodeIndex u, NodeIndex v) {
        return MultiplexNetwork::Edge{l, u, v};
    };
    // A=0 B=1 C=2 D=3 E=4 F=5
    const std::vector<MultiplexNetwork::Edge> edges = {
        edge(0, 0, 1), edge(0, 1, 2), edge(0, 1, 3), edge(0, 1, 4), edge(0, 1, 5),
        edge(0, 2, 4), edge(0, 2, 5), edge(0, 3, 4), edge(0, 4, 5),
        edge(1, 0, 1), edge(1, 0, 3), edge(1, 1, 3), edge(1, 1, 4), edge(1, 2, 4),
        edge(1, 3, 4), edge(1, 4, 5),
    };
    return MultiplexNetwork(nodes, layers, edges);
}

/// The full expected lattice of the example network: vector -> member labels.
inline std::map<std::vector<std::uint32_t>, std::set<std::string>> example_lattice_expected() {
    return {
        {{0, 0}, {"A", "B", "C", "D", "E", "F"}},
        {{1, 0}, {"A", "B", "C", "D", "E", "F"}},
        {{0, 1}, {"A", "B", "C", "D", "E", "F"}},
        {{2, 0}, {"B", "C", "D", "E", "F"}},
        {{1, 1}, {"A", "B", "C", "D", "E", "F"}},
        {{0, 2}, {"A", "B", "D", "E"}},
        {{3, 0}, {"B", "C", "E", "F"}},
        {{2, 1}, {"B", "C", "D", "E", "F"}},
        {{1, 2}, {"A", "B", "D", "E"}},
        {{3, 1}, {"B", "C", "E", "F"}},
        {{2, 2}, {"B", "D", "E"}},
    };
}

inline std::set<std::string> member_labels(const std::vector<NodeIndex>& members,
                                           const MultiplexNetwork& net) {
    std::set<std::string> labels;
    for (NodeIndex v : members) labels.insert(net.node_label(v));
    return labels;
}

inline std::map<std::vector<std::uint32_t>, std::set<std::string>> lattice_label_map(
    const CoreLattice& lattice, const MultiplexNetwork& net) {
    std::map<std::vector<std::uint32_t>, std::set<std::string>> out;
    for (std::size_t level = 0; level < lattice.level_count(); ++level)
        for (CoreId id : lattice.cores_at_level(level)) {
            const Core& core = lattice.core(id);
            out.emplace(std::vector<std::uint32_t>(core.vector.components().begin(),
                                                   core.vector.components().end()),
                        member_labels(core.members.to_vector(), net));
        }
    return out;
}

/// Splits one CSV row, honoring double-quote escaping (for reading the CLI's
/// own output back in tests).
inline std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                field += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

/// Independent random-network source for oracle trials: per-layer G(n, p).
inline MultiplexNetwork random_test_network(std::size_t nodes, std::size_t layers,
                                            double edge_prob, std::mt19937_64& rng) {
    std::vector<std::string> node_labels(nodes);
    for (std::size_t v = 0; v < nodes; ++v) node_labels[v] = "n" + std::to_string(v);
    std::vector<std::string> layer_labels(layers);
    for (std::size_t a = 0; a < layers; ++a) layer_labels[a] = "L" + std::to_string(a);

    std::bernoulli_distribution flip(edge_prob);
    std::vector<MultiplexNetwork::Edge> edges;
    for (std::size_t a = 0; a < layers; ++a)
        for (std::size_t u = 0; u < nodes; ++u)
            for (std::size_t v = u + 1; v < nodes; ++v)
                if (flip(rng))
                    edges.push_back({static_cast<LayerIndex>(a), static_cast<NodeIndex>(u),
                                     static_cast<NodeIndex>(v)});
    return MultiplexNetwork(node_labels, layer_labels, edges);
}

}  // namespace mcr::testing

#endif  // MCR_TESTS_SUPPORT_FIXTURES_HPP_
