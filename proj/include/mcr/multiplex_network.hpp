#ifndef MCR_MULTIPLEX_NETWORK_HPP_
#define MCR_MULTIPLEX_NETWORK_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "mcr/node_set.hpp"

namespace mcr {

using LayerIndex = std::uint32_t;

/// Undirected, unweighted multiplex network: an ordered list of layers over
/// one shared node set. Nodes and layers carry external string labels mapped
/// to dense internal indices in first-appearance order. Immutable once built;
/// concurrent readers are safe.
class MultiplexNetwork {
public:
    /// One undirected edge on one layer, endpoints as internal indices.
    struct Edge {
        LayerIndex layer;
        NodeIndex u;
        NodeIndex v;
    };

    MultiplexNetwork() = default;

    /// Builds from labelled edges. Endpoint indices refer to positions in
    /// node_labels; duplicate edges within a layer are collapsed. Throws
    /// std::invalid_argument on self-loops or out-of-range indices.
    MultiplexNetwork(std::vector<std::string> node_labels,
                     std::vector<std::string> layer_labels,
                     const std::vector<Edge>& edges);

    std::size_t node_count() const noexcept { return node_labels_.size(); }
    std::size_t layer_count() const noexcept { return layer_labels_.size(); }
    std::size_t edge_count(LayerIndex layer) const;
    std::size_t total_edge_count() const;

    std::span<const NodeIndex> neighbors(LayerIndex layer, NodeIndex v) const;
    std::uint32_t degree(LayerIndex layer, NodeIndex v) const;

    /// Per-layer degree sequence d^[layer], indexed by node.
    /// Throws std::out_of_range on a bad layer index.
    std::vector<std::uint32_t> degree_vector(LayerIndex layer) const;

    std::uint32_t max_degree(LayerIndex layer) const;

    const std::string& node_label(NodeIndex v) const { return node_labels_.at(v); }
    const std::string& layer_label(LayerIndex layer) const { return layer_labels_.at(layer); }
    std::optional<NodeIndex> find_node(const std::string& label) const;
    std::optional<LayerIndex> find_layer(const std::string& label) const;

    /// Edges of one layer as (u, v) with u < v, sorted.
    std::vector<std::pair<NodeIndex, NodeIndex>> layer_edges(LayerIndex layer) const;

    /// New network over the surviving nodes, re-indexed densely in the old
    /// index order; external labels are preserved. Every edge incident to a
    /// victim disappears in every layer. The original network is unchanged.
    MultiplexNetwork remove_nodes(const std::vector<NodeIndex>& victims) const;

    /// One layer extracted as a standalone single-layer network.
    MultiplexNetwork extract_layer(LayerIndex layer) const;

private:
    std::vector<std::string> node_labels_;
    std::vector<std::string> layer_labels_;
    std::unordered_map<std::string, NodeIndex> node_index_;
    std::unordered_map<std::string, LayerIndex> layer_index_;
    // CSR adjacency per layer, neighbor lists sorted ascending.
    std::vector<std::vector<std::size_t>> offsets_;
    std::vector<std::vector<NodeIndex>> targets_;
};

/// Supported ingestion formats. Multiplex edge list: one edge per line,
/// whitespace-separated `layer_id node_id node_id [weight]`; `#`/`%` start
/// comment lines; ids are arbitrary non-whitespace tokens; weights are parsed
/// and discarded.
enum class NetworkFormat { kMultiplexEdgeList };

/// Loads a network from disk. Throws IoError if unreadable, ParseError (with
/// the 1-based line number) on malformed lines or self-loops, and ParseError
/// on files with no data lines. Duplicate edges are collapsed; self-loops are
/// rejected, never collapsed away.
MultiplexNetwork load_network(const std::filesystem::path& path,
                              NetworkFormat format = NetworkFormat::kMultiplexEdgeList);

/// Writes the same edge-list format, with a `#` header recording
/// node_count/layer_count. load_network(save_network(net)) reproduces the
/// edge multiset per layer under the label maps.
void save_network(const MultiplexNetwork& net, const std::filesystem::path& path);

}  // namespace mcr

#endif  // MCR_MULTIPLEX_NETWORK_HPP_
