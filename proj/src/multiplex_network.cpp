#include "mcr/multiplex_network.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "mcr/errors.hpp"

namespace mcr {

MultiplexNetwork::MultiplexNetwork(std::vector<std::string> node_labels,
                                   std::vector<std::string> layer_labels,
                                   const std::vector<Edge>& edges)
    : node_labels_(std::move(node_labels)), layer_labels_(std::move(layer_labels)) {
    const std::size_t n = node_labels_.size();
    const std::size_t layers = layer_labels_.size();
    node_index_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) node_index_.emplace(node_labels_[i], static_cast<NodeIndex>(i));
    for (std::size_t a = 0; a < layers; ++a)
        layer_index_.emplace(layer_labels_[a], static_cast<LayerIndex>(a));
    if (node_index_.size() != n) throw std::invalid_argument("duplicate node label");
    if (layer_index_.size() != layers) throw std::invalid_argument("duplicate layer label");

    // Normalize to (min, max) endpoint order, dedupe per layer.
    std::vector<std::vector<std::pair<NodeIndex, NodeIndex>>> per_layer(layers);
    for (const Edge& e : edges) {
        if (e.layer >= layers) throw std::invalid_argument("edge layer out of range");
        if (e.u >= n || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loop on node " + node_labels_[e.u]);
        per_layer[e.layer].emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    }

    offsets_.resize(layers);
    targets_.resize(layers);
    for (std::size_t a = 0; a < layers; ++a) {
        auto& list = per_layer[a];
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());

        std::vector<std::size_t> deg(n, 0);
        for (auto [u, v] : list) {
            ++deg[u];
            ++deg[v];
        }
        offsets_[a].assign(n + 1, 0);
        for (std::size_t i = 0; i < n; ++i) offsets_[a][i + 1] = offsets_[a][i] + deg[i];
        targets_[a].resize(2 * list.size());
        std::vector<std::size_t> cursor(offsets_[a].begin(), offsets_[a].end() - 1);
        for (auto [u, v] : list) {
            targets_[a][cursor[u]++] = v;
            targets_[a][cursor[v]++] = u;
        }
        for (std::size_t i = 0; i < n; ++i)
            std::sort(targets_[a].begin() + static_cast<std::ptrdiff_t>(offsets_[a][i]),
                      targets_[a].begin() + static_cast<std::ptrdiff_t>(offsets_[a][i + 1]));
    }
}

std::size_t MultiplexNetwork::edge_count(LayerIndex layer) const {
    return targets_.at(layer).size() / 2;
}

std::size_t MultiplexNetwork::total_edge_count() const {
    std::size_t total = 0;
    for (std::size_t a = 0; a < layer_count(); ++a) total += edge_count(static_cast<LayerIndex>(a));
    return total;
}

std::span<const NodeIndex> MultiplexNetwork::neighbors(LayerIndex layer, NodeIndex v) const {
    const auto& off = offsets_.at(layer);
    return {targets_[layer].data() + off[v], off[v + 1] - off[v]};
}

std::uint32_t MultiplexNetwork::degree(LayerIndex layer, NodeIndex v) const {
    const auto& off = offsets_.at(layer);
    return static_cast<std::uint32_t>(off[v + 1] - off[v]);
}

std::vector<std::uint32_t> MultiplexNetwork::degree_vector(LayerIndex layer) const {
    if (layer >= layer_count()) throw std::out_of_range("layer index out of range");
    std::vector<std::uint32_t> deg(node_count());
    for (std::size_t v = 0; v < node_count(); ++v)
        deg[v] = degree(layer, static_cast<NodeIndex>(v));
    return deg;
}

std::uint32_t MultiplexNetwork::max_degree(LayerIndex layer) const {
    std::uint32_t best = 0;
    for (std::size_t v = 0; v < node_count(); ++v)
        best = std::max(best, degree(layer, static_cast<NodeIndex>(v)));
    return best;
}

std::optional<NodeIndex> MultiplexNetwork::find_node(const std::string& label) const {
    auto it = node_index_.find(label);
    if (it == node_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<LayerIndex> MultiplexNetwork::find_layer(const std::string& label) const {
    auto it = layer_index_.find(label);
    if (it == layer_index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::pair<NodeIndex, NodeIndex>> MultiplexNetwork::layer_edges(LayerIndex layer) const {
    std::vector<std::pair<NodeIndex, NodeIndex>> out;
    out.reserve(edge_count(layer));
    for (std::size_t v = 0; v < node_count(); ++v)
        for (NodeIndex w : neighbors(layer, static_cast<NodeIndex>(v)))
            if (static_cast<NodeIndex>(v) < w) out.emplace_back(static_cast<NodeIndex>(v), w);
    return out;
}

MultiplexNetwork MultiplexNetwork::remove_nodes(const std::vector<NodeIndex>& victims) const {
    std::vector<char> removed(node_count(), 0);
    for (NodeIndex v : victims) {
        if (v >= node_count()) throw std::invalid_argument("victim index out of range");
        removed[v] = 1;
    }
    std::vector<NodeIndex> remap(node_count(), 0);
    std::vector<std::string> labels;
    labels.reserve(node_count());
    for (std::size_t v = 0; v < node_count(); ++v) {
        if (removed[v]) continue;
        remap[v] = static_cast<NodeIndex>(labels.size());
        labels.push_back(node_labels_[v]);
    }
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < layer_count(); ++a)
        for (auto [u, v] : layer_edges(static_cast<LayerIndex>(a)))
            if (!removed[u] && !removed[v])
                edges.push_back({static_cast<LayerIndex>(a), remap[u], remap[v]});
    return MultiplexNetwork(std::move(labels), layer_labels_, edges);
}

MultiplexNetwork MultiplexNetwork::extract_layer(LayerIndex layer) const {
    if (layer >= layer_count()) throw std::out_of_range("layer index out of range");
    std::vector<Edge> edges;
    for (auto [u, v] : layer_edges(layer)) edges.push_back({0, u, v});
    return MultiplexNetwork(node_labels_, {layer_labels_[layer]}, edges);
}

namespace {

struct LabelInterner {
    std::vector<std::string> labels;
    std::unordered_map<std::string, std::uint32_t> index;

    std::uint32_t intern(const std::string& label) {
        auto [it, inserted] = index.emplace(label, static_cast<std::uint32_t>(labels.size()));
        if (inserted) labels.push_back(label);
        return it->second;
    }
};

}  // namespace

MultiplexNetwork load_network(const std::filesystem::path& path, NetworkFormat format) {
    (void)format;  // single format for now
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "'");

    LabelInterner nodes;
    LabelInterner layers;
    std::vector<MultiplexNetwork::Edge> edges;
    bool declared_any = false;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#' || line[start] == '%') {
            // `#node X` / `#layer Y` directives declare isolated nodes and
            // edgeless layers, which plain edge lines cannot express. Any
            // other comment line is skipped.
            std::istringstream fields(line.substr(start));
            std::string tag, label, extra;
            fields >> tag >> label;
            if ((tag == "#node" || tag == "#layer") && !label.empty() && !(fields >> extra)) {
                (tag == "#node") ? nodes.intern(label) : layers.intern(label);
                declared_any = true;
            }
            continue;
        }

        std::istringstream fields(line);
        std::string layer_id, u_id, v_id, weight, extra;
        fields >> layer_id >> u_id >> v_id;
        if (v_id.empty())
            throw ParseError(path.string() + ":" + std::to_string(line_no) +
                                 ": expected 'layer_id node_id node_id [weight]'",
                             line_no);
        if (fields >> weight) {
            std::size_t consumed = 0;
            try {
                (void)std::stod(weight, &consumed);
            } catch (const std::exception&) {
                consumed = 0;
            }
            if (consumed != weight.size())
                throw ParseError(path.string() + ":" + std::to_string(line_no) +
                                     ": weight '" + weight + "' is not a number",
                                 line_no);
            if (fields >> extra)
                throw ParseError(path.string() + ":" + std::to_string(line_no) +
                                     ": trailing field '" + extra + "'",
                                 line_no);
        }
        if (u_id == v_id)
            throw ParseError(path.string() + ":" + std::to_string(line_no) + ": self-loop on '" +
                                 u_id + "'",
                             line_no);
        const LayerIndex layer = layers.intern(layer_id);
        const NodeIndex u = nodes.intern(u_id);
        const NodeIndex v = nodes.intern(v_id);
        edges.push_back({layer, u, v});
    }
    if (edges.empty() && !declared_any)
        throw ParseError(path.string() + ": no edges or declarations found", 0);
    return MultiplexNetwork(std::move(nodes.labels), std::move(layers.labels), edges);
}

void save_network(const MultiplexNetwork& net, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    out << "# multiplex edge list\n";
    out << "# nodes=" << net.node_count() << " layers=" << net.layer_count() << "\n";
    // Declarations pin the exact node/layer index order on reload.
    for (std::size_t a = 0; a < net.layer_count(); ++a)
        out << "#layer " << net.layer_label(static_cast<LayerIndex>(a)) << '\n';
    for (std::size_t v = 0; v < net.node_count(); ++v)
        out << "#node " << net.node_label(static_cast<NodeIndex>(v)) << '\n';
    for (std::size_t a = 0; a < net.layer_count(); ++a)
        for (auto [u, v] : net.layer_edges(static_cast<LayerIndex>(a)))
            out << net.layer_label(static_cast<LayerIndex>(a)) << ' ' << net.node_label(u) << ' '
                << net.node_label(v) << '\n';
    if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace mcr
