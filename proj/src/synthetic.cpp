#include "mcr/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "mcr/errors.hpp"

namespace mcr {

namespace {

struct PairHash {
    std::size_t operator()(const std::pair<NodeIndex, NodeIndex>& p) const noexcept {
        return (static_cast<std::size_t>(p.first) << 32) ^ p.second;
    }
};

using EdgeList = std::vector<std::pair<NodeIndex, NodeIndex>>;

std::pair<NodeIndex, NodeIndex> normalized(NodeIndex a, NodeIndex b) {
    return {std::min(a, b), std::max(a, b)};
}

/// One stub-pairing pass plus edge-swap repair. Returns nullopt when repair
/// stalls (caller may reshuffle and retry).
std::optional<EdgeList> try_wire(const std::vector<std::uint32_t>& degrees,
                                 std::mt19937_64& rng) {
    std::vector<NodeIndex> stubs;
    for (NodeIndex v = 0; v < degrees.size(); ++v)
        stubs.insert(stubs.end(), degrees[v], v);
    std::shuffle(stubs.begin(), stubs.end(), rng);

    EdgeList edges;
    edges.reserve(stubs.size() / 2);
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2)
        edges.push_back(normalized(stubs[i], stubs[i + 1]));

    std::unordered_map<std::pair<NodeIndex, NodeIndex>, std::uint32_t, PairHash> count;
    for (const auto& e : edges) ++count[e];
    auto is_bad = [&](const std::pair<NodeIndex, NodeIndex>& e) {
        return e.first == e.second || count[e] > 1;
    };

    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (is_bad(edges[i])) bad.push_back(i);

    std::uniform_int_distribution<std::size_t> pick_edge(0, edges.empty() ? 0 : edges.size() - 1);
    std::size_t attempts = 200 * edges.size() + 1000;
    while (!bad.empty() && attempts-- > 0) {
        const std::size_t i = bad.back();
        if (!is_bad(edges[i])) {  // repaired as a side effect of an earlier swap
            bad.pop_back();
            continue;
        }
        const std::size_t j = pick_edge(rng);
        if (j == i) continue;
        const auto [u, v] = edges[i];
        const auto [x, y] = edges[j];
        // Two rewirings preserve degrees: {u,x},{v,y} or {u,y},{v,x}.
        const bool flip = (rng() & 1) != 0;
        const auto e1 = normalized(u, flip ? y : x);
        const auto e2 = normalized(v, flip ? x : y);
        if (e1.first == e1.second || e2.first == e2.second || e1 == e2) continue;

        --count[edges[i]];
        --count[edges[j]];
        if (count[e1] == 0 && count[e2] == 0 && !(e1 == e2)) {
            ++count[e1];
            ++count[e2];
            edges[i] = e1;
            edges[j] = e2;
            if (!is_bad(edges[i])) bad.pop_back();
            if (is_bad(edges[j])) bad.push_back(j);
        } else {
            ++count[edges[i]];
            ++count[edges[j]];
        }
    }
    if (!bad.empty()) {
        // Re-scan: lazily tracked entries may all be clean by now.
        bad.erase(std::remove_if(bad.begin(), bad.end(),
                                 [&](std::size_t i) { return !is_bad(edges[i]); }),
                  bad.end());
        if (!bad.empty()) return std::nullopt;
    }
    return edges;
}

/// Erdos-Gallai test; expects an even degree sum.
bool is_graphical(std::vector<std::uint32_t> degrees) {
    std::sort(degrees.begin(), degrees.end(), std::greater<>{});
    const std::size_t n = degrees.size();
    std::uint64_t lhs = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        lhs += degrees[k - 1];
        std::uint64_t rhs = k * (k - 1);
        for (std::size_t i = k; i < n; ++i) rhs += std::min<std::uint64_t>(degrees[i], k);
        if (lhs > rhs) return false;
    }
    return true;
}

/// Pulls the largest degree down in parity-preserving steps until the
/// sequence is realizable as a simple graph.
void make_graphical(std::vector<std::uint32_t>& degrees) {
    while (!is_graphical(degrees)) {
        auto top = std::max_element(degrees.begin(), degrees.end());
        *top -= std::min<std::uint32_t>(2, *top);
    }
}

}  // namespace

EdgeList wire_configuration_model(std::vector<std::uint32_t> degrees, std::mt19937_64& rng) {
    const std::uint64_t sum = std::accumulate(degrees.begin(), degrees.end(), std::uint64_t{0});
    if (sum % 2 != 0) throw InfeasibleDegreeError("degree sum is odd");
    if (sum == 0) return {};
    for (std::uint32_t d : degrees)
        if (d >= degrees.size())
            throw InfeasibleDegreeError("degree " + std::to_string(d) +
                                        " exceeds node count minus one");
    for (int restart = 0; restart < 5; ++restart) {
        if (auto edges = try_wire(degrees, rng)) return std::move(*edges);
    }
    throw InfeasibleDegreeError("rewiring budget exhausted; degree sequence not realizable");
}

MultiplexNetwork generate_synthetic(std::size_t node_count, std::size_t layer_count,
                                    double target_correlation, double degree_exponent,
                                    std::uint64_t seed) {
    if (node_count < 2) throw std::invalid_argument("node_count must be at least 2");
    if (layer_count < 2) throw std::invalid_argument("layer_count must be at least 2");
    if (!(target_correlation >= -1.0 && target_correlation <= 1.0))
        throw std::invalid_argument("target_correlation must lie in [-1, 1]");
    if (!(degree_exponent > 1.0)) throw std::invalid_argument("degree_exponent must exceed 1");

    std::mt19937_64 rng(seed);
    // Structural cutoff ~ sqrt(<d> n): keeps the stub-pairing repairable as a
    // simple graph (a degree-(n-1) hub cannot shed duplicate edges by swaps).
    const double mean_estimate =
        degree_exponent > 2.05
            ? std::min(8.0, (degree_exponent - 1.0) / (degree_exponent - 2.0))
            : 8.0;
    const auto cap = static_cast<std::uint32_t>(
        std::min<double>(static_cast<double>(node_count - 1),
                         std::ceil(std::sqrt(mean_estimate * static_cast<double>(node_count)))));

    // One heavy-tailed degree multiset shared by all layers (sorted
    // descending); per-layer node assignment carries the coupling.
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::uint32_t> multiset(node_count);
    for (auto& d : multiset) {
        const double x = std::pow(1.0 - unit(rng), -1.0 / (degree_exponent - 1.0));
        d = std::min(cap, static_cast<std::uint32_t>(x));
    }
    std::sort(multiset.begin(), multiset.end(), std::greater<>{});

    // Layer 0: random assignment. Later layers: assign by layer-0 rank order
    // (reversed for negative targets), then reshuffle a (1-|target|) share of
    // positions to decay the correlation toward the target.
    std::vector<std::vector<std::uint32_t>> layer_degrees(layer_count,
                                                          std::vector<std::uint32_t>(node_count));
    std::vector<NodeIndex> order(node_count);
    std::iota(order.begin(), order.end(), NodeIndex{0});
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t r = 0; r < node_count; ++r) layer_degrees[0][order[r]] = multiset[r];

    std::vector<NodeIndex> by_rank(order);  // layer-0 nodes in descending-degree order
    if (target_correlation < 0.0) std::reverse(by_rank.begin(), by_rank.end());

    const std::size_t reshuffled =
        static_cast<std::size_t>(std::lround((1.0 - std::abs(target_correlation)) *
                                             static_cast<double>(node_count)));
    for (std::size_t a = 1; a < layer_count; ++a) {
        auto& deg = layer_degrees[a];
        for (std::size_t r = 0; r < node_count; ++r) deg[by_rank[r]] = multiset[r];
        std::vector<std::size_t> positions(node_count);
        std::iota(positions.begin(), positions.end(), std::size_t{0});
        std::shuffle(positions.begin(), positions.end(), rng);
        positions.resize(reshuffled);
        std::vector<std::uint32_t> pool;
        pool.reserve(reshuffled);
        for (std::size_t p : positions) pool.push_back(deg[p]);
        std::shuffle(pool.begin(), pool.end(), rng);
        for (std::size_t i = 0; i < positions.size(); ++i) deg[positions[i]] = pool[i];
    }

    std::vector<MultiplexNetwork::Edge> edges;
    for (std::size_t a = 0; a < layer_count; ++a) {
        auto& deg = layer_degrees[a];
        const std::uint64_t sum = std::accumulate(deg.begin(), deg.end(), std::uint64_t{0});
        if (sum % 2 != 0) {
            std::vector<NodeIndex> positive;
            for (NodeIndex v = 0; v < node_count; ++v)
                if (deg[v] > 0) positive.push_back(v);
            std::uniform_int_distribution<std::size_t> pick(0, positive.size() - 1);
            --deg[positive[pick(rng)]];
        }
        make_graphical(deg);
        for (auto [u, v] : wire_configuration_model(deg, rng))
            edges.push_back({static_cast<LayerIndex>(a), u, v});
    }

    std::vector<std::string> node_labels(node_count);
    for (std::size_t v = 0; v < node_count; ++v) node_labels[v] = std::to_string(v);
    std::vector<std::string> layer_labels(layer_count);
    for (std::size_t a = 0; a < layer_count; ++a) layer_labels[a] = std::to_string(a + 1);
    return MultiplexNetwork(std::move(node_labels), std::move(layer_labels), edges);
}

}  // namespace mcr
