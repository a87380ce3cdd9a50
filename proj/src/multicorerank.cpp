#include "mcr/multicorerank.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mcr {

namespace {

constexpr double kUndefined = std::numeric_limits<double>::quiet_NaN();

/// log(sum(exp(t))) with the terms accumulated in ascending order, so the
/// result depends only on the multiset of terms, not on how they arrived.
double sorted_log_sum_exp(std::vector<double>& terms) {
    std::sort(terms.begin(), terms.end());
    const double top = terms.back();
    double acc = 0.0;
    for (double t : terms) acc += std::exp(t - top);
    return top + std::log(acc);
}

}  // namespace

InfluenceTable::InfluenceTable(std::vector<std::vector<double>> log_by_level,
                               std::vector<std::uint32_t> deepest_level)
    : levels_(std::move(log_by_level)), deepest_(std::move(deepest_level)) {}

bool InfluenceTable::defined(std::uint32_t level, NodeIndex v) const {
    return level < levels_.size() && !std::isnan(levels_[level][v]);
}

double InfluenceTable::log_influence(std::uint32_t level, NodeIndex v) const {
    if (!defined(level, v)) throw std::out_of_range("influence undefined at this level");
    return levels_[level][v];
}

double InfluenceTable::final_log_influence(NodeIndex v) const {
    return levels_[deepest_[v]][v];
}

double core_influence(const Core& core, std::span<const double> level_log_influences) {
    if (core.members.empty()) throw std::invalid_argument("core without members");
    std::vector<double> terms;
    terms.reserve(core.members.size());
    core.members.for_each([&](NodeIndex v) { terms.push_back(level_log_influences[v]); });
    return sorted_log_sum_exp(terms) - std::log(static_cast<double>(terms.size()));
}

InfluenceTable propagate(const CoreLattice& lattice) {
    const std::size_t n = lattice.node_count();
    if (n == 0 || lattice.core_count() == 0) return InfluenceTable({}, {});

    const std::size_t level_count = lattice.level_count();
    std::vector<std::vector<double>> table(level_count, std::vector<double>(n, kUndefined));
    std::vector<std::uint32_t> deepest(n, 0);

    // Level 0: the root holds every node with influence 1.
    lattice.core(lattice.cores_at_level(0)[0]).members.for_each(
        [&](NodeIndex v) { table[0][v] = 0.0; });

    std::vector<double> core_log(lattice.core_count(), kUndefined);
    std::vector<std::vector<CoreId>> cores_of_node(n);

    for (std::size_t l = 0; l + 1 < level_count; ++l) {
        const auto level_cores = lattice.cores_at_level(l);
        const auto child_cores = lattice.cores_at_level(l + 1);
        if (child_cores.empty()) break;

        // Influence of each level-l core (mean over members, in log domain).
        const auto& level_values = table[l];
#pragma omp parallel for schedule(static)
        for (std::size_t i = 0; i < level_cores.size(); ++i) {
            const CoreId id = level_cores[i];
            core_log[id] = core_influence(lattice.core(id), level_values);
        }

        for (auto& list : cores_of_node) list.clear();
        for (CoreId id : child_cores)
            lattice.core(id).members.for_each([&](NodeIndex v) { cores_of_node[v].push_back(id); });

        // inf_{l+1}(v) = sum over child cores C (v in C), sum over fathers F
        // of C, of (l+1) * inf_l(v) * inf(F): gather the father terms per
        // node and reduce with a sorted log-sum-exp.
        const double log_weight = std::log(static_cast<double>(l + 1));
        auto& next_values = table[l + 1];
#pragma omp parallel for schedule(dynamic, 64)
        for (std::size_t v = 0; v < n; ++v) {
            if (cores_of_node[v].empty()) continue;
            std::vector<double> terms;
            for (CoreId id : cores_of_node[v])
                for (CoreId father : lattice.core(id).fathers) terms.push_back(core_log[father]);
            next_values[v] =
                log_weight + table[l][static_cast<NodeIndex>(v)] + sorted_log_sum_exp(terms);
            deepest[v] = static_cast<std::uint32_t>(l + 1);
        }
    }
    return InfluenceTable(std::move(table), std::move(deepest));
}

std::vector<RankedNode> rank(const InfluenceTable& table, const MultiplexNetwork& net) {
    const std::size_t n = table.node_count();
    std::vector<NodeIndex> order(n);
    std::iota(order.begin(), order.end(), NodeIndex{0});
    std::sort(order.begin(), order.end(), [&](NodeIndex a, NodeIndex b) {
        if (table.deepest_level(a) != table.deepest_level(b))
            return table.deepest_level(a) > table.deepest_level(b);
        const double fa = table.final_log_influence(a);
        const double fb = table.final_log_influence(b);
        if (fa != fb) return fa > fb;
        return net.node_label(a) < net.node_label(b);
    });

    std::vector<RankedNode> ranked(n);
    for (std::size_t i = 0; i < n; ++i) {
        const NodeIndex v = order[i];
        ranked[i] = {v, table.deepest_level(v), table.final_log_influence(v), 0.0};
    }
    // Fractional ranks: tied (level, influence) groups share the average of
    // their 1-based positions.
    std::size_t start = 0;
    while (start < n) {
        std::size_t end = start + 1;
        while (end < n && ranked[end].deepest_level == ranked[start].deepest_level &&
               ranked[end].log_influence == ranked[start].log_influence)
            ++end;
        const double shared = (static_cast<double>(start + 1) + static_cast<double>(end)) / 2.0;
        for (std::size_t i = start; i < end; ++i) ranked[i].average_rank = shared;
        start = end;
    }
    return ranked;
}

std::vector<double> rank_scores(const std::vector<RankedNode>& ranking, std::size_t node_count) {
    std::vector<double> scores(node_count, 0.0);
    for (const RankedNode& r : ranking)
        scores[r.node] = static_cast<double>(node_count) - r.average_rank;
    return scores;
}

}  // namespace mcr
