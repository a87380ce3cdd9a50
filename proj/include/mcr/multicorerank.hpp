#ifndef MCR_MULTICORERANK_HPP_
#define MCR_MULTICORERANK_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "mcr/core_lattice.hpp"
#include "mcr/multiplex_network.hpp"

namespace mcr {

/// Per-node, per-level influence in the natural-log domain, plus the derived
/// final scores. A node's level-l entry is defined iff the node appears in
/// some stored level-l core; by core containment those levels form the
/// contiguous range 0..deepest_level(v).
class InfluenceTable {
public:
    InfluenceTable() = default;
    InfluenceTable(std::vector<std::vector<double>> log_by_level,
                   std::vector<std::uint32_t> deepest_level);

    std::size_t node_count() const noexcept { return deepest_.size(); }
    std::size_t level_count() const noexcept { return levels_.size(); }

    bool defined(std::uint32_t level, NodeIndex v) const;
    /// log inf_level(v); only valid where defined().
    double log_influence(std::uint32_t level, NodeIndex v) const;

    std::uint32_t deepest_level(NodeIndex v) const { return deepest_[v]; }
    /// log influence at the node's deepest appearance level.
    double final_log_influence(NodeIndex v) const;

private:
    std::vector<std::vector<double>> levels_;  // [level][node], NaN = undefined
    std::vector<std::uint32_t> deepest_;
};

/// log of the mean level influence of a core's members (log-sum-exp minus
/// log member count; terms accumulated in sorted order so the value does not
/// depend on iteration order). `level_log_influences` is indexed by node.
double core_influence(const Core& core, std::span<const double> level_log_influences);

/// Fills the influence table bottom-up from the all-ones level 0: a node's
/// level-(l+1) influence is the sum, over every stored level-(l+1) core C
/// containing it and every father F of C, of (l+1) * inf_l(v) * inf(F).
/// All sums run in the log domain via sorted log-sum-exp, so values never
/// overflow and the resulting ordering is exact.
InfluenceTable propagate(const CoreLattice& lattice);

/// One ranked node: deepest lattice level, log influence at that level, and
/// the fractional rank (ties share the average of their positions, 1 = most
/// influential) used for rank correlations.
struct RankedNode {
    NodeIndex node;
    std::uint32_t deepest_level;
    double log_influence;
    double average_rank;
};

/// Total order: descending by (deepest_level, log influence), ties broken by
/// ascending external label. Returned in rank order.
std::vector<RankedNode> rank(const InfluenceTable& table, const MultiplexNetwork& net);

/// Scalar per-node score order-isomorphic to the ranking (node_count minus
/// average rank, so larger = more influential), indexed by node. This is the
/// value the CLI reports for the `multicorerank` measure and the input to
/// rank correlations against other centralities.
std::vector<double> rank_scores(const std::vector<RankedNode>& ranking, std::size_t node_count);

}  // namespace mcr

#endif  // MCR_MULTICORERANK_HPP_
