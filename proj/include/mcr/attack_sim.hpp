#ifndef MCR_ATTACK_SIM_HPP_
#define MCR_ATTACK_SIM_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mcr/core_lattice.hpp"
#include "mcr/multiplex_network.hpp"

namespace mcr {

enum class AttackMode { kSorted, kRandom };
enum class RankingSource { kMultiCoreRank, kDegree, kEigenvector, kBetweenness, kCloseness };
enum class Adaptivity { kStatic, kAdaptive };

/// A node-removal experiment: which nodes fall, in what order, at which
/// removal fractions. In sorted/static mode trials is forced to 1.
struct AttackPlan {
    AttackMode mode = AttackMode::kSorted;
    std::vector<double> fractions;  // strictly increasing, in [0, 1)
    RankingSource ranking_source = RankingSource::kMultiCoreRank;
    Adaptivity adaptivity = Adaptivity::kStatic;
    std::size_t trials = 50;  // random mode only
    std::uint64_t seed = 0;
    LatticeBudget budget;

    /// Throws std::invalid_argument on malformed fields.
    void validate(std::size_t node_count) const;
};

/// Measurements after removing one fraction of nodes in one trial.
struct TrialPoint {
    double fraction;
    std::size_t cores_remaining;
    double cores_pct;  // 100 * cores_remaining / baseline
    std::optional<double> assortativity;
};

/// Pointwise mean over trials (random mode); cores_remaining becomes real.
struct MeanPoint {
    double fraction;
    double cores_remaining;
    double cores_pct;
    std::optional<double> assortativity;  // mean over trials where defined
};

struct AttackTrace {
    std::size_t baseline_core_count = 0;
    std::vector<std::vector<TrialPoint>> trials;  // one entry per trial
    std::vector<MeanPoint> mean;
    /// Set when a lattice budget blew up mid-trace; points past the failing
    /// fraction are dropped rather than silently approximated.
    bool truncated = false;
};

/// Runs the attack. Sorted/static: rank once on the intact network, then for
/// each fraction f remove the top floor(f*|V|) nodes of that fixed ranking
/// (victim sets are nested). Sorted/adaptive: re-rank the survivors before
/// each incremental batch. Random: per-trial victims drawn uniformly without
/// replacement under a deterministic per-trial sub-seed; the mean trace is
/// computed pointwise. Ranking ties break by ascending external label.
AttackTrace run_attack(const MultiplexNetwork& net, const AttackPlan& plan);

/// y = a * exp(-b x) fitted by ordinary least squares on (x, ln y).
struct DecayFit {
    double a;
    double b;
    double residual;  // sum of squared log-residuals
};

/// Requires >= 2 points, all y > 0, and >= 2 distinct x (zero-core points
/// must be filtered by the caller; ln 0 is undefined). Throws
/// UndefinedMetricError otherwise.
DecayFit fit_decay(std::span<const std::pair<double, double>> points);

/// Convenience wrapper for the assortativity-after-removal table: rows
/// (fraction, global assortativity) for fraction 0 (intact) followed by the
/// requested fractions under a sorted/static attack.
std::vector<std::pair<double, std::optional<double>>> assortativity_at_removals(
    const MultiplexNetwork& net, std::span<const double> fractions,
    RankingSource ranking = RankingSource::kMultiCoreRank, const LatticeBudget& budget = {});

}  // namespace mcr

#endif  // MCR_ATTACK_SIM_HPP_
