#include "mcr/attack_sim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "mcr/errors.hpp"
#include "mcr/metrics.hpp"
#include "mcr/multicorerank.hpp"

namespace mcr {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::optional<double> safe_assortativity(const MultiplexNetwork& net) {
    if (net.layer_count() < 2 || net.node_count() < 2) return std::nullopt;
    try {
        return assortativity(net).global;
    } catch (const UndefinedMetricError&) {
        return std::nullopt;
    }
}

/// Nodes in removal order (most influential first), ranking ties broken by
/// ascending external label. May throw ResourceBudgetError via the lattice.
std::vector<NodeIndex> removal_order(const MultiplexNetwork& net, RankingSource source,
                                     const LatticeBudget& budget,
                                     const CoreLattice* prebuilt = nullptr) {
    if (source == RankingSource::kMultiCoreRank) {
        CoreLattice local;
        if (prebuilt == nullptr) local = build_lattice(net, budget);
        const auto ranking = rank(propagate(prebuilt ? *prebuilt : local), net);
        std::vector<NodeIndex> order;
        order.reserve(ranking.size());
        for (const RankedNode& r : ranking) order.push_back(r.node);
        return order;
    }
    std::vector<double> score;
    switch (source) {
        case RankingSource::kDegree:
            score = degree_centrality(net).aggregate;
            break;
        case RankingSource::kEigenvector:
            score = eigenvector_centrality(net).aggregate;
            break;
        case RankingSource::kBetweenness:
            score = betweenness_centrality(net).aggregate;
            break;
        case RankingSource::kCloseness:
            score = closeness_centrality(net).aggregate;
            break;
        default:
            throw std::logic_error("unreachable");
    }
    std::vector<NodeIndex> order(net.node_count());
    std::iota(order.begin(), order.end(), NodeIndex{0});
    std::sort(order.begin(), order.end(), [&](NodeIndex a, NodeIndex b) {
        if (score[a] != score[b]) return score[a] > score[b];
        return net.node_label(a) < net.node_label(b);
    });
    return order;
}

TrialPoint measure_point(const MultiplexNetwork& residual, double fraction,
                         std::size_t baseline, const LatticeBudget& budget) {
    const std::size_t cores = build_lattice(residual, budget).core_count();
    return {fraction, cores, 100.0 * static_cast<double>(cores) / static_cast<double>(baseline),
            safe_assortativity(residual)};
}

/// One full trace for a fixed removal order (prefix victims per fraction).
/// Fractions are independent; they run in parallel. On a budget blow-up the
/// trace is cut before the first failing fraction and flagged.
std::pair<std::vector<TrialPoint>, bool> trace_fixed_order(
    const MultiplexNetwork& net, const std::vector<NodeIndex>& order,
    std::span<const double> fractions, std::size_t baseline, const LatticeBudget& budget) {
    const std::size_t count = fractions.size();
    std::vector<TrialPoint> points(count);
    std::vector<char> failed(count, 0);
    std::exception_ptr unexpected = nullptr;

#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < count; ++i) {
        try {
            const auto victims_end =
                order.begin() + static_cast<std::ptrdiff_t>(std::floor(
                                    fractions[i] * static_cast<double>(net.node_count())));
            const MultiplexNetwork residual =
                net.remove_nodes(std::vector<NodeIndex>(order.begin(), victims_end));
            points[i] = measure_point(residual, fractions[i], baseline, budget);
        } catch (const ResourceBudgetError&) {
            failed[i] = 1;
        } catch (...) {
#pragma omp critical
            if (!unexpected) unexpected = std::current_exception();
        }
    }
    if (unexpected) std::rethrow_exception(unexpected);

    const auto first_failed = std::find(failed.begin(), failed.end(), 1);
    const bool truncated = first_failed != failed.end();
    points.resize(static_cast<std::size_t>(first_failed - failed.begin()));
    return {std::move(points), truncated};
}

}  // namespace

void AttackPlan::validate(std::size_t node_count) const {
    if (fractions.empty()) throw std::invalid_argument("attack plan needs at least one fraction");
    for (std::size_t i = 0; i < fractions.size(); ++i) {
        if (!(fractions[i] >= 0.0 && fractions[i] < 1.0))
            throw std::invalid_argument("fractions must lie in [0, 1)");
        if (i > 0 && !(fractions[i] > fractions[i - 1]))
            throw std::invalid_argument("fractions must be strictly increasing");
    }
    if (mode == AttackMode::kRandom && trials == 0)
        throw std::invalid_argument("random mode needs at least one trial");
    if (node_count == 0) throw std::invalid_argument("cannot attack an empty network");
}

AttackTrace run_attack(const MultiplexNetwork& net, const AttackPlan& plan) {
    plan.validate(net.node_count());
    const std::size_t n = net.node_count();

    AttackTrace trace;
    const CoreLattice baseline_lattice = build_lattice(net, plan.budget);
    trace.baseline_core_count = baseline_lattice.core_count();

    if (plan.mode == AttackMode::kSorted) {
        if (plan.adaptivity == Adaptivity::kStatic) {
            const auto order =
                removal_order(net, plan.ranking_source, plan.budget, &baseline_lattice);
            auto [points, truncated] = trace_fixed_order(net, order, plan.fractions,
                                                         trace.baseline_core_count, plan.budget);
            trace.truncated = truncated;
            trace.trials.push_back(std::move(points));
        } else {
            // Adaptive: re-rank the survivors before every incremental batch.
            // Victims accumulate as original-network indices.
            std::vector<TrialPoint> points;
            std::vector<NodeIndex> victims;
            std::size_t prev_count = 0;
            MultiplexNetwork survivors = net;
            try {
                for (double f : plan.fractions) {
                    const auto target =
                        static_cast<std::size_t>(std::floor(f * static_cast<double>(n)));
                    if (target > prev_count) {
                        const auto order =
                            removal_order(survivors, plan.ranking_source, plan.budget);
                        for (std::size_t i = 0; i < target - prev_count; ++i) {
                            const NodeIndex original =
                                *net.find_node(survivors.node_label(order[i]));
                            victims.push_back(original);
                        }
                        prev_count = target;
                        survivors = net.remove_nodes(victims);
                    }
                    points.push_back(
                        measure_point(survivors, f, trace.baseline_core_count, plan.budget));
                }
            } catch (const ResourceBudgetError&) {
                trace.truncated = true;
            }
            trace.trials.push_back(std::move(points));
        }
        trace.mean.reserve(trace.trials[0].size());
        for (const TrialPoint& p : trace.trials[0])
            trace.mean.push_back(
                {p.fraction, static_cast<double>(p.cores_remaining), p.cores_pct, p.assortativity});
        return trace;
    }

    // Random mode: per-trial uniform victim permutations under deterministic
    // sub-seeds; trials are independent and run in parallel.
    trace.trials.resize(plan.trials);
    std::vector<char> truncated_trials(plan.trials, 0);
    std::exception_ptr unexpected = nullptr;

#pragma omp parallel for schedule(dynamic)
    for (std::size_t t = 0; t < plan.trials; ++t) {
        try {
            std::mt19937_64 rng(splitmix64(plan.seed ^ (0x5151'5151ull * (t + 1))));
            std::vector<NodeIndex> order(n);
            std::iota(order.begin(), order.end(), NodeIndex{0});
            std::shuffle(order.begin(), order.end(), rng);

            std::vector<TrialPoint> points;
            for (double f : plan.fractions) {
                const auto m = static_cast<std::size_t>(std::floor(f * static_cast<double>(n)));
                const MultiplexNetwork residual =
                    net.remove_nodes(std::vector<NodeIndex>(order.begin(),
                                                            order.begin() +
                                                                static_cast<std::ptrdiff_t>(m)));
                points.push_back(
                    measure_point(residual, f, trace.baseline_core_count, plan.budget));
            }
            trace.trials[t] = std::move(points);
        } catch (const ResourceBudgetError&) {
            truncated_trials[t] = 1;
        } catch (...) {
#pragma omp critical
            if (!unexpected) unexpected = std::current_exception();
        }
    }
    if (unexpected) std::rethrow_exception(unexpected);

    trace.truncated = std::find(truncated_trials.begin(), truncated_trials.end(), 1) !=
                      truncated_trials.end();
    std::size_t common = plan.fractions.size();
    for (const auto& trial : trace.trials) common = std::min(common, trial.size());
    for (std::size_t i = 0; i < common; ++i) {
        MeanPoint mean{plan.fractions[i], 0.0, 0.0, std::nullopt};
        double assort_sum = 0.0;
        std::size_t assort_count = 0;
        for (const auto& trial : trace.trials) {
            mean.cores_remaining += static_cast<double>(trial[i].cores_remaining);
            mean.cores_pct += trial[i].cores_pct;
            if (trial[i].assortativity) {
                assort_sum += *trial[i].assortativity;
                ++assort_count;
            }
        }
        const auto count = static_cast<double>(trace.trials.size());
        mean.cores_remaining /= count;
        mean.cores_pct /= count;
        if (assort_count > 0) mean.assortativity = assort_sum / static_cast<double>(assort_count);
        trace.mean.push_back(mean);
    }
    return trace;
}

DecayFit fit_decay(std::span<const std::pair<double, double>> points) {
    if (points.size() < 2)
        throw UndefinedMetricError("decay fit needs at least two points");
    for (const auto& [x, y] : points)
        if (!(y > 0.0))
            throw std::invalid_argument("decay fit requires positive y values (filter zeros out)");
    const bool distinct_x = std::any_of(points.begin(), points.end(), [&](const auto& p) {
        return p.first != points.front().first;
    });
    if (!distinct_x) throw UndefinedMetricError("decay fit needs at least two distinct x values");

    // Ordinary least squares on (x, ln y): slope -b, intercept ln a.
    const double n = static_cast<double>(points.size());
    double mx = 0.0, mz = 0.0;
    for (const auto& [x, y] : points) {
        mx += x;
        mz += std::log(y);
    }
    mx /= n;
    mz /= n;
    double sxz = 0.0, sxx = 0.0;
    for (const auto& [x, y] : points) {
        const double dx = x - mx;
        sxz += dx * (std::log(y) - mz);
        sxx += dx * dx;
    }
    const double slope = sxz / sxx;
    const double intercept = mz - slope * mx;
    double residual = 0.0;
    for (const auto& [x, y] : points) {
        const double r = std::log(y) - (intercept + slope * x);
        residual += r * r;
    }
    return {std::exp(intercept), -slope, residual};
}

std::vector<std::pair<double, std::optional<double>>> assortativity_at_removals(
    const MultiplexNetwork& net, std::span<const double> fractions, RankingSource ranking,
    const LatticeBudget& budget) {
    AttackPlan plan;
    plan.mode = AttackMode::kSorted;
    plan.adaptivity = Adaptivity::kStatic;
    plan.ranking_source = ranking;
    plan.budget = budget;
    plan.fractions.assign(fractions.begin(), fractions.end());

    std::vector<std::pair<double, std::optional<double>>> rows;
    if (plan.fractions.empty() || plan.fractions.front() != 0.0)
        rows.emplace_back(0.0, safe_assortativity(net));
    if (!plan.fractions.empty()) {
        const AttackTrace trace = run_attack(net, plan);
        for (const TrialPoint& p : trace.trials[0]) rows.emplace_back(p.fraction, p.assortativity);
    }
    return rows;
}

}  // namespace mcr
