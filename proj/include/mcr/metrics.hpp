#ifndef MCR_METRICS_HPP_
#define MCR_METRICS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mcr/multiplex_network.hpp"

namespace mcr {

/// Per-layer centrality values plus their multiplex aggregate (the sum of the
/// per-layer values), both indexed by node.
struct CentralityResult {
    std::vector<std::vector<double>> per_layer;
    std::vector<double> aggregate;
};

/// Per-layer degree and the overlapping degree (sum across layers).
CentralityResult degree_centrality(const MultiplexNetwork& net);

/// Dominant-eigenvector entries of each layer's adjacency matrix via shifted
/// power iteration (A + I, uniform positive start), normalized to unit
/// Euclidean length with non-negative orientation. Layers without edges
/// contribute all-zeros. At convergence ||A e - lambda e|| <= tolerance.
/// Throws ConvergenceError (carrying the residual) if max_iters is exhausted.
CentralityResult eigenvector_centrality(const MultiplexNetwork& net, double tolerance = 1e-10,
                                        std::size_t max_iters = 10'000);

/// Shortest-path betweenness per layer (Brandes accumulation on unweighted
/// graphs), ordered-pair convention: each unordered pair contributes twice.
CentralityResult betweenness_centrality(const MultiplexNetwork& net);

/// Component-scaled closeness: with R the nodes reachable from i in a layer,
/// c = (|R|/(n-1)) * (|R| / sum of distances), 0 when R is empty.
CentralityResult closeness_centrality(const MultiplexNetwork& net);

/// Spearman rank correlation with average-rank tie handling (the
/// product-moment correlation of the two rank vectors). Throws
/// UndefinedMetricError when either input is constant, std::invalid_argument
/// on length mismatch or fewer than two entries.
double spearman(std::span<const double> x, std::span<const double> y);

/// Layer-layer degree correlations and their mean.
struct AssortativityReport {
    struct Pair {
        LayerIndex alpha;
        LayerIndex beta;
        /// Spearman of the two degree vectors; nullopt when either is constant.
        std::optional<double> correlation;
    };

    std::vector<Pair> pairwise;  // all alpha < beta, in order
    double global = 0.0;         // mean over defined pairs
    std::size_t defined_pairs = 0;
};

/// r_{alpha,beta} = spearman(d^[alpha], d^[beta]) for each unordered layer
/// pair; pairs with a constant degree vector are reported as undefined and
/// skipped in the global mean. Throws UndefinedMetricError when every pair is
/// undefined and std::invalid_argument when layer_count < 2.
AssortativityReport assortativity(const MultiplexNetwork& net);

}  // namespace mcr

#endif  // MCR_METRICS_HPP_
