#include "mcr/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

#include "mcr/errors.hpp"

namespace mcr {

namespace {

std::vector<double> to_doubles(const std::vector<std::uint32_t>& v) {
    return {v.begin(), v.end()};
}

void add_into(std::vector<double>& acc, const std::vector<double>& part) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += part[i];
}

bool is_constant(std::span<const double> x) {
    return std::adjacent_find(x.begin(), x.end(), std::not_equal_to<>{}) == x.end();
}

/// Average ranks (1-based), ties share the mean of their positions.
std::vector<double> average_ranks(std::span<const double> x) {
    const std::size_t n = x.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    std::vector<double> ranks(n);
    std::size_t start = 0;
    while (start < n) {
        std::size_t end = start + 1;
        while (end < n && x[order[end]] == x[order[start]]) ++end;
        const double shared = (static_cast<double>(start + 1) + static_cast<double>(end)) / 2.0;
        for (std::size_t i = start; i < end; ++i) ranks[order[i]] = shared;
        start = end;
    }
    return ranks;
}

double pearson(std::span<const double> x, std::span<const double> y) {
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace

CentralityResult degree_centrality(const MultiplexNetwork& net) {
    CentralityResult out;
    out.per_layer.resize(net.layer_count());
    out.aggregate.assign(net.node_count(), 0.0);
    for (std::size_t a = 0; a < net.layer_count(); ++a) {
        out.per_layer[a] = to_doubles(net.degree_vector(static_cast<LayerIndex>(a)));
        add_into(out.aggregate, out.per_layer[a]);
    }
    return out;
}

CentralityResult eigenvector_centrality(const MultiplexNetwork& net, double tolerance,
                                        std::size_t max_iters) {
    if (tolerance <= 0.0) throw std::invalid_argument("tolerance must be positive");
    const std::size_t n = net.node_count();
    CentralityResult out;
    out.per_layer.resize(net.layer_count());
    out.aggregate.assign(n, 0.0);

    for (std::size_t a = 0; a < net.layer_count(); ++a) {
        const auto layer = static_cast<LayerIndex>(a);
        if (net.edge_count(layer) == 0) {
            out.per_layer[a].assign(n, 0.0);
            continue;
        }
        // Shifted power iteration (A + I keeps the Perron direction dominant
        // on bipartite layers), uniform positive start, one matvec per step.
        std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
        std::vector<double> ax(n, 0.0);
        double residual = 0.0;
        bool converged = false;
        for (std::size_t iter = 0; iter < max_iters; ++iter) {
#pragma omp parallel for schedule(static)
            for (std::size_t v = 0; v < n; ++v) {
                double sum = 0.0;
                for (NodeIndex w : net.neighbors(layer, static_cast<NodeIndex>(v))) sum += x[w];
                ax[v] = sum;
            }
            double rayleigh = 0.0;
            for (std::size_t v = 0; v < n; ++v) rayleigh += x[v] * ax[v];
            double res2 = 0.0;
            for (std::size_t v = 0; v < n; ++v) {
                const double r = ax[v] - rayleigh * x[v];
                res2 += r * r;
            }
            residual = std::sqrt(res2);
            if (residual <= tolerance) {
                converged = true;
                break;
            }
            double norm2 = 0.0;
            for (std::size_t v = 0; v < n; ++v) {
                x[v] += ax[v];
                norm2 += x[v] * x[v];
            }
            const double inv = 1.0 / std::sqrt(norm2);
            for (std::size_t v = 0; v < n; ++v) x[v] *= inv;
        }
        if (!converged)
            throw ConvergenceError("eigenvector centrality did not converge on layer '" +
                                       net.layer_label(layer) + "' (residual " +
                                       std::to_string(residual) + ")",
                                   residual);
        out.per_layer[a] = std::move(x);
        add_into(out.aggregate, out.per_layer[a]);
    }
    return out;
}

CentralityResult betweenness_centrality(const MultiplexNetwork& net) {
    const std::size_t n = net.node_count();
    CentralityResult out;
    out.per_layer.resize(net.layer_count());
    out.aggregate.assign(n, 0.0);

    // Sources are processed in fixed blocks, each block accumulating into its
    // own buffer; block buffers are then summed in order, so the result does
    // not depend on the thread count.
    constexpr std::size_t kBlock = 64;
    const std::size_t blocks = (n + kBlock - 1) / kBlock;

    for (std::size_t a = 0; a < net.layer_count(); ++a) {
        const auto layer = static_cast<LayerIndex>(a);
        std::vector<std::vector<double>> block_acc(blocks);

#pragma omp parallel for schedule(dynamic)
        for (std::size_t b = 0; b < blocks; ++b) {
            std::vector<double>& acc = block_acc[b];
            acc.assign(n, 0.0);
            std::vector<std::uint64_t> sigma(n);
            std::vector<std::int32_t> dist(n);
            std::vector<double> delta(n);
            std::vector<std::vector<NodeIndex>> preds(n);
            std::vector<NodeIndex> visit_order;
            visit_order.reserve(n);

            const std::size_t lo = b * kBlock;
            const std::size_t hi = std::min(n, lo + kBlock);
            for (std::size_t s = lo; s < hi; ++s) {
                std::fill(sigma.begin(), sigma.end(), 0);
                std::fill(dist.begin(), dist.end(), -1);
                std::fill(delta.begin(), delta.end(), 0.0);
                for (auto& p : preds) p.clear();
                visit_order.clear();

                sigma[s] = 1;
                dist[s] = 0;
                std::queue<NodeIndex> queue;
                queue.push(static_cast<NodeIndex>(s));
                while (!queue.empty()) {
                    const NodeIndex v = queue.front();
                    queue.pop();
                    visit_order.push_back(v);
                    for (NodeIndex w : net.neighbors(layer, v)) {
                        if (dist[w] < 0) {
                            dist[w] = dist[v] + 1;
                            queue.push(w);
                        }
                        if (dist[w] == dist[v] + 1) {
                            sigma[w] += sigma[v];
                            preds[w].push_back(v);
                        }
                    }
                }
                for (auto it = visit_order.rbegin(); it != visit_order.rend(); ++it) {
                    const NodeIndex w = *it;
                    for (NodeIndex p : preds[w])
                        delta[p] += static_cast<double>(sigma[p]) / static_cast<double>(sigma[w]) *
                                    (1.0 + delta[w]);
                    if (w != static_cast<NodeIndex>(s)) acc[w] += delta[w];
                }
            }
        }

        std::vector<double> bc(n, 0.0);
        for (const auto& acc : block_acc) add_into(bc, acc);
        // Ordered-pair convention: each unordered pair counted in both
        // directions, i.e. Brandes sums left undivided.
        out.per_layer[a] = std::move(bc);
        add_into(out.aggregate, out.per_layer[a]);
    }
    return out;
}

CentralityResult closeness_centrality(const MultiplexNetwork& net) {
    const std::size_t n = net.node_count();
    CentralityResult out;
    out.per_layer.resize(net.layer_count());
    out.aggregate.assign(n, 0.0);

    for (std::size_t a = 0; a < net.layer_count(); ++a) {
        const auto layer = static_cast<LayerIndex>(a);
        std::vector<double> close(n, 0.0);

#pragma omp parallel for schedule(dynamic, 16)
        for (std::size_t s = 0; s < n; ++s) {
            std::vector<std::int32_t> dist(n, -1);
            dist[s] = 0;
            std::queue<NodeIndex> queue;
            queue.push(static_cast<NodeIndex>(s));
            std::size_t reachable = 0;
            double total = 0.0;
            while (!queue.empty()) {
                const NodeIndex v = queue.front();
                queue.pop();
                for (NodeIndex w : net.neighbors(layer, v)) {
                    if (dist[w] >= 0) continue;
                    dist[w] = dist[v] + 1;
                    ++reachable;
                    total += dist[w];
                    queue.push(w);
                }
            }
            if (reachable == 0 || n < 2) continue;
            const double r = static_cast<double>(reachable);
            // Component-scaled closeness: (|R|/(n-1)) * (|R| / sum dist).
            close[s] = (r / static_cast<double>(n - 1)) * (r / total);
        }
        out.per_layer[a] = std::move(close);
        add_into(out.aggregate, out.per_layer[a]);
    }
    return out;
}

double spearman(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("length mismatch");
    if (x.size() < 2) throw std::invalid_argument("need at least two observations");
    if (is_constant(x) || is_constant(y))
        throw UndefinedMetricError("rank correlation undefined for a constant vector");
    const auto rx = average_ranks(x);
    const auto ry = average_ranks(y);
    return pearson(rx, ry);
}

AssortativityReport assortativity(const MultiplexNetwork& net) {
    if (net.layer_count() < 2)
        throw std::invalid_argument("assortativity needs at least two layers");
    AssortativityReport report;
    double sum = 0.0;
    for (std::size_t a = 0; a < net.layer_count(); ++a) {
        const auto da = to_doubles(net.degree_vector(static_cast<LayerIndex>(a)));
        for (std::size_t b = a + 1; b < net.layer_count(); ++b) {
            const auto db = to_doubles(net.degree_vector(static_cast<LayerIndex>(b)));
            AssortativityReport::Pair pair{static_cast<LayerIndex>(a), static_cast<LayerIndex>(b),
                                           std::nullopt};
            if (!is_constant(da) && !is_constant(db)) {
                pair.correlation = spearman(da, db);
                sum += *pair.correlation;
                ++report.defined_pairs;
            }
            report.pairwise.push_back(pair);
        }
    }
    if (report.defined_pairs == 0)
        throw UndefinedMetricError("all layer pairs have a constant degree vector");
    report.global = sum / static_cast<double>(report.defined_pairs);
    return report;
}

}  // namespace mcr
