#include "mcr/core_lattice.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "mcr/errors.hpp"

namespace mcr {

std::uint32_t CoreVector::level() const {
    return std::accumulate(components_.begin(), components_.end(), std::uint32_t{0});
}

std::size_t CoreVector::nonzero_count() const {
    return static_cast<std::size_t>(
        std::count_if(components_.begin(), components_.end(), [](auto c) { return c != 0; }));
}

CoreVector CoreVector::incremented(std::size_t layer) const {
    std::vector<std::uint32_t> next(components_);
    ++next[layer];
    return CoreVector(std::move(next));
}

std::vector<CoreVector> CoreVector::fathers() const {
    std::vector<CoreVector> out;
    out.reserve(nonzero_count());
    for (std::size_t a = 0; a < components_.size(); ++a) {
        if (components_[a] == 0) continue;
        std::vector<std::uint32_t> fewer(components_);
        --fewer[a];
        out.emplace_back(std::move(fewer));
    }
    return out;
}

std::string CoreVector::to_string() const {
    std::string s = "(";
    for (std::size_t a = 0; a < components_.size(); ++a) {
        if (a != 0) s += ',';
        s += std::to_string(components_[a]);
    }
    s += ')';
    return s;
}

std::size_t CoreVectorHash::operator()(const CoreVector& v) const noexcept {
    std::size_t h = 1469598103934665603ull;  // FNV-1a
    for (std::uint32_t c : v.components()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::span<const CoreId> CoreLattice::cores_at_level(std::size_t level) const {
    if (level >= levels_.size()) return {};
    return levels_[level];
}

const Core* CoreLattice::find(const CoreVector& vector) const {
    auto it = index_.find(vector);
    if (it == index_.end()) return nullptr;
    return &cores_[it->second];
}

std::optional<CoreId> CoreLattice::find_id(const CoreVector& vector) const {
    auto it = index_.find(vector);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

CoreId CoreLattice::store(Core core) {
    const CoreId id = static_cast<CoreId>(cores_.size());
    const std::uint32_t level = core.vector.level();
    if (levels_.size() <= level) levels_.resize(level + 1);
    levels_[level].push_back(id);
    index_.emplace(core.vector, id);
    cores_.push_back(std::move(core));
    return id;
}

std::vector<NodeIndex> peel_within(const MultiplexNetwork& net, const CoreVector& k,
                                   std::span<const NodeIndex> seed) {
    if (k.size() != net.layer_count())
        throw std::invalid_argument("core vector length != layer count");
    const std::size_t n = net.node_count();
    const std::size_t layers = net.layer_count();

    std::vector<char> in(n, 0);
    for (NodeIndex v : seed) in[v] = 1;

    // Induced per-layer degrees inside the seed.
    std::vector<std::uint32_t> deg(layers * n, 0);
    for (NodeIndex v : seed) {
        for (std::size_t a = 0; a < layers; ++a) {
            std::uint32_t d = 0;
            for (NodeIndex w : net.neighbors(static_cast<LayerIndex>(a), v))
                if (in[w]) ++d;
            deg[a * n + v] = d;
        }
    }

    std::vector<NodeIndex> stack;
    for (NodeIndex v : seed) {
        for (std::size_t a = 0; a < layers; ++a) {
            if (deg[a * n + v] < k[a]) {
                in[v] = 0;
                stack.push_back(v);
                break;
            }
        }
    }
    while (!stack.empty()) {
        const NodeIndex v = stack.back();
        stack.pop_back();
        for (std::size_t a = 0; a < layers; ++a) {
            for (NodeIndex w : net.neighbors(static_cast<LayerIndex>(a), v)) {
                if (!in[w]) continue;
                if (--deg[a * n + w] < k[a]) {
                    in[w] = 0;
                    stack.push_back(w);
                }
            }
        }
    }

    std::vector<NodeIndex> survivors;
    for (NodeIndex v : seed)
        if (in[v]) survivors.push_back(v);
    return survivors;
}

std::vector<NodeIndex> k_core(const MultiplexNetwork& net, const CoreVector& k) {
    std::vector<NodeIndex> all(net.node_count());
    std::iota(all.begin(), all.end(), NodeIndex{0});
    return peel_within(net, k, all);
}

CoreLattice build_lattice(const MultiplexNetwork& net, const LatticeBudget& budget) {
    using Clock = std::chrono::steady_clock;
    const auto deadline_start = Clock::now();
    auto elapsed_seconds = [&] {
        return std::chrono::duration<double>(Clock::now() - deadline_start).count();
    };

    CoreLattice lattice;
    lattice.node_count_ = net.node_count();
    if (net.node_count() == 0) return lattice;

    const std::size_t layers = net.layer_count();
    std::vector<std::uint32_t> component_limit(layers);
    std::uint32_t natural_max_level = 0;
    for (std::size_t a = 0; a < layers; ++a) {
        component_limit[a] = net.max_degree(static_cast<LayerIndex>(a));
        natural_max_level += component_limit[a];
    }
    const std::uint32_t max_level =
        budget.max_level == 0 ? natural_max_level : budget.max_level;

    std::vector<CoreId> current;
    current.push_back(lattice.store(
        Core{CoreVector::zeros(layers), NodeSet::full(net.node_count()), {}}));

    for (std::uint32_t level = 0; !current.empty(); ++level) {
        if (elapsed_seconds() > budget.time_budget_seconds)
            throw ResourceBudgetError("lattice time budget exceeded at level " +
                                      std::to_string(level));

        // Candidates: component-increments of stored level vectors, deduplicated.
        // Increments past a layer's maximum degree are provably empty.
        std::vector<CoreVector> candidates;
        for (CoreId id : current) {
            const CoreVector& base = lattice.core(id).vector;
            for (std::size_t a = 0; a < layers; ++a) {
                if (base[a] + 1 > component_limit[a]) continue;
                candidates.push_back(base.incremented(a));
            }
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        if (candidates.empty()) break;
        if (level + 1 > max_level)
            throw ResourceBudgetError("lattice level budget (" + std::to_string(max_level) +
                                      ") exceeded with candidates outstanding");

        // Each candidate is independent given the finished level below;
        // peel them concurrently, then store in deterministic order.
        const std::size_t count = candidates.size();
        std::vector<std::vector<NodeIndex>> members(count);
        std::vector<std::vector<CoreId>> father_ids(count);
        std::atomic<bool> expired{false};

#pragma omp parallel for schedule(dynamic, 16)
        for (std::size_t i = 0; i < count; ++i) {
            if (expired.load(std::memory_order_relaxed)) continue;
            if (i % 256 == 0 && elapsed_seconds() > budget.time_budget_seconds) {
                expired.store(true, std::memory_order_relaxed);
                continue;
            }
            const CoreVector& cand = candidates[i];
            std::vector<CoreId> fathers;
            bool complete = true;
            for (const CoreVector& f : cand.fathers()) {
                const auto father = lattice.find_id(f);
                if (!father) {
                    complete = false;  // missing father => empty by anti-monotonicity
                    break;
                }
                fathers.push_back(*father);
            }
            if (!complete) continue;

            NodeSet seed = lattice.core(fathers[0]).members;
            for (std::size_t f = 1; f < fathers.size(); ++f)
                seed = NodeSet::intersection(seed, lattice.core(fathers[f]).members);
            if (seed.empty()) continue;
            members[i] = peel_within(net, cand, seed.to_vector());
            father_ids[i] = std::move(fathers);
        }
        if (expired.load())
            throw ResourceBudgetError("lattice time budget exceeded at level " +
                                      std::to_string(level + 1));

        std::vector<CoreId> next;
        for (std::size_t i = 0; i < count; ++i) {
            if (members[i].empty()) continue;
            NodeSet set(std::move(members[i]), net.node_count());
            next.push_back(lattice.store(
                Core{candidates[i], std::move(set), std::move(father_ids[i])}));
            if (lattice.core_count() > budget.max_cores)
                throw ResourceBudgetError("lattice core budget (" +
                                          std::to_string(budget.max_cores) + ") exceeded");
        }
        current = std::move(next);
    }
    return lattice;
}

std::size_t core_count(const CoreLattice& lattice) { return lattice.core_count(); }

}  // namespace mcr
