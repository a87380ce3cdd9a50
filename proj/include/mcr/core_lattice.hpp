#ifndef MCR_CORE_LATTICE_HPP_
#define MCR_CORE_LATTICE_HPP_

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "mcr/multiplex_network.hpp"
#include "mcr/node_set.hpp"

namespace mcr {

/// Per-layer degree thresholds identifying a core. Length equals the
/// network's layer count; the lattice level of a vector is its L1 norm.
class CoreVector {
public:
    CoreVector() = default;
    explicit CoreVector(std::vector<std::uint32_t> components)
        : components_(std::move(components)) {}

    static CoreVector zeros(std::size_t layer_count) {
        return CoreVector(std::vector<std::uint32_t>(layer_count, 0));
    }

    std::size_t size() const noexcept { return components_.size(); }
    std::uint32_t operator[](std::size_t i) const { return components_[i]; }
    std::span<const std::uint32_t> components() const noexcept { return components_; }

    std::uint32_t level() const;
    std::size_t nonzero_count() const;

    CoreVector incremented(std::size_t layer) const;
    /// Component-decrements of every non-zero entry: the candidate fathers.
    std::vector<CoreVector> fathers() const;

    /// "(2,1)" rendering used by exports and diagnostics.
    std::string to_string() const;

    bool operator==(const CoreVector& other) const { return components_ == other.components_; }
    bool operator<(const CoreVector& other) const { return components_ < other.components_; }

private:
    std::vector<std::uint32_t> components_;
};

struct CoreVectorHash {
    std::size_t operator()(const CoreVector& v) const noexcept;
};

using CoreId = std::uint32_t;

/// A non-empty core: its vector, its maximal member set, and the ids of its
/// stored fathers (all component-decrements are stored, by anti-monotonicity).
struct Core {
    CoreVector vector;
    NodeSet members;
    std::vector<CoreId> fathers;
};

/// Enumeration budgets. max_level == 0 means the natural bound
/// sum_over_layers(max degree); exceeding any budget raises
/// ResourceBudgetError rather than returning a truncated lattice.
struct LatticeBudget {
    std::uint32_t max_level = 0;
    std::size_t max_cores = 1'000'000;
    double time_budget_seconds = std::numeric_limits<double>::infinity();
};

/// All non-empty cores of a network, arranged in levels by the L1 norm of
/// their vectors, with father containment edges.
class CoreLattice {
public:
    std::size_t core_count() const noexcept { return cores_.size(); }
    std::size_t level_count() const noexcept { return levels_.size(); }
    std::size_t node_count() const noexcept { return node_count_; }

    const Core& core(CoreId id) const { return cores_[id]; }
    std::span<const CoreId> cores_at_level(std::size_t level) const;
    const Core* find(const CoreVector& vector) const;
    std::optional<CoreId> find_id(const CoreVector& vector) const;

private:
    friend CoreLattice build_lattice(const MultiplexNetwork&, const LatticeBudget&);

    CoreId store(Core core);

    std::size_t node_count_ = 0;
    std::vector<Core> cores_;
    std::vector<std::vector<CoreId>> levels_;
    std::unordered_map<CoreVector, CoreId, CoreVectorHash> index_;
};

/// The k-core: the unique maximal node set whose members all have per-layer
/// degree >= k[layer] inside the induced subgraph, for every layer. Empty
/// result means no non-empty set satisfies the thresholds. Throws
/// std::invalid_argument on a vector-length mismatch.
std::vector<NodeIndex> k_core(const MultiplexNetwork& net, const CoreVector& k);

/// Same fixpoint as k_core, but peels violators out of `seed` only. The true
/// core must be a subset of seed (an over-large seed is legal, merely slower).
std::vector<NodeIndex> peel_within(const MultiplexNetwork& net, const CoreVector& k,
                                   std::span<const NodeIndex> seed);

/// Enumerates every non-empty core level by level (breadth-first): level-l+1
/// candidates are the component-increments of stored level-l vectors, each
/// evaluated at most once by peeling inside the intersection of its fathers'
/// member sets. Candidates with a missing father are empty by
/// anti-monotonicity and are pruned without peeling. Level waves run in
/// parallel; the result is independent of evaluation order.
CoreLattice build_lattice(const MultiplexNetwork& net, const LatticeBudget& budget = {});

/// Number of stored (non-empty) cores, the level-0 root included.
std::size_t core_count(const CoreLattice& lattice);

}  // namespace mcr

#endif  // MCR_CORE_LATTICE_HPP_
