#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mcr/core_lattice.hpp"
#include "mcr/errors.hpp"
#include "mcr/reference.hpp"
#include "support/fixtures.hpp"

using namespace mcr;
using mcr::testing::example_network;
using mcr::testing::lattice_label_map;
using mcr::testing::member_labels;

namespace {

std::map<std::vector<std::uint32_t>, std::set<std::string>> reference_label_map(
    const MultiplexNetwork& net) {
    std::map<std::vector<std::uint32_t>, std::set<std::string>> out;
    for (const auto& [vec, members] : reference::enumerate_cores(net))
        out.emplace(vec, member_labels(members, net));
    return out;
}

}  // namespace

TEST_CASE("k_core on the example network matches the worked cores") {
    const auto net = example_network();
    CHECK(member_labels(k_core(net, CoreVector({1, 2})), net) ==
          std::set<std::string>{"A", "B", "D", "E"});
    CHECK(member_labels(k_core(net, CoreVector({2, 2})), net) ==
          std::set<std::string>{"B", "D", "E"});
    CHECK(k_core(net, CoreVector({0, 0})).size() == 6);
    CHECK(k_core(net, CoreVector({0, 3})).empty());
    CHECK_THROWS_AS(k_core(net, CoreVector({1, 1, 1})), std::invalid_argument);
}

TEST_CASE("peel_within agrees with k_core for any legal seed") {
    const auto net = example_network();

    std::vector<NodeIndex> everyone(net.node_count());
    std::iota(everyone.begin(), everyone.end(), NodeIndex{0});
    CHECK(peel_within(net, CoreVector({2, 1}), everyone) == k_core(net, CoreVector({2, 1})));

    // Father intersection for (2,2): C_(1,2) n C_(2,1) = {B,D,E}.
    const auto f1 = k_core(net, CoreVector({1, 2}));
    const auto f2 = k_core(net, CoreVector({2, 1}));
    std::vector<NodeIndex> seed;
    std::set_intersection(f1.begin(), f1.end(), f2.begin(), f2.end(), std::back_inserter(seed));
    CHECK(member_labels(seed, net) == std::set<std::string>{"B", "D", "E"});
    CHECK(peel_within(net, CoreVector({2, 2}), seed) == k_core(net, CoreVector({2, 2})));

    CHECK(peel_within(net, CoreVector({1, 1}), {}).empty());
}

TEST_CASE("build_lattice on the example network yields exactly the 11 known cores") {
    const auto net = example_network();
    const auto lattice = build_lattice(net);
    CHECK(lattice.core_count() == 11);
    CHECK(core_count(lattice) == 11);
    CHECK(lattice_label_map(lattice, net) == mcr::testing::example_lattice_expected());

    // Father rule: stored fathers are exactly the component-decrements.
    for (std::size_t level = 1; level < lattice.level_count(); ++level) {
        for (CoreId id : lattice.cores_at_level(level)) {
            const Core& core = lattice.core(id);
            const auto expected = core.vector.fathers();
            REQUIRE(core.fathers.size() == expected.size());
            REQUIRE(core.fathers.size() == core.vector.nonzero_count());
            for (std::size_t i = 0; i < expected.size(); ++i)
                CHECK(lattice.core(core.fathers[i]).vector == expected[i]);
        }
    }
    CHECK(lattice.find(CoreVector({0, 3})) == nullptr);
    CHECK(lattice.find(CoreVector({2, 2})) != nullptr);
}

TEST_CASE("edgeless network has the single root core") {
    const MultiplexNetwork net({"A", "B", "C"}, {"1", "2"}, {});
    const auto lattice = build_lattice(net);
    CHECK(lattice.core_count() == 1);
    const Core& root = lattice.core(lattice.cores_at_level(0)[0]);
    CHECK(root.vector == CoreVector::zeros(2));
    CHECK(root.members.size() == 3);
}

TEST_CASE("empty network yields an empty lattice") {
    const MultiplexNetwork net({}, {"1", "2"}, {});
    CHECK(build_lattice(net).core_count() == 0);
}

TEST_CASE("lattice equals brute-force enumeration on random networks") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t layers = 2 + (trial % 2);
        const auto net = mcr::testing::random_test_network(10, layers, 0.35, rng);
        const auto lattice = build_lattice(net);
        CHECK(lattice_label_map(lattice, net) == reference_label_map(net));
    }
}

TEST_CASE("core count after removing B matches brute force") {
    const auto net = example_network();
    const auto residual = net.remove_nodes({*net.find_node("B")});
    const auto lattice = build_lattice(residual);
    CHECK(lattice.core_count() == reference::enumerate_cores(residual).size());
    CHECK(lattice.core_count() == 6);  // frozen from the brute-force oracle
}

TEST_CASE("core containment holds on every comparable stored pair") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const auto net = mcr::testing::random_test_network(11, 2, 0.4, rng);
        const auto lattice = build_lattice(net);
        std::vector<const Core*> cores;
        for (std::size_t level = 0; level < lattice.level_count(); ++level)
            for (CoreId id : lattice.cores_at_level(level)) cores.push_back(&lattice.core(id));
        for (const Core* big : cores) {
            for (const Core* small : cores) {
                bool dominates = true;
                for (std::size_t a = 0; a < big->vector.size(); ++a)
                    if (big->vector[a] < small->vector[a]) {
                        dominates = false;
                        break;
                    }
                if (!dominates) continue;
                // big's thresholds are componentwise >= small's, so big's
                // members must be a subset of small's.
                const auto big_members = big->members.to_vector();
                CHECK(std::all_of(big_members.begin(), big_members.end(),
                                  [&](NodeIndex v) { return small->members.contains(v); }));
            }
        }
    }
}

TEST_CASE("emptiness is anti-monotone") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        const auto net = mcr::testing::random_test_network(9, 2, 0.3, rng);
        const auto lattice = build_lattice(net);
        std::uniform_int_distribution<std::uint32_t> pick(0, 6);
        for (int probe = 0; probe < 30; ++probe) {
            const CoreVector vec({pick(rng), pick(rng)});
            if (lattice.find(vec) != nullptr) continue;
            REQUIRE(k_core(net, vec).empty());
            CHECK(k_core(net, vec.incremented(0)).empty());
            CHECK(k_core(net, vec.incremented(1)).empty());
        }
    }
}

TEST_CASE("node removal never grows cores or the core count") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 10; ++trial) {
        const auto net = mcr::testing::random_test_network(12, 2, 0.35, rng);
        const auto before = build_lattice(net);

        std::vector<NodeIndex> victims;
        for (NodeIndex v = 0; v < net.node_count(); ++v)
            if (rng() % 4 == 0) victims.push_back(v);
        const auto residual = net.remove_nodes(victims);
        const auto after = build_lattice(residual);

        CHECK(after.core_count() <= before.core_count());
        for (std::size_t level = 0; level < after.level_count(); ++level) {
            for (CoreId id : after.cores_at_level(level)) {
                const Core& small = after.core(id);
                const Core* big = before.find(small.vector);
                REQUIRE(big != nullptr);
                const auto small_labels = member_labels(small.members.to_vector(), residual);
                const auto big_labels = member_labels(big->members.to_vector(), net);
                CHECK(std::includes(big_labels.begin(), big_labels.end(), small_labels.begin(),
                                    small_labels.end()));
            }
        }
    }
}

TEST_CASE("lattice content is independent of thread count") {
    std::mt19937_64 rng(53);
    const auto net = mcr::testing::random_test_network(14, 3, 0.3, rng);
#ifdef _OPENMP
    const int threads = omp_get_max_threads();
    omp_set_num_threads(1);
    const auto serial = build_lattice(net);
    omp_set_num_threads(threads);
    const auto parallel = build_lattice(net);
#else
    const auto serial = build_lattice(net);
    const auto parallel = build_lattice(net);
#endif
    REQUIRE(serial.core_count() == parallel.core_count());
    CHECK(lattice_label_map(serial, net) == lattice_label_map(parallel, net));
    for (std::size_t level = 0; level < serial.level_count(); ++level) {
        const auto a = serial.cores_at_level(level);
        const auto b = parallel.cores_at_level(level);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(serial.core(a[i]).vector == parallel.core(b[i]).vector);
            CHECK(serial.core(a[i]).fathers == parallel.core(b[i]).fathers);
        }
    }
}

TEST_CASE("resource budgets raise distinct errors instead of truncating") {
    const auto net = example_network();
    LatticeBudget budget;

    budget.max_cores = 4;
    CHECK_THROWS_AS(build_lattice(net, budget), ResourceBudgetError);

    budget = {};
    budget.max_level = 2;  // the example network has level-3 and level-4 cores
    CHECK_THROWS_AS(build_lattice(net, budget), ResourceBudgetError);

    budget = {};
    budget.time_budget_seconds = 0.0;
    CHECK_THROWS_AS(build_lattice(net, budget), ResourceBudgetError);

    // A level budget that the lattice never reaches is not an error.
    const MultiplexNetwork tiny({"A", "B"}, {"1", "2"}, {{0, 0, 1}});
    budget = {};
    budget.max_level = 1;
    CHECK(build_lattice(tiny, budget).core_count() == 2);  // (0,0) and (1,0)
}

TEST_CASE("CoreVector helpers") {
    const CoreVector v({2, 0, 1});
    CHECK(v.level() == 3);
    CHECK(v.nonzero_count() == 2);
    CHECK(v.to_string() == "(2,0,1)");
    CHECK(v.incremented(1) == CoreVector({2, 1, 1}));
    const auto fathers = v.fathers();
    REQUIRE(fathers.size() == 2);
    CHECK(fathers[0] == CoreVector({1, 0, 1}));
    CHECK(fathers[1] == CoreVector({2, 0, 0}));
}
