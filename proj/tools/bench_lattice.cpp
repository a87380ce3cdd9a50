// Benchmark: BFS lattice construction (father-intersection seeding, OpenMP
// waves) against the serial brute-force reference, plus a 1-thread vs
// N-thread comparison of the parallel kernels. Results are cross-checked so
// a speedup never hides a wrong answer.

#include <chrono>
#include <cstdio>
#include <map>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mcr/core_lattice.hpp"
#include "mcr/metrics.hpp"
#include "mcr/multiplex_network.hpp"
#include "mcr/reference.hpp"
#include "mcr/synthetic.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::map<std::vector<std::uint32_t>, std::vector<mcr::NodeIndex>> lattice_as_map(
    const mcr::CoreLattice& lattice) {
    std::map<std::vector<std::uint32_t>, std::vector<mcr::NodeIndex>> out;
    for (std::size_t level = 0; level < lattice.level_count(); ++level)
        for (mcr::CoreId id : lattice.cores_at_level(level)) {
            const mcr::Core& core = lattice.core(id);
            out.emplace(std::vector<std::uint32_t>(core.vector.components().begin(),
                                                   core.vector.components().end()),
                        core.members.to_vector());
        }
    return out;
}

void set_threads(int n) {
#ifdef _OPENMP
    omp_set_num_threads(n);
#else
    (void)n;
#endif
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace

int main() {
    std::printf("%-42s %10s %10s %8s\n", "case", "time[s]", "baseline", "speedup");

    // Correlated dense multiplexes where exhaustive per-vector peeling is
    // still feasible: BFS enumeration vs the brute-force reference.
    for (const auto& [nodes, layers] : std::vector<std::pair<std::size_t, std::size_t>>{
             {60, 3}, {100, 3}, {150, 4}}) {
        const auto net = mcr::generate_synthetic(nodes, layers, 0.9, 2.05, 17);

        auto start = std::chrono::steady_clock::now();
        const auto reference = mcr::reference::enumerate_cores(net);
        const double t_ref = seconds_since(start);

        start = std::chrono::steady_clock::now();
        const auto lattice = mcr::build_lattice(net);
        const double t_bfs = seconds_since(start);

        if (lattice_as_map(lattice) != reference) {
            std::fprintf(stderr, "MISMATCH against reference on %zu nodes\n", nodes);
            return 1;
        }
        char label[64];
        std::snprintf(label, sizeof(label), "lattice bfs vs brute force (n=%zu, %zu cores)",
                      nodes, lattice.core_count());
        std::printf("%-42s %10.4f %10.4f %7.1fx\n", label, t_bfs, t_ref, t_ref / t_bfs);
    }

    // Thread scaling of the parallel kernels on a larger instance.
    const auto net = mcr::generate_synthetic(500, 4, 0.9, 2.05, 23);
    const int threads = max_threads();

    set_threads(1);
    auto start = std::chrono::steady_clock::now();
    const auto serial_lattice = mcr::build_lattice(net);
    const double t1 = seconds_since(start);

    set_threads(threads);
    start = std::chrono::steady_clock::now();
    const auto parallel_lattice = mcr::build_lattice(net);
    const double tn = seconds_since(start);
    if (lattice_as_map(serial_lattice) != lattice_as_map(parallel_lattice)) {
        std::fprintf(stderr, "MISMATCH between 1-thread and %d-thread lattices\n", threads);
        return 1;
    }
    std::printf("%-42s %10.4f %10.4f %7.1fx\n", "lattice waves 1 vs N threads (n=500)", tn, t1,
                t1 / tn);

    set_threads(1);
    start = std::chrono::steady_clock::now();
    const auto bc1 = mcr::betweenness_centrality(net);
    const double b1 = seconds_since(start);

    set_threads(threads);
    start = std::chrono::steady_clock::now();
    const auto bcn = mcr::betweenness_centrality(net);
    const double bn = seconds_since(start);
    if (bc1.aggregate != bcn.aggregate) {
        std::fprintf(stderr, "MISMATCH between 1-thread and N-thread betweenness\n");
        return 1;
    }
    std::printf("%-42s %10.4f %10.4f %7.1fx\n", "betweenness 1 vs N threads (n=500)", bn, b1,
                b1 / bn);
    return 0;
}
