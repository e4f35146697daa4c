// Times the OpenMP scan kernels against their serial reference on one large
// instance each and checks that both return the same answer.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "thetadiv/scan.hpp"
#include "thetadiv/semistable.hpp"

using namespace thetadiv;

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

DualGraph random_graph(std::mt19937& rng, int n, int extra) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pd(0, v - 1);
        edges.emplace_back(pd(rng), v);
    }
    std::uniform_int_distribution<int> vd(0, n - 1);
    for (int i = 0; i < extra; ++i) edges.emplace_back(vd(rng), vd(rng));
    std::vector<Vertex> vx;
    std::uniform_int_distribution<long long> wd(0, 2);
    for (int i = 0; i < n; ++i) vx.push_back({"n" + std::to_string(i), wd(rng)});
    return DualGraph::from_indexed(std::move(vx), edges);
}

}  // namespace

int main(int argc, char** argv) {
    int subset_vertices = 22;
    int orient_edges = 20;
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        if (flag == "--subset-vertices") subset_vertices = std::stoi(argv[i + 1]);
        if (flag == "--orient-edges") orient_edges = std::stoi(argv[i + 1]);
    }

    std::mt19937 rng(1);
    std::printf("threads: %d\n\n", max_threads());

    {
        const DualGraph g = random_graph(rng, subset_vertices, subset_vertices / 2);
        Multidegree d;
        for (int v = 0; v < g.vertex_count(); ++v) d.values.push_back(g.weight(v) - 1);
        d.values[0] += genus(g) - d.total();  // semistable region boundary: full scan
        const scan::SubsetContext c = scan::make_subset_context(g, &d);

        auto t0 = std::chrono::steady_clock::now();
        const auto serial =
            scan::reference::first_subset(c, scan::SubsetPredicate::ClearedViolated, false);
        const double serial_ms = ms_since(t0);

        t0 = std::chrono::steady_clock::now();
        const auto parallel =
            scan::first_subset(c, scan::SubsetPredicate::ClearedViolated, false, Exec::Parallel);
        const double parallel_ms = ms_since(t0);

        std::printf("subset scan, %d vertices (%u subsets)\n", subset_vertices, c.full);
        std::printf("  serial    %10.1f ms\n", serial_ms);
        std::printf("  parallel  %10.1f ms   speedup %.2fx   %s\n\n", parallel_ms,
                    serial_ms / parallel_ms, serial == parallel ? "match" : "MISMATCH");
    }

    {
        const DualGraph g = random_graph(rng, 8, orient_edges - 7);
        const std::uint64_t bound = 1ull << orient_edges;

        auto t0 = std::chrono::steady_clock::now();
        const auto serial = scan::reference::orientation_multidegree_image(g, bound);
        const double serial_ms = ms_since(t0);

        t0 = std::chrono::steady_clock::now();
        const auto parallel = scan::orientation_multidegree_image(g, bound, Exec::Parallel);
        const double parallel_ms = ms_since(t0);

        std::printf("orientation image, %d non-loop edges (%llu orientations)\n",
                    g.nonloop_edge_count(),
                    static_cast<unsigned long long>(1ull << g.nonloop_edge_count()));
        std::printf("  serial    %10.1f ms\n", serial_ms);
        std::printf("  parallel  %10.1f ms   speedup %.2fx   %s\n", parallel_ms,
                    serial_ms / parallel_ms, serial == parallel ? "match" : "MISMATCH");
    }
    return 0;
}
