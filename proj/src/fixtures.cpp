#include <cstdlib>

#include "thetadiv/graph.hpp"

namespace thetadiv {

namespace {

DualGraph two_vertex(long long wa, long long wb, int parallel_edges) {
    std::vector<std::pair<int, int>> edges(static_cast<size_t>(parallel_edges), {0, 1});
    return DualGraph::from_indexed({{"v1", wa}, {"v2", wb}}, edges);
}

}  // namespace

std::vector<FixtureInfo> fixture_catalog() {
    return {
        {"fig1", "two weight-0 vertices v, w; 3 parallel edges (genus 2)"},
        {"ex44k<k>", "two weight-0 vertices v, w; k parallel edges (genus k-1)"},
        {"ex54", "weights (0,0,1); triple edge v1-v2, single edge v2-v3 (genus 3)"},
        {"ex55", "weights (0,0,0); triple edges v1-v2 and v2-v3 (genus 4)"},
        {"ex63", "weights (2,1,2); double edges v1-v2 and v2-v3 (genus 7)"},
        {"ex66", "weights (1,5); 3 parallel edges (genus 8)"},
        {"ex67", "weights (3,4); single edge (genus 7)"},
    };
}

DualGraph fixture(const std::string& name) {
    if (name == "fig1")
        return DualGraph::from_indexed({{"v", 0}, {"w", 0}}, {{0, 1}, {0, 1}, {0, 1}});
    if (name.rfind("ex44k", 0) == 0) {
        const std::string suffix = name.substr(5);
        if (suffix.empty() || suffix.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("fixture '" + name + "' needs an integer edge count, e.g. ex44k3");
        const long k = std::strtol(suffix.c_str(), nullptr, 10);
        if (k < 1 || k > 30) throw InputError("fixture '" + name + "': edge count out of range");
        std::vector<std::pair<int, int>> edges(static_cast<size_t>(k), {0, 1});
        return DualGraph::from_indexed({{"v", 0}, {"w", 0}}, edges);
    }
    if (name == "ex54")
        return DualGraph::from_indexed({{"v1", 0}, {"v2", 0}, {"v3", 1}},
                                       {{0, 1}, {0, 1}, {0, 1}, {1, 2}});
    if (name == "ex55")
        return DualGraph::from_indexed({{"v1", 0}, {"v2", 0}, {"v3", 0}},
                                       {{0, 1}, {0, 1}, {0, 1}, {1, 2}, {1, 2}, {1, 2}});
    if (name == "ex63")
        return DualGraph::from_indexed({{"v1", 2}, {"v2", 1}, {"v3", 2}},
                                       {{0, 1}, {0, 1}, {1, 2}, {1, 2}});
    if (name == "ex66") return two_vertex(1, 5, 3);
    if (name == "ex67") return two_vertex(3, 4, 1);
    throw InputError("unknown fixture '" + name + "'");
}

}  // namespace thetadiv
