#include "thetadiv/theta.hpp"

#include <deque>
#include <string>

#include "thetadiv/scan.hpp"
#include "thetadiv/semistable.hpp"

namespace thetadiv {

namespace {

void require_stable_curve(const DualGraph& g) {
    if (!is_stable_curve(g))
        throw PreconditionError("the dual graph must describe a stable curve");
}

void require_total(const DualGraph& g, const Multidegree& d, long long total,
                   const char* what) {
    require_matching(g, d);
    if (d.total() != total)
        throw PreconditionError(std::string(what) + " needs total degree " +
                                std::to_string(total) + ", got " + std::to_string(d.total()));
}

bool subset_connected(const DualGraph& g, std::uint32_t mask) {
    const int start = std::countr_zero(mask);
    std::uint32_t seen = 1u << start;
    std::deque<int> queue{start};
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (EdgeIndex e : g.nonloop_edges()) {
            const Edge& ed = g.edge(e);
            if (!((mask >> ed.a) & 1u) || !((mask >> ed.b) & 1u)) continue;
            const int other = ed.a == u ? ed.b : (ed.b == u ? ed.a : -1);
            if (other >= 0 && !((seen >> other) & 1u)) {
                seen |= 1u << other;
                queue.push_back(other);
            }
        }
    }
    return seen == mask;
}

// Multidegree of o restricted to the induced subgraph on mask: indegrees
// count only edges with both endpoints inside, loops included.
bool restriction_effective(const DualGraph& g, const Orientation& o, std::uint32_t mask) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!((mask >> v) & 1u)) continue;
        long long indeg = g.loops_at(v);
        for (EdgeIndex e : g.nonloop_edges()) {
            const Edge& ed = g.edge(e);
            if (((mask >> ed.a) & 1u) && ((mask >> ed.b) & 1u) && *head_of(g, o, e) == v)
                ++indeg;
        }
        if (g.weight(v) - 1 + indeg < 0) return false;
    }
    return true;
}

// Any subset matching `member(v)` that receives (toward == true) or emits
// (toward == false) a nonempty directed cut.
bool has_directed_cut(const DualGraph& g, const Orientation& o, VertexIndex v, bool toward) {
    const std::uint32_t full = (1u << g.vertex_count()) - 1u;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        if (!((mask >> v) & 1u)) continue;
        bool any = false, consistent = true;
        for (EdgeIndex e : g.nonloop_edges()) {
            const Edge& ed = g.edge(e);
            if (((mask >> ed.a) & 1u) == ((mask >> ed.b) & 1u)) continue;
            any = true;
            const bool head_inside = (mask >> *head_of(g, o, e)) & 1u;
            if (head_inside != toward) {
                consistent = false;
                break;
            }
        }
        if (any && consistent) return true;
    }
    return false;
}

std::optional<Orientation> criterion_search(const DualGraph& g, const Multidegree& target,
                                            VertexIndex v, bool cut_toward,
                                            int max_nonloop_edges, Exec exec) {
    const OrientationEnumeration en = enumerate_orientations(g, max_nonloop_edges);
    const scan::OrientationContext c = scan::make_orientation_context(g);
    std::vector<long long> weights;
    for (int u = 0; u < g.vertex_count(); ++u) weights.push_back(g.weight(u));
    const auto pred = [&](std::uint64_t index) {
        int indeg[32];
        scan::indegrees_at(c, index, indeg);
        for (int u = 0; u < c.n; ++u)
            if (weights[static_cast<size_t>(u)] - 1 + indeg[u] != target.at(u)) return false;
        const Orientation o = en.at(index);
        return !has_directed_cut(g, o, v, cut_toward);
    };
    const auto found = scan::first_orientation(en.size(), pred, exec);
    if (!found) return std::nullopt;
    return en.at(*found);
}

}  // namespace

ThetaVerdict theta_exists(const DualGraph& g, const Multidegree& d, Exec exec) {
    require_stable_curve(g);
    require_total(g, d, g.genus() - 1, "theta existence");

    ThetaVerdict verdict;
    verdict.semistable = is_semistable(g, d, exec);
    if (!verdict.semistable) {
        verdict.reason = ThetaReason::NotSemistable;
        return verdict;
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.weight(v) > 0) {
            verdict.exists = true;
            verdict.reason = ThetaReason::PositiveWeightVertex;
            verdict.witness_vertex = v;
            return verdict;
        }
    }
    if (auto acyclic = admits_acyclic_orientation(g, d)) {
        verdict.exists = false;
        verdict.reason = ThetaReason::AllRationalAcyclic;
        verdict.witness_orientation = std::move(*acyclic);
        return verdict;
    }
    verdict.exists = true;
    verdict.reason = ThetaReason::CyclicRealization;
    verdict.witness_orientation = find_orientation(g, d);  // semistable, so present
    return verdict;
}

std::vector<VertexSet> theta_components(const DualGraph& g, const Orientation& o) {
    require_stable_curve(g);
    validate_orientation(g, o);
    if (g.vertex_count() > scan::kMaxSubsetVertices)
        throw ResourceError("component scans support at most " +
                            std::to_string(scan::kMaxSubsetVertices) + " vertices");

    const std::uint32_t full = (1u << g.vertex_count()) - 1u;
    std::vector<VertexSet> cuts = directed_cuts_toward(g, o);
    std::vector<VertexSet> out;
    for (const VertexSet& y : cuts) {
        if (!subset_connected(g, y.mask())) continue;
        if (restriction_effective(g, o, y.mask())) out.push_back(y);
    }
    // The full set joins with its empty cut when the whole multidegree is
    // effective.
    if (restriction_effective(g, o, full)) out.push_back(VertexSet::from_mask(g, full));
    std::sort(out.begin(), out.end(), [](const VertexSet& x, const VertexSet& y) {
        return scan::subset_lex_less(x.mask(), y.mask());
    });
    return out;
}

std::optional<Orientation> degree_g_criterion(const DualGraph& g, const Multidegree& d,
                                              VertexIndex v, int max_nonloop_edges, Exec exec) {
    require_stable_curve(g);
    require_total(g, d, g.genus(), "the degree-g criterion");
    if (v < 0 || v >= g.vertex_count()) throw InputError("vertex index out of range");
    return criterion_search(g, d.minus(v), v, /*cut_toward=*/true, max_nonloop_edges, exec);
}

std::optional<Orientation> degree_g_minus_2_criterion(const DualGraph& g, const Multidegree& d,
                                                      VertexIndex v, int max_nonloop_edges,
                                                      Exec exec) {
    require_total(g, d, g.genus() - 2, "the degree-(g-2) criterion");
    if (v < 0 || v >= g.vertex_count()) throw InputError("vertex index out of range");
    if (g.vertex_count() > scan::kMaxSubsetVertices)
        throw ResourceError("directed-cut scans support at most " +
                            std::to_string(scan::kMaxSubsetVertices) + " vertices");
    return criterion_search(g, d.plus(v), v, /*cut_toward=*/false, max_nonloop_edges, exec);
}

bool semistable_via_vertex_shifts(const DualGraph& g, const Multidegree& d) {
    require_matching(g, d);
    if (d.total() == g.genus() - 2) {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!is_orientable(g, d.plus(v))) return false;
        return true;
    }
    if (d.total() == g.genus()) {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!is_orientable(g, d.minus(v))) return false;
        return true;
    }
    throw PreconditionError("vertex-shift characterization applies at total degree genus - 2 "
                            "or genus, got " +
                            std::to_string(d.total()));
}

}  // namespace thetadiv
