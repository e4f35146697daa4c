#include "thetadiv/scan.hpp"

#include <algorithm>

namespace thetadiv::scan {

SubsetContext make_subset_context(const DualGraph& g, const Multidegree* d) {
    if (g.vertex_count() > kMaxSubsetVertices)
        throw ResourceError("definition-based subset scans support at most " +
                            std::to_string(kMaxSubsetVertices) + " vertices");
    SubsetContext c;
    c.n = g.vertex_count();
    c.full = (1u << c.n) - 1u;
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) {
            c.loop_v.push_back(static_cast<std::uint8_t>(e.a));
        } else {
            c.nl_a.push_back(static_cast<std::uint8_t>(e.a));
            c.nl_b.push_back(static_cast<std::uint8_t>(e.b));
        }
    }
    c.weight.reserve(static_cast<size_t>(c.n));
    for (int v = 0; v < c.n; ++v) c.weight.push_back(g.weight(v));
    if (d != nullptr) {
        require_matching(g, *d);
        c.dval = d->values;
        c.coeff = d->total() - g.genus() + 1;
    }
    c.g2 = 2 * g.genus() - 2;
    return c;
}

namespace {

// Lex-least matching subset by full scan; each thread keeps a local best and
// the merge uses the same comparator, so the result is schedule-independent.
std::optional<std::uint32_t> first_subset_parallel(const SubsetContext& c, SubsetPredicate p,
                                                   bool exclude_full) {
    std::uint32_t best = 0;  // 0 = none
#ifdef _OPENMP
#pragma omp parallel
    {
        std::uint32_t local = 0;
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 1; i <= static_cast<std::int64_t>(c.full); ++i) {
            const auto mask = static_cast<std::uint32_t>(i);
            if (exclude_full && mask == c.full) continue;
            if (subset_matches(c, p, mask) && (local == 0 || subset_lex_less(mask, local)))
                local = mask;
        }
#pragma omp critical
        {
            if (local != 0 && (best == 0 || subset_lex_less(local, best))) best = local;
        }
    }
#else
    for (std::uint32_t mask = 1; mask <= c.full; ++mask) {
        if (exclude_full && mask == c.full) continue;
        if (subset_matches(c, p, mask) && (best == 0 || subset_lex_less(mask, best)))
            best = mask;
    }
#endif
    if (best == 0) return std::nullopt;
    return best;
}

}  // namespace

std::optional<std::uint32_t> first_subset(const SubsetContext& c, SubsetPredicate p,
                                          bool exclude_full, Exec exec) {
#ifdef _OPENMP
    if (exec == Exec::Parallel && c.full >= (1u << 14) && max_threads() > 1)
        return first_subset_parallel(c, p, exclude_full);
#else
    (void)exec;
#endif
    return reference::first_subset(c, p, exclude_full);
}

SlackScanResult slack_scan(const SubsetContext& c, Exec exec) {
#ifdef _OPENMP
    if (exec == Exec::Parallel && c.full >= (1u << 14) && max_threads() > 1) {
        SlackScanResult r;
        r.first_genus_violation =
            first_subset_parallel(c, SubsetPredicate::GenusExceedsDegree, false);
        if (r.first_genus_violation) return r;
        std::atomic<std::uint32_t> tight{0};
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 1; i <= static_cast<std::int64_t>(c.full); ++i) {
            const auto mask = static_cast<std::uint32_t>(i);
            const SubsetTerms t = eval_subset(c, mask);
            if (t.genus == t.deg) tight.fetch_or(mask, std::memory_order_relaxed);
        }
        r.tight_union = tight.load();
        return r;
    }
#else
    (void)exec;
#endif
    return reference::slack_scan(c);
}

OrientationContext make_orientation_context(const DualGraph& g) {
    OrientationContext c;
    c.n = g.vertex_count();
    c.m = g.nonloop_edge_count();
    c.base_indeg.assign(static_cast<size_t>(c.n), 0);
    for (int v = 0; v < c.n; ++v) c.base_indeg[static_cast<size_t>(v)] = g.loops_at(v);
    for (EdgeIndex e : g.nonloop_edges()) {
        c.tail.push_back(static_cast<std::uint8_t>(g.edge(e).a));
        c.head.push_back(static_cast<std::uint8_t>(g.edge(e).b));
    }
    return c;
}

namespace {

std::vector<long long> multidegree_at(const OrientationContext& c,
                                      const std::vector<long long>& weights,
                                      std::uint64_t index, int* indeg_scratch) {
    indegrees_at(c, index, indeg_scratch);
    std::vector<long long> d(static_cast<size_t>(c.n));
    for (int v = 0; v < c.n; ++v)
        d[static_cast<size_t>(v)] = weights[static_cast<size_t>(v)] - 1 + indeg_scratch[v];
    return d;
}

}  // namespace

namespace reference {

std::vector<std::vector<long long>> orientation_multidegree_image(const DualGraph& g,
                                                                  std::uint64_t bound) {
    const OrientationContext c = make_orientation_context(g);
    const std::uint64_t count = 1ull << c.m;
    if (count > bound)
        throw ResourceError("orientation scan over " + std::to_string(count) +
                            " orientations exceeds the bound of " + std::to_string(bound));
    std::vector<long long> weights;
    for (int v = 0; v < c.n; ++v) weights.push_back(g.weight(v));
    std::vector<int> indeg(static_cast<size_t>(c.n));
    std::vector<std::vector<long long>> out;
    for (std::uint64_t i = 0; i < count; ++i)
        out.push_back(multidegree_at(c, weights, i, indeg.data()));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace reference

std::vector<std::vector<long long>> orientation_multidegree_image(const DualGraph& g,
                                                                  std::uint64_t bound,
                                                                  Exec exec) {
    const OrientationContext c = make_orientation_context(g);
    const std::uint64_t count = 1ull << c.m;
    if (count > bound)
        throw ResourceError("orientation scan over " + std::to_string(count) +
                            " orientations exceeds the bound of " + std::to_string(bound));
#ifdef _OPENMP
    if (exec == Exec::Parallel && count >= (1ull << 12) && max_threads() > 1) {
        std::vector<long long> weights;
        for (int v = 0; v < c.n; ++v) weights.push_back(g.weight(v));
        const int threads = max_threads();
        std::vector<std::vector<std::vector<long long>>> buckets(
            static_cast<size_t>(threads));
#pragma omp parallel
        {
            const int tid = omp_get_thread_num();
            std::vector<int> indeg(static_cast<size_t>(c.n));
            auto& local = buckets[static_cast<size_t>(tid)];
#pragma omp for schedule(static)
            for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i)
                local.push_back(multidegree_at(c, weights, static_cast<std::uint64_t>(i),
                                               indeg.data()));
            std::sort(local.begin(), local.end());
            local.erase(std::unique(local.begin(), local.end()), local.end());
        }
        std::vector<std::vector<long long>> out;
        for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
#else
    (void)exec;
#endif
    return reference::orientation_multidegree_image(g, bound);
}

}  // namespace thetadiv::scan
