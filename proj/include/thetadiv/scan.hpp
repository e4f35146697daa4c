#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "thetadiv/exec.hpp"
#include "thetadiv/graph.hpp"

// Exhaustive scan kernels over vertex subsets (2^|V|) and edge orientations
// (2^|E|). Each kernel has an OpenMP-parallel implementation and a serial
// reference in scan::reference; the parallel versions reduce with min/union
// so their output never depends on scheduling. tests/ cross-check the two
// and bench/ times them against each other.

namespace thetadiv::scan {

inline constexpr int kMaxSubsetVertices = 24;
inline constexpr std::uint64_t kDefaultOrientationBound = 1ull << 20;

// ---- subset side ----

struct SubsetContext {
    int n = 0;
    std::uint32_t full = 0;
    std::vector<std::uint8_t> nl_a, nl_b;  // non-loop edge endpoints
    std::vector<std::uint8_t> loop_v;      // one entry per loop edge
    std::vector<long long> weight;         // per vertex
    std::vector<long long> dval;           // per vertex; empty if no multidegree
    long long g2 = 0;                      // 2g - 2
    long long coeff = 0;                   // d_total - g + 1
};

SubsetContext make_subset_context(const DualGraph& g, const Multidegree* d);

struct SubsetTerms {
    long long genus = 0;
    long long cut = 0;
    long long deg = 0;
};

inline SubsetTerms eval_subset(const SubsetContext& c, std::uint32_t mask) {
    SubsetTerms t;
    long long wsum = 0, deg = 0;
    for (std::uint32_t m = mask; m != 0; m &= m - 1) {
        const int v = std::countr_zero(m);
        wsum += c.weight[static_cast<size_t>(v)];
        if (!c.dval.empty()) deg += c.dval[static_cast<size_t>(v)];
    }
    long long inside = 0;
    for (const std::uint8_t v : c.loop_v) inside += (mask >> v) & 1u;
    for (size_t e = 0; e < c.nl_a.size(); ++e) {
        const std::uint32_t ia = (mask >> c.nl_a[e]) & 1u;
        const std::uint32_t ib = (mask >> c.nl_b[e]) & 1u;
        inside += ia & ib;
        t.cut += ia ^ ib;
    }
    t.genus = 1 - std::popcount(mask) + inside + wsum;
    t.deg = deg;
    return t;
}

// lhs - rhs of the cleared form of the basic inequality:
//   (2g-2)(g(Y)-1) + (d_total-g+1)(2g(Y)-2+|cut|)  <=  (2g-2) deg(d|Y)
inline long long cleared_margin(const SubsetContext& c, const SubsetTerms& t) {
    return c.g2 * (t.genus - 1) + c.coeff * (2 * t.genus - 2 + t.cut) - c.g2 * t.deg;
}

enum class SubsetPredicate {
    ClearedViolated,    // margin > 0
    ClearedNotStrict,   // margin >= 0
    GenusExceedsDegree  // g(Y) > deg(d|Y)
};

inline bool subset_matches(const SubsetContext& c, SubsetPredicate p, std::uint32_t mask) {
    const SubsetTerms t = eval_subset(c, mask);
    switch (p) {
        case SubsetPredicate::ClearedViolated: return cleared_margin(c, t) > 0;
        case SubsetPredicate::ClearedNotStrict: return cleared_margin(c, t) >= 0;
        case SubsetPredicate::GenusExceedsDegree: return t.genus > t.deg;
    }
    return false;
}

// Subsets are ordered lexicographically by their sorted member lists:
// {a} < {a,b} < {a,b,c} < {a,c} < {b} < ... "Least" witness always means
// least in this order. The comparison reduces to one bit trick: at the
// lowest differing bit, the set holding it is smaller, unless the other set
// is a prefix (no bits above).
inline bool subset_lex_less(std::uint32_t a, std::uint32_t b) {
    const std::uint32_t diff = a ^ b;
    if (diff == 0) return false;
    const std::uint32_t low = diff & (~diff + 1);
    if (a & low) return true;
    return (a & ~((low << 1) - 1)) == 0;
}

// Visits the nonempty subsets of {0..n-1} in lexicographic order and stops at
// the first one accepted; returns it.
template <class Accept>
std::optional<std::uint32_t> lex_first_subset(int n, Accept&& accept) {
    auto rec = [&](auto&& self, std::uint32_t mask, int start) -> std::optional<std::uint32_t> {
        for (int v = start; v < n; ++v) {
            const std::uint32_t next = mask | (1u << v);
            if (accept(next)) return next;
            if (auto r = self(self, next, v + 1)) return r;
        }
        return std::nullopt;
    };
    return rec(rec, 0u, 0);
}

struct SlackScanResult {
    // Lex-least Y with g(Y) > deg(d|Y), if any.
    std::optional<std::uint32_t> first_genus_violation;
    // Union of all Y with g(Y) == deg(d|Y).
    std::uint32_t tight_union = 0;
};

namespace reference {

// Lexicographic preorder walk with short circuit; the canonical semantics
// the parallel kernels must reproduce.
inline std::optional<std::uint32_t> first_subset(const SubsetContext& c, SubsetPredicate p,
                                                 bool exclude_full) {
    return lex_first_subset(c.n, [&](std::uint32_t mask) {
        if (exclude_full && mask == c.full) return false;
        return subset_matches(c, p, mask);
    });
}

inline SlackScanResult slack_scan(const SubsetContext& c) {
    SlackScanResult r;
    r.first_genus_violation = lex_first_subset(c.n, [&](std::uint32_t mask) {
        return subset_matches(c, SubsetPredicate::GenusExceedsDegree, mask);
    });
    if (r.first_genus_violation) return r;
    for (std::uint32_t mask = 1; mask <= c.full; ++mask) {
        const SubsetTerms t = eval_subset(c, mask);
        if (t.genus == t.deg) r.tight_union |= mask;
    }
    return r;
}

}  // namespace reference

// Lex-least subset (optionally excluding the full set) matching p.
std::optional<std::uint32_t> first_subset(const SubsetContext& c, SubsetPredicate p,
                                          bool exclude_full, Exec exec = Exec::Parallel);

SlackScanResult slack_scan(const SubsetContext& c, Exec exec = Exec::Parallel);

// ---- orientation side ----

// Non-loop edge j takes its direction from bit (m-1-j) of the orientation
// index: 0 directs a -> b, 1 directs b -> a. Ascending index order is then
// lexicographic order on the per-edge token sequence ("ab" < "ba").
struct OrientationContext {
    int n = 0;
    int m = 0;  // non-loop edges
    std::vector<std::uint8_t> tail, head;
    std::vector<int> base_indeg;  // loop contribution per vertex
};

OrientationContext make_orientation_context(const DualGraph& g);

inline void indegrees_at(const OrientationContext& c, std::uint64_t index, int* out) {
    for (int v = 0; v < c.n; ++v) out[v] = c.base_indeg[static_cast<size_t>(v)];
    for (int j = 0; j < c.m; ++j) {
        const bool flip = (index >> (c.m - 1 - j)) & 1ull;
        out[flip ? c.tail[static_cast<size_t>(j)] : c.head[static_cast<size_t>(j)]] += 1;
    }
}

namespace detail {

template <class Pred>
std::optional<std::uint64_t> first_orientation_serial(std::uint64_t count, Pred&& pred) {
    for (std::uint64_t i = 0; i < count; ++i)
        if (pred(i)) return i;
    return std::nullopt;
}

}  // namespace detail

// Least orientation index in [0, count) satisfying pred. pred must be pure.
template <class Pred>
std::optional<std::uint64_t> first_orientation(std::uint64_t count, Pred&& pred,
                                               Exec exec = Exec::Parallel) {
#ifdef _OPENMP
    if (exec == Exec::Parallel && count >= (1ull << 12) && max_threads() > 1) {
        constexpr std::uint64_t kChunk = 1ull << 10;
        const std::uint64_t chunks = (count + kChunk - 1) / kChunk;
        std::atomic<std::uint64_t> best{~0ull};
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t ci = 0; ci < static_cast<std::int64_t>(chunks); ++ci) {
            const std::uint64_t lo = static_cast<std::uint64_t>(ci) * kChunk;
            if (lo >= best.load(std::memory_order_relaxed)) continue;
            const std::uint64_t hi = std::min(lo + kChunk, count);
            for (std::uint64_t i = lo; i < hi; ++i) {
                if (pred(i)) {
                    std::uint64_t cur = best.load(std::memory_order_relaxed);
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {
                    }
                    break;
                }
            }
        }
        const std::uint64_t found = best.load();
        if (found == ~0ull) return std::nullopt;
        return found;
    }
#else
    (void)exec;
#endif
    return detail::first_orientation_serial(count, pred);
}

// Sorted, deduplicated multidegree values realized by some orientation.
std::vector<std::vector<long long>> orientation_multidegree_image(
    const DualGraph& g, std::uint64_t bound = kDefaultOrientationBound,
    Exec exec = Exec::Parallel);

namespace reference {

std::vector<std::vector<long long>> orientation_multidegree_image(const DualGraph& g,
                                                                  std::uint64_t bound);

}  // namespace reference

// Keeps candidates[i] for which keep(i) is true, preserving order; the
// predicate calls are independent and run in parallel.
template <class Keep>
std::vector<Multidegree> filter_indexed(const std::vector<Multidegree>& candidates, Keep&& keep,
                                        Exec exec = Exec::Parallel) {
    std::vector<char> flags(candidates.size(), 0);
    const auto count = static_cast<std::int64_t>(candidates.size());
#ifdef _OPENMP
    if (exec == Exec::Parallel && count > 1) {
#pragma omp parallel for schedule(dynamic, 8)
        for (std::int64_t i = 0; i < count; ++i)
            flags[static_cast<size_t>(i)] = keep(static_cast<size_t>(i)) ? 1 : 0;
    } else
#else
    (void)exec;
#endif
    {
        for (std::int64_t i = 0; i < count; ++i)
            flags[static_cast<size_t>(i)] = keep(static_cast<size_t>(i)) ? 1 : 0;
    }
    std::vector<Multidegree> out;
    for (size_t i = 0; i < candidates.size(); ++i)
        if (flags[i]) out.push_back(candidates[i]);
    return out;
}

}  // namespace thetadiv::scan
