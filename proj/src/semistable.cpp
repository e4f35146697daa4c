#include "thetadiv/semistable.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "thetadiv/scan.hpp"

namespace thetadiv {

namespace {

void require_genus_at_least_two(const DualGraph& g) {
    if (g.genus() < 2)
        throw UnsupportedGenusError("genus is " + std::to_string(g.genus()) +
                                    "; inequality checks require genus >= 2");
}

void require_connected(const DualGraph& g) {
    if (!g.is_connected()) throw PreconditionError("graph must be connected");
}

// Ceiling of a/b for b > 0.
long long ceil_div(long long a, long long b) {
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

std::string set_to_string(const DualGraph& g, std::uint32_t mask) {
    std::string s = "{";
    bool first = true;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if ((mask >> v) & 1u) {
            if (!first) s += ",";
            s += g.vertex(v).id;
            first = false;
        }
    }
    return s + "}";
}

SemistabilityCheck run_check(const DualGraph& g, const Multidegree& d,
                             scan::SubsetPredicate pred, bool exclude_full, Exec exec) {
    require_matching(g, d);
    require_connected(g);
    require_genus_at_least_two(g);
    const scan::SubsetContext c = scan::make_subset_context(g, &d);
    SemistabilityCheck r;
    if (const auto mask = scan::first_subset(c, pred, exclude_full, exec)) {
        r.semistable = false;
        r.witness = VertexSet::from_mask(g, *mask);
    }
    return r;
}

}  // namespace

InequalityVerdict basic_inequality(const DualGraph& g, const Multidegree& d,
                                   const VertexSet& y) {
    require_matching(g, d);
    require_genus_at_least_two(g);
    if (y.empty()) throw InputError("the basic inequality needs a nonempty subcurve");
    VertexSet::from_mask(g, y.mask());
    const scan::SubsetContext c = scan::make_subset_context(g, &d);
    const scan::SubsetTerms t = scan::eval_subset(c, y.mask());
    InequalityVerdict v;
    v.lhs = c.g2 * (t.genus - 1) + c.coeff * (2 * t.genus - 2 + t.cut);
    v.rhs = c.g2 * t.deg;
    v.status = v.lhs < v.rhs   ? InequalityVerdict::Status::Strict
               : v.lhs == v.rhs ? InequalityVerdict::Status::Equality
                                : InequalityVerdict::Status::Violated;
    return v;
}

SemistabilityCheck check_semistable(const DualGraph& g, const Multidegree& d, Exec exec) {
    return run_check(g, d, scan::SubsetPredicate::ClearedViolated, false, exec);
}

bool is_semistable(const DualGraph& g, const Multidegree& d, Exec exec) {
    return check_semistable(g, d, exec).semistable;
}

SemistabilityCheck check_stable(const DualGraph& g, const Multidegree& d, Exec exec) {
    if (g.vertex_count() == 1) {
        // No proper nonempty subsets; stability holds vacuously.
        require_matching(g, d);
        require_connected(g);
        require_genus_at_least_two(g);
        return {};
    }
    return run_check(g, d, scan::SubsetPredicate::ClearedNotStrict, true, exec);
}

bool is_stable(const DualGraph& g, const Multidegree& d, Exec exec) {
    return check_stable(g, d, exec).semistable;
}

Multidegree residual(const DualGraph& g, const Multidegree& d) {
    require_matching(g, d);
    return canonical_multidegree(g) - d;
}

std::vector<Multidegree> enumerate_semistable(const DualGraph& g, long long total, Exec exec) {
    require_connected(g);
    require_genus_at_least_two(g);
    const long long g2 = 2 * g.genus() - 2;
    const long long coeff = total - g.genus() + 1;
    const int n = g.vertex_count();

    // Lower bound at v from Y = {v}, upper bound from Y = V \ {v}.
    std::vector<long long> lo(static_cast<size_t>(n)), hi(static_cast<size_t>(n));
    const scan::SubsetContext c = scan::make_subset_context(g, nullptr);
    for (int v = 0; v < n; ++v) {
        const std::uint32_t single = 1u << v;
        const scan::SubsetTerms tv = scan::eval_subset(c, single);
        lo[static_cast<size_t>(v)] =
            ceil_div(g2 * (tv.genus - 1) + coeff * (2 * tv.genus - 2 + tv.cut), g2);
        if (n == 1) {
            hi[static_cast<size_t>(v)] = total;
            continue;
        }
        const scan::SubsetTerms tc = scan::eval_subset(c, c.full & ~single);
        hi[static_cast<size_t>(v)] =
            total - ceil_div(g2 * (tc.genus - 1) + coeff * (2 * tc.genus - 2 + tc.cut), g2);
    }

    std::vector<long long> suffix_lo(static_cast<size_t>(n) + 1, 0);
    std::vector<long long> suffix_hi(static_cast<size_t>(n) + 1, 0);
    for (int v = n - 1; v >= 0; --v) {
        suffix_lo[static_cast<size_t>(v)] = suffix_lo[static_cast<size_t>(v) + 1] + lo[static_cast<size_t>(v)];
        suffix_hi[static_cast<size_t>(v)] = suffix_hi[static_cast<size_t>(v) + 1] + hi[static_cast<size_t>(v)];
    }

    std::vector<Multidegree> candidates;
    std::vector<long long> cur(static_cast<size_t>(n));
    auto dfs = [&](auto&& self, int v, long long remaining) -> void {
        if (v == n) {
            if (remaining == 0) candidates.emplace_back(cur);
            return;
        }
        for (long long x = lo[static_cast<size_t>(v)]; x <= hi[static_cast<size_t>(v)]; ++x) {
            const long long rest = remaining - x;
            if (rest < suffix_lo[static_cast<size_t>(v) + 1] ||
                rest > suffix_hi[static_cast<size_t>(v) + 1])
                continue;
            cur[static_cast<size_t>(v)] = x;
            self(self, v + 1, rest);
        }
    };
    for (int v = 0; v < n; ++v)
        if (lo[static_cast<size_t>(v)] > hi[static_cast<size_t>(v)]) return {};
    dfs(dfs, 0, total);

    return scan::filter_indexed(
        candidates, [&](size_t i) { return is_semistable(g, candidates[i], Exec::Serial); },
        exec);
}

long long brill_noether_number(long long g, long long r, long long d) {
    return g - (r + 1) * (g - d + r);
}

VertexIndex vertex_with_strict_slack(const DualGraph& g, const Multidegree& d, Exec exec) {
    require_matching(g, d);
    require_connected(g);
    if (d.total() <= g.genus())
        throw PreconditionError("total degree " + std::to_string(d.total()) +
                                " must exceed the genus " + std::to_string(g.genus()));
    const scan::SubsetContext c = scan::make_subset_context(g, &d);
    const scan::SlackScanResult r = scan::slack_scan(c, exec);
    if (r.first_genus_violation)
        throw PreconditionError("g(Y) <= deg(d|Y) fails for Y = " +
                                set_to_string(g, *r.first_genus_violation));
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!((r.tight_union >> v) & 1u)) return v;
    throw std::logic_error("no strict-slack vertex; tight subcurves cover the graph");
}

long long reduce_target_value(const DualGraph& g, ReduceTarget t) {
    switch (t) {
        case ReduceTarget::Genus: return g.genus();
        case ReduceTarget::GenusMinusOne: return g.genus() - 1;
        case ReduceTarget::GenusMinusTwo: return g.genus() - 2;
    }
    throw InputError("unknown reduction target");
}

Multidegree reduce_down(const DualGraph& g, const Multidegree& d, ReduceTarget target,
                        Exec exec) {
    if (target != ReduceTarget::Genus && target != ReduceTarget::GenusMinusOne)
        throw PreconditionError("reduce_down targets degree g or g-1");
    const long long target_total = reduce_target_value(g, target);
    if (d.total() < target_total)
        throw PreconditionError("total degree " + std::to_string(d.total()) +
                                " is below the target " + std::to_string(target_total));
    if (!is_semistable(g, d, exec))
        throw PreconditionError("multidegree must be semistable");

    Multidegree cur = d;
    Multidegree e;
    e.values.assign(d.values.size(), 0);
    while (cur.total() > g.genus()) {
        const VertexIndex v = vertex_with_strict_slack(g, cur, exec);
        cur = cur.minus(v);
        e.values[static_cast<size_t>(v)] += 1;
    }
    if (target == ReduceTarget::GenusMinusOne && cur.total() > target_total) {
        // Degree g to g-1: any vertex works; take the least.
        cur = cur.minus(0);
        e.values[0] += 1;
    }
    return e;
}

Multidegree reduce_up(const DualGraph& g, const Multidegree& d, ReduceTarget target,
                      Exec exec) {
    if (target != ReduceTarget::GenusMinusTwo && target != ReduceTarget::GenusMinusOne)
        throw PreconditionError("reduce_up targets degree g-2 or g-1");
    const long long target_total = reduce_target_value(g, target);
    if (d.total() > target_total)
        throw PreconditionError("total degree " + std::to_string(d.total()) +
                                " is above the target " + std::to_string(target_total));
    if (!is_semistable(g, d, exec))
        throw PreconditionError("multidegree must be semistable");
    const ReduceTarget dual_target = target == ReduceTarget::GenusMinusTwo
                                         ? ReduceTarget::Genus
                                         : ReduceTarget::GenusMinusOne;
    return reduce_down(g, residual(g, d), dual_target, exec);
}

}  // namespace thetadiv
