#pragma once

#include <optional>
#include <vector>

#include "thetadiv/exec.hpp"
#include "thetadiv/graph.hpp"

namespace thetadiv {

// Verdict of the basic inequality on one subcurve, evaluated in the cleared
// integer form (both sides multiplied by 2g-2 > 0): no floating point, exact
// comparison.
struct InequalityVerdict {
    enum class Status { Strict, Equality, Violated };
    Status status = Status::Equality;
    long long lhs = 0;
    long long rhs = 0;
};

// (2g-2)(g(Y)-1) + (d_total-g+1)(2g(Y)-2+|cut(Y)|) vs (2g-2) deg(d|Y).
// Requires genus >= 2 and nonempty Y.
InequalityVerdict basic_inequality(const DualGraph& g, const Multidegree& d, const VertexSet& y);

struct SemistabilityCheck {
    bool semistable = true;
    // Lex-least violating subset when not semistable.
    std::optional<VertexSet> witness;
};

// Checks the inequality on every nonempty vertex subset. Requires a connected
// graph of genus >= 2.
SemistabilityCheck check_semistable(const DualGraph& g, const Multidegree& d,
                                    Exec exec = Exec::Parallel);
bool is_semistable(const DualGraph& g, const Multidegree& d, Exec exec = Exec::Parallel);

// Strict inequality on every proper nonempty subset (the full set is exempt:
// it always sits at equality).
SemistabilityCheck check_stable(const DualGraph& g, const Multidegree& d,
                                Exec exec = Exec::Parallel);
bool is_stable(const DualGraph& g, const Multidegree& d, Exec exec = Exec::Parallel);

// canonical_multidegree(g) - d; an involution that preserves semistability
// and stability.
Multidegree residual(const DualGraph& g, const Multidegree& d);

// All semistable multidegrees with the given total, in lexicographic order.
// Coordinate bounds come from the inequality on {v} and on its complement.
std::vector<Multidegree> enumerate_semistable(const DualGraph& g, long long total,
                                              Exec exec = Exec::Parallel);

// g - (r+1)(g - d + r)
long long brill_noether_number(long long g, long long r, long long d);

// Least vertex v such that g(Y) < deg(d|Y) for every subcurve Y containing v.
// Requires d_total > genus and g(Y) <= deg(d|Y) for every nonempty Y; the
// thrown PreconditionError names the first failing Y otherwise.
VertexIndex vertex_with_strict_slack(const DualGraph& g, const Multidegree& d,
                                     Exec exec = Exec::Parallel);

enum class ReduceTarget { Genus, GenusMinusOne, GenusMinusTwo };

long long reduce_target_value(const DualGraph& g, ReduceTarget t);

// Effective e with total d_total - target such that d - e is semistable of
// total degree target. Targets: Genus or GenusMinusOne. Requires d semistable
// with d_total >= target. The witness follows the constructive procedure:
// repeatedly subtract a strict-slack vertex down to degree g, then one more
// (least-index) vertex for target g-1.
Multidegree reduce_down(const DualGraph& g, const Multidegree& d, ReduceTarget target,
                        Exec exec = Exec::Parallel);

// Effective e with total target - d_total such that d + e is semistable.
// Targets: GenusMinusTwo or GenusMinusOne. Implemented through the residual:
// reduce_down on residual(d), which lands back on d + e after residualizing.
Multidegree reduce_up(const DualGraph& g, const Multidegree& d, ReduceTarget target,
                      Exec exec = Exec::Parallel);

}  // namespace thetadiv
