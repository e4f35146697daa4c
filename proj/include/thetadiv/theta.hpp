#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "thetadiv/exec.hpp"
#include "thetadiv/graph.hpp"
#include "thetadiv/orientation.hpp"

namespace thetadiv {

enum class ThetaReason {
    NotSemistable,
    PositiveWeightVertex,
    CyclicRealization,
    AllRationalAcyclic,
};

// exists implies semistable; AllRationalAcyclic implies exists == false and
// every vertex weight 0.
struct ThetaVerdict {
    bool semistable = false;
    bool exists = false;
    ThetaReason reason = ThetaReason::NotSemistable;
    std::optional<VertexIndex> witness_vertex;      // PositiveWeightVertex
    std::optional<Orientation> witness_orientation;  // realizing / acyclic orientation
};

// Existence of a Theta divisor at total degree genus - 1 on a stable curve:
// d semistable and (some positive-weight vertex, or no acyclic orientation
// realizes d).
ThetaVerdict theta_exists(const DualGraph& g, const Multidegree& d, Exec exec = Exec::Parallel);

// Component index set for the orientation o: connected Y that either are the
// full vertex set or receive a directed cut, and whose restricted orientation
// multidegree (indegrees counted inside Y only) is effective. Lexicographic
// subset order. Requires a stable curve.
std::vector<VertexSet> theta_components(const DualGraph& g, const Orientation& o);

// Witness orientation for semistability at total degree genus: o with
// multidegree d - v such that no directed cut points into a subset containing
// v. Exhaustive search in lexicographic orientation order. Requires a stable
// curve.
std::optional<Orientation> degree_g_criterion(const DualGraph& g, const Multidegree& d,
                                              VertexIndex v,
                                              int max_nonloop_edges = 20,
                                              Exec exec = Exec::Parallel);

// Witness at total degree genus - 2: o with multidegree d + v such that no
// directed cut points away from a subset containing v.
std::optional<Orientation> degree_g_minus_2_criterion(const DualGraph& g, const Multidegree& d,
                                                      VertexIndex v,
                                                      int max_nonloop_edges = 20,
                                                      Exec exec = Exec::Parallel);

// At total degree genus - 2: every d + v orientable; at total degree genus:
// every d - v orientable. Orientability is decided by flow, independently of
// the subset-scan semistability check.
bool semistable_via_vertex_shifts(const DualGraph& g, const Multidegree& d);

}  // namespace thetadiv
