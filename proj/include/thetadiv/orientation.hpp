#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "thetadiv/graph.hpp"

namespace thetadiv {

// Per-edge direction; loops carry no direction and always use Loop.
enum class EdgeDirection : std::uint8_t { AToB, BToA, Loop };

struct Orientation {
    std::vector<EdgeDirection> directions;  // aligned with the graph's edge order

    friend bool operator==(const Orientation&, const Orientation&) = default;
};

// Throws InputError unless o covers exactly the edges of g, with Loop exactly
// at the loop indices.
void validate_orientation(const DualGraph& g, const Orientation& o);

// The endpoint the edge points at; nullopt for loops.
std::optional<VertexIndex> head_of(const DualGraph& g, const Orientation& o, EdgeIndex e);

// Incoming non-loop edges plus one per loop.
std::vector<int> indegrees(const DualGraph& g, const Orientation& o);

// Per vertex g_v - 1 + indegree; the total is always genus - 1.
Multidegree multidegree_of(const DualGraph& g, const Orientation& o);

// Whether some orientation realizes d. Decided by maximum flow on the
// bipartite network: source -> each non-loop edge (capacity 1), edge -> its
// endpoints, vertex v -> sink (capacity d_v + 1 - g_v - #loops(v)).
bool is_orientable(const DualGraph& g, const Multidegree& d);

// The lexicographically least orientation realizing d (edge by edge, "ab"
// before "ba"), or nullopt. Built by fixing directions greedily, each step
// keeping the remaining flow problem feasible.
std::optional<Orientation> find_orientation(const DualGraph& g, const Multidegree& d);

// A directed cycle through an edge or a directed cut containing it; by
// Minty's lemma exactly one of the two exists.
struct MintyWitness {
    enum class Kind { DirectedCycle, DirectedCut };
    Kind kind = Kind::DirectedCycle;
    // For a cycle: the closing edge first, then the path edges in traversal
    // order. For a cut: ascending edge indices.
    std::vector<EdgeIndex> edges;
    // Cut only: the side all cut edges point into.
    std::optional<VertexSet> sink_side;
};

MintyWitness minty_decompose(const DualGraph& g, const Orientation& o, EdgeIndex e);

bool is_acyclic(const DualGraph& g, const Orientation& o);

// Every connected component strongly connected; equivalently every edge lies
// on a directed cycle.
bool is_totally_cyclic(const DualGraph& g, const Orientation& o);

// Vertices of indegree 0; a loop disqualifies its vertex.
std::vector<VertexIndex> sources(const DualGraph& g, const Orientation& o);

// Acyclic orientation with multidegree d, or nullopt. Requires total degree
// genus - 1. Greedy source peeling: repeatedly take the least remaining
// vertex whose residual indegree requirement is 0 and orient its remaining
// edges outward. A graph with a loop admits no acyclic orientation.
std::optional<Orientation> admits_acyclic_orientation(const DualGraph& g, const Multidegree& d);

// Flips every non-loop edge of the given directed cycle; the multidegree is
// unchanged. cycle follows MintyWitness semantics (a single loop allowed).
Orientation reverse_cycle(const DualGraph& g, const Orientation& o,
                          const std::vector<EdgeIndex>& cycle);

// All 2^(#non-loop edges) orientations in lexicographic token order.
class OrientationEnumeration {
public:
    std::uint64_t size() const { return 1ull << m_; }
    Orientation at(std::uint64_t index) const;

    class iterator {
    public:
        iterator(const OrientationEnumeration* owner, std::uint64_t i) : owner_(owner), i_(i) {}
        Orientation operator*() const { return owner_->at(i_); }
        iterator& operator++() {
            ++i_;
            return *this;
        }
        friend bool operator==(const iterator&, const iterator&) = default;

    private:
        const OrientationEnumeration* owner_;
        std::uint64_t i_;
    };

    iterator begin() const { return {this, 0}; }
    iterator end() const { return {this, size()}; }

private:
    friend OrientationEnumeration enumerate_orientations(const DualGraph&, int);
    int m_ = 0;
    std::vector<EdgeIndex> nonloop_;
    std::vector<EdgeIndex> loops_;
    int edge_count_ = 0;
};

// Throws ResourceError when the graph has more than max_nonloop_edges
// non-loop edges; exceeding the bound is never silently sampled.
OrientationEnumeration enumerate_orientations(const DualGraph& g, int max_nonloop_edges = 20);

// All proper nonempty Y whose nonempty cut is entirely directed into Y, in
// lexicographic subset order. The full set never appears.
std::vector<VertexSet> directed_cuts_toward(const DualGraph& g, const Orientation& o);

}  // namespace thetadiv
