#include "thetadiv/orientation.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "thetadiv/scan.hpp"

namespace thetadiv {

namespace {

// Unit-capacity max flow (BFS augmenting paths) on the edge/vertex bipartite
// network. Arcs are added in a fixed order so the run is deterministic.
struct FlowNetwork {
    struct Arc {
        int to;
        long long cap;
        size_t rev;
    };
    std::vector<std::vector<Arc>> adj;

    explicit FlowNetwork(int nodes) : adj(static_cast<size_t>(nodes)) {}

    void add(int u, int v, long long cap) {
        adj[static_cast<size_t>(u)].push_back({v, cap, adj[static_cast<size_t>(v)].size()});
        adj[static_cast<size_t>(v)].push_back({u, 0, adj[static_cast<size_t>(u)].size() - 1});
    }

    long long max_flow(int s, int t) {
        long long flow = 0;
        while (true) {
            std::vector<int> parent_node(adj.size(), -1);
            std::vector<size_t> parent_arc(adj.size());
            std::deque<int> queue{s};
            parent_node[static_cast<size_t>(s)] = s;
            while (!queue.empty() && parent_node[static_cast<size_t>(t)] < 0) {
                const int u = queue.front();
                queue.pop_front();
                for (size_t i = 0; i < adj[static_cast<size_t>(u)].size(); ++i) {
                    const Arc& a = adj[static_cast<size_t>(u)][i];
                    if (a.cap > 0 && parent_node[static_cast<size_t>(a.to)] < 0) {
                        parent_node[static_cast<size_t>(a.to)] = u;
                        parent_arc[static_cast<size_t>(a.to)] = i;
                        queue.push_back(a.to);
                    }
                }
            }
            if (parent_node[static_cast<size_t>(t)] < 0) return flow;
            long long bottleneck = std::numeric_limits<long long>::max();
            for (int v = t; v != s; v = parent_node[static_cast<size_t>(v)]) {
                const int u = parent_node[static_cast<size_t>(v)];
                bottleneck = std::min(bottleneck,
                                      adj[static_cast<size_t>(u)][parent_arc[static_cast<size_t>(v)]].cap);
            }
            for (int v = t; v != s; v = parent_node[static_cast<size_t>(v)]) {
                const int u = parent_node[static_cast<size_t>(v)];
                Arc& a = adj[static_cast<size_t>(u)][parent_arc[static_cast<size_t>(v)]];
                a.cap -= bottleneck;
                adj[static_cast<size_t>(a.to)][a.rev].cap += bottleneck;
            }
            flow += bottleneck;
        }
    }
};

// Required non-loop indegrees for d, or nullopt when some requirement is
// negative or the total degree is wrong.
std::optional<std::vector<long long>> indegree_requirements(const DualGraph& g,
                                                            const Multidegree& d) {
    if (d.total() != g.genus() - 1) return std::nullopt;
    std::vector<long long> r(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        r[static_cast<size_t>(v)] = d.at(v) + 1 - g.weight(v) - g.loops_at(v);
        if (r[static_cast<size_t>(v)] < 0) return std::nullopt;
    }
    return r;
}

// Feasibility of assigning the still-free non-loop edges to endpoints within
// the remaining requirements. free_from marks the first free edge position.
bool assignment_feasible(const DualGraph& g, const std::vector<long long>& remaining,
                         const std::vector<char>& fixed) {
    const auto& nonloop = g.nonloop_edges();
    int free_count = 0;
    for (size_t j = 0; j < nonloop.size(); ++j)
        if (!fixed[j]) ++free_count;
    const int n = g.vertex_count();
    const int source = 0;
    const int sink = 1 + free_count + n;
    FlowNetwork net(sink + 1);
    int slot = 0;
    for (size_t j = 0; j < nonloop.size(); ++j) {
        if (fixed[j]) continue;
        const Edge& e = g.edge(nonloop[j]);
        net.add(source, 1 + slot, 1);
        net.add(1 + slot, 1 + free_count + e.a, 1);
        net.add(1 + slot, 1 + free_count + e.b, 1);
        ++slot;
    }
    for (int v = 0; v < n; ++v)
        if (remaining[static_cast<size_t>(v)] > 0)
            net.add(1 + free_count + v, sink, remaining[static_cast<size_t>(v)]);
    return net.max_flow(source, sink) == free_count;
}

std::vector<std::vector<EdgeIndex>> out_adjacency(const DualGraph& g, const Orientation& o) {
    std::vector<std::vector<EdgeIndex>> out(static_cast<size_t>(g.vertex_count()));
    for (EdgeIndex e : g.nonloop_edges()) {
        const Edge& ed = g.edge(e);
        const VertexIndex tail =
            o.directions[static_cast<size_t>(e)] == EdgeDirection::AToB ? ed.a : ed.b;
        out[static_cast<size_t>(tail)].push_back(e);
    }
    return out;
}

VertexIndex tail_of(const DualGraph& g, const Orientation& o, EdgeIndex e) {
    const Edge& ed = g.edge(e);
    return o.directions[static_cast<size_t>(e)] == EdgeDirection::AToB ? ed.a : ed.b;
}

std::uint32_t reachable_from(const DualGraph& g, const Orientation& o, VertexIndex start) {
    const auto out = out_adjacency(g, o);
    std::uint32_t seen = 1u << start;
    std::deque<VertexIndex> queue{start};
    while (!queue.empty()) {
        const VertexIndex u = queue.front();
        queue.pop_front();
        for (EdgeIndex e : out[static_cast<size_t>(u)]) {
            const VertexIndex h = *head_of(g, o, e);
            if (!((seen >> h) & 1u)) {
                seen |= 1u << h;
                queue.push_back(h);
            }
        }
    }
    return seen;
}

}  // namespace

void validate_orientation(const DualGraph& g, const Orientation& o) {
    if (static_cast<int>(o.directions.size()) != g.edge_count())
        throw InputError("orientation covers " + std::to_string(o.directions.size()) +
                         " edges for a graph with " + std::to_string(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e) {
        const bool loop_dir = o.directions[static_cast<size_t>(e)] == EdgeDirection::Loop;
        if (g.edge(e).is_loop() != loop_dir)
            throw InputError("edge " + std::to_string(e) +
                             (loop_dir ? " is not a loop" : " is a loop and carries no direction"));
    }
}

std::optional<VertexIndex> head_of(const DualGraph& g, const Orientation& o, EdgeIndex e) {
    const Edge& ed = g.edge(e);
    switch (o.directions[static_cast<size_t>(e)]) {
        case EdgeDirection::AToB: return ed.b;
        case EdgeDirection::BToA: return ed.a;
        case EdgeDirection::Loop: return std::nullopt;
    }
    return std::nullopt;
}

std::vector<int> indegrees(const DualGraph& g, const Orientation& o) {
    validate_orientation(g, o);
    std::vector<int> indeg(static_cast<size_t>(g.vertex_count()), 0);
    for (int v = 0; v < g.vertex_count(); ++v) indeg[static_cast<size_t>(v)] = g.loops_at(v);
    for (EdgeIndex e : g.nonloop_edges()) indeg[static_cast<size_t>(*head_of(g, o, e))] += 1;
    return indeg;
}

Multidegree multidegree_of(const DualGraph& g, const Orientation& o) {
    const std::vector<int> indeg = indegrees(g, o);
    Multidegree d;
    d.values.reserve(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        d.values.push_back(g.weight(v) - 1 + indeg[static_cast<size_t>(v)]);
    return d;
}

bool is_orientable(const DualGraph& g, const Multidegree& d) {
    require_matching(g, d);
    const auto req = indegree_requirements(g, d);
    if (!req) return false;
    const std::vector<char> none(g.nonloop_edges().size(), 0);
    return assignment_feasible(g, *req, none);
}

std::optional<Orientation> find_orientation(const DualGraph& g, const Multidegree& d) {
    require_matching(g, d);
    const auto req = indegree_requirements(g, d);
    if (!req) return std::nullopt;
    const auto& nonloop = g.nonloop_edges();
    std::vector<char> fixed(nonloop.size(), 0);
    std::vector<long long> remaining = *req;
    if (!assignment_feasible(g, remaining, fixed)) return std::nullopt;

    Orientation o;
    o.directions.assign(static_cast<size_t>(g.edge_count()), EdgeDirection::Loop);
    for (size_t j = 0; j < nonloop.size(); ++j) {
        const Edge& e = g.edge(nonloop[j]);
        fixed[j] = 1;
        // Prefer a -> b; keep it if the rest stays feasible.
        bool ab_ok = false;
        if (remaining[static_cast<size_t>(e.b)] > 0) {
            remaining[static_cast<size_t>(e.b)] -= 1;
            ab_ok = assignment_feasible(g, remaining, fixed);
            if (!ab_ok) remaining[static_cast<size_t>(e.b)] += 1;
        }
        if (ab_ok) {
            o.directions[static_cast<size_t>(nonloop[j])] = EdgeDirection::AToB;
        } else {
            remaining[static_cast<size_t>(e.a)] -= 1;
            o.directions[static_cast<size_t>(nonloop[j])] = EdgeDirection::BToA;
        }
    }
    return o;
}

MintyWitness minty_decompose(const DualGraph& g, const Orientation& o, EdgeIndex e) {
    validate_orientation(g, o);
    if (e < 0 || e >= g.edge_count())
        throw InputError("edge index " + std::to_string(e) + " out of range");
    MintyWitness w;
    if (g.edge(e).is_loop()) {
        w.kind = MintyWitness::Kind::DirectedCycle;
        w.edges = {e};
        return w;
    }
    const VertexIndex tail = tail_of(g, o, e);
    const VertexIndex head = *head_of(g, o, e);
    const auto out = out_adjacency(g, o);

    // BFS from the head; least edge index first, so the witness path is
    // deterministic.
    std::vector<EdgeIndex> parent(static_cast<size_t>(g.vertex_count()), -1);
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
    std::deque<VertexIndex> queue{head};
    seen[static_cast<size_t>(head)] = 1;
    while (!queue.empty()) {
        const VertexIndex u = queue.front();
        queue.pop_front();
        for (EdgeIndex f : out[static_cast<size_t>(u)]) {
            const VertexIndex h = *head_of(g, o, f);
            if (!seen[static_cast<size_t>(h)]) {
                seen[static_cast<size_t>(h)] = 1;
                parent[static_cast<size_t>(h)] = f;
                queue.push_back(h);
            }
        }
    }

    if (seen[static_cast<size_t>(tail)]) {
        std::vector<EdgeIndex> path;
        for (VertexIndex v = tail; v != head;) {
            const EdgeIndex f = parent[static_cast<size_t>(v)];
            path.push_back(f);
            v = tail_of(g, o, f);
        }
        std::reverse(path.begin(), path.end());
        w.kind = MintyWitness::Kind::DirectedCycle;
        w.edges.push_back(e);
        w.edges.insert(w.edges.end(), path.begin(), path.end());
        return w;
    }

    std::uint32_t mask = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (seen[static_cast<size_t>(v)]) mask |= 1u << v;
    const VertexSet y = VertexSet::from_mask(g, mask);
    w.kind = MintyWitness::Kind::DirectedCut;
    w.edges = cut_edges(g, y);
    w.sink_side = y;
    return w;
}

bool is_acyclic(const DualGraph& g, const Orientation& o) {
    validate_orientation(g, o);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.loops_at(v) > 0) return false;
    std::vector<int> indeg(static_cast<size_t>(g.vertex_count()), 0);
    for (EdgeIndex e : g.nonloop_edges()) indeg[static_cast<size_t>(*head_of(g, o, e))] += 1;
    const auto out = out_adjacency(g, o);
    std::deque<VertexIndex> queue;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (indeg[static_cast<size_t>(v)] == 0) queue.push_back(v);
    int removed = 0;
    while (!queue.empty()) {
        const VertexIndex u = queue.front();
        queue.pop_front();
        ++removed;
        for (EdgeIndex e : out[static_cast<size_t>(u)]) {
            const VertexIndex h = *head_of(g, o, e);
            if (--indeg[static_cast<size_t>(h)] == 0) queue.push_back(h);
        }
    }
    return removed == g.vertex_count();
}

bool is_totally_cyclic(const DualGraph& g, const Orientation& o) {
    validate_orientation(g, o);
    // Reversed orientation for the backward reachability pass.
    Orientation rev = o;
    for (EdgeIndex e : g.nonloop_edges())
        rev.directions[static_cast<size_t>(e)] =
            o.directions[static_cast<size_t>(e)] == EdgeDirection::AToB ? EdgeDirection::BToA
                                                                        : EdgeDirection::AToB;
    std::vector<char> assigned(static_cast<size_t>(g.vertex_count()), 0);
    for (int root = 0; root < g.vertex_count(); ++root) {
        if (assigned[static_cast<size_t>(root)]) continue;
        // Undirected component of root.
        std::uint32_t component = 1u << root;
        std::deque<VertexIndex> queue{root};
        while (!queue.empty()) {
            const VertexIndex u = queue.front();
            queue.pop_front();
            for (EdgeIndex e : g.nonloop_edges()) {
                const Edge& ed = g.edge(e);
                const int other = ed.a == u ? ed.b : (ed.b == u ? ed.a : -1);
                if (other >= 0 && !((component >> other) & 1u)) {
                    component |= 1u << other;
                    queue.push_back(other);
                }
            }
        }
        const std::uint32_t forward = reachable_from(g, o, root);
        const std::uint32_t backward = reachable_from(g, rev, root);
        if ((forward & component) != component || (backward & component) != component)
            return false;
        for (int v = 0; v < g.vertex_count(); ++v)
            if ((component >> v) & 1u) assigned[static_cast<size_t>(v)] = 1;
    }
    return true;
}

std::vector<VertexIndex> sources(const DualGraph& g, const Orientation& o) {
    const std::vector<int> indeg = indegrees(g, o);
    std::vector<VertexIndex> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (indeg[static_cast<size_t>(v)] == 0) out.push_back(v);
    return out;
}

std::optional<Orientation> admits_acyclic_orientation(const DualGraph& g, const Multidegree& d) {
    require_matching(g, d);
    if (d.total() != g.genus() - 1)
        throw PreconditionError("acyclic realizations exist only at total degree genus - 1");
    if (g.nonloop_edge_count() != g.edge_count()) return std::nullopt;  // loops
    std::vector<long long> remaining(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        remaining[static_cast<size_t>(v)] = d.at(v) + 1 - g.weight(v);
        if (remaining[static_cast<size_t>(v)] < 0) return std::nullopt;
    }
    Orientation o;
    o.directions.assign(static_cast<size_t>(g.edge_count()), EdgeDirection::Loop);
    std::vector<char> alive(static_cast<size_t>(g.vertex_count()), 1);
    std::vector<char> done(static_cast<size_t>(g.edge_count()), 0);
    for (int step = 0; step < g.vertex_count(); ++step) {
        VertexIndex pick = -1;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (alive[static_cast<size_t>(v)] && remaining[static_cast<size_t>(v)] == 0) {
                pick = v;
                break;
            }
        }
        if (pick < 0) return std::nullopt;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (done[static_cast<size_t>(e)]) continue;
            const Edge& ed = g.edge(e);
            if (ed.a != pick && ed.b != pick) continue;
            const VertexIndex other = ed.a == pick ? ed.b : ed.a;
            o.directions[static_cast<size_t>(e)] =
                ed.a == pick ? EdgeDirection::AToB : EdgeDirection::BToA;
            done[static_cast<size_t>(e)] = 1;
            if (--remaining[static_cast<size_t>(other)] < 0) return std::nullopt;
        }
        alive[static_cast<size_t>(pick)] = 0;
    }
    return o;
}

Orientation reverse_cycle(const DualGraph& g, const Orientation& o,
                          const std::vector<EdgeIndex>& cycle) {
    validate_orientation(g, o);
    if (cycle.empty()) throw InputError("empty edge list is not a directed cycle");
    for (EdgeIndex e : cycle)
        if (e < 0 || e >= g.edge_count())
            throw InputError("cycle edge index " + std::to_string(e) + " out of range");
    if (cycle.size() == 1 && g.edge(cycle.front()).is_loop()) return o;

    std::vector<char> used(static_cast<size_t>(g.edge_count()), 0);
    std::vector<int> in_count(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<EdgeIndex> out_edge(static_cast<size_t>(g.vertex_count()), -1);
    for (EdgeIndex e : cycle) {
        if (g.edge(e).is_loop())
            throw InputError("a loop can only form a directed cycle by itself");
        if (used[static_cast<size_t>(e)]) throw InputError("cycle repeats an edge");
        used[static_cast<size_t>(e)] = 1;
        const VertexIndex t = tail_of(g, o, e);
        const VertexIndex h = *head_of(g, o, e);
        if (out_edge[static_cast<size_t>(t)] != -1)
            throw InputError("vertex has two outgoing cycle edges");
        out_edge[static_cast<size_t>(t)] = e;
        if (++in_count[static_cast<size_t>(h)] > 1)
            throw InputError("vertex has two incoming cycle edges");
    }
    // Follow tails from the first edge; a single closed walk must cover all.
    const EdgeIndex start = cycle.front();
    EdgeIndex cur = start;
    size_t steps = 0;
    do {
        const VertexIndex h = *head_of(g, o, cur);
        cur = out_edge[static_cast<size_t>(h)];
        if (cur < 0) throw InputError("edge list does not close up into a directed cycle");
        ++steps;
    } while (cur != start && steps <= cycle.size());
    if (steps != cycle.size()) throw InputError("edge list is not a single directed cycle");

    Orientation flipped = o;
    for (EdgeIndex e : cycle)
        flipped.directions[static_cast<size_t>(e)] =
            o.directions[static_cast<size_t>(e)] == EdgeDirection::AToB ? EdgeDirection::BToA
                                                                        : EdgeDirection::AToB;
    return flipped;
}

Orientation OrientationEnumeration::at(std::uint64_t index) const {
    Orientation o;
    o.directions.assign(static_cast<size_t>(edge_count_), EdgeDirection::Loop);
    for (int j = 0; j < m_; ++j) {
        const bool flip = (index >> (m_ - 1 - j)) & 1ull;
        o.directions[static_cast<size_t>(nonloop_[static_cast<size_t>(j)])] =
            flip ? EdgeDirection::BToA : EdgeDirection::AToB;
    }
    return o;
}

OrientationEnumeration enumerate_orientations(const DualGraph& g, int max_nonloop_edges) {
    if (g.nonloop_edge_count() > max_nonloop_edges)
        throw ResourceError("graph has " + std::to_string(g.nonloop_edge_count()) +
                            " non-loop edges; the enumeration bound is " +
                            std::to_string(max_nonloop_edges));
    OrientationEnumeration en;
    en.m_ = g.nonloop_edge_count();
    en.nonloop_ = g.nonloop_edges();
    en.edge_count_ = g.edge_count();
    return en;
}

std::vector<VertexSet> directed_cuts_toward(const DualGraph& g, const Orientation& o) {
    validate_orientation(g, o);
    if (g.vertex_count() > scan::kMaxSubsetVertices)
        throw ResourceError("directed-cut scans support at most " +
                            std::to_string(scan::kMaxSubsetVertices) + " vertices");
    const std::uint32_t full = (1u << g.vertex_count()) - 1u;
    std::vector<VertexSet> out;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        bool any = false, all_in = true;
        for (EdgeIndex e : g.nonloop_edges()) {
            const Edge& ed = g.edge(e);
            const bool ina = (mask >> ed.a) & 1u;
            const bool inb = (mask >> ed.b) & 1u;
            if (ina == inb) continue;
            any = true;
            if (!((mask >> *head_of(g, o, e)) & 1u)) {
                all_in = false;
                break;
            }
        }
        if (any && all_in) out.push_back(VertexSet::from_mask(g, mask));
    }
    std::sort(out.begin(), out.end(), [](const VertexSet& x, const VertexSet& y) {
        return scan::subset_lex_less(x.mask(), y.mask());
    });
    return out;
}

}  // namespace thetadiv
