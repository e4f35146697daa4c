#include "thetadiv/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace thetadiv {

namespace {

bool valid_id(const std::string& id) {
    if (id.empty()) return false;
    for (char c : id) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                        (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.';
        if (!ok) return false;
    }
    return true;
}

}  // namespace

DualGraph::DualGraph(std::vector<Vertex> vertices,
                     const std::vector<std::pair<std::string, std::string>>& edge_ids) {
    vertices_ = std::move(vertices);
    if (vertices_.empty()) throw InputError("graph needs at least one vertex");
    for (int i = 0; i < vertex_count(); ++i) {
        const Vertex& v = vertices_[static_cast<size_t>(i)];
        if (!valid_id(v.id))
            throw InputError("vertex id '" + v.id + "' is empty or contains invalid characters");
        if (v.weight < 0)
            throw InputError("vertex '" + v.id + "' has negative weight");
        if (!index_.emplace(v.id, i).second)
            throw InputError("duplicate vertex id '" + v.id + "'");
    }
    edges_.reserve(edge_ids.size());
    for (const auto& [ia, ib] : edge_ids)
        edges_.push_back(Edge{index_of(ia), index_of(ib)});
    finish();
}

DualGraph DualGraph::from_indexed(std::vector<Vertex> vertices,
                                  const std::vector<std::pair<int, int>>& edges) {
    DualGraph g;
    g.vertices_ = std::move(vertices);
    if (g.vertices_.empty()) throw InputError("graph needs at least one vertex");
    for (int i = 0; i < g.vertex_count(); ++i) {
        const Vertex& v = g.vertices_[static_cast<size_t>(i)];
        if (!valid_id(v.id))
            throw InputError("vertex id '" + v.id + "' is empty or contains invalid characters");
        if (v.weight < 0)
            throw InputError("vertex '" + v.id + "' has negative weight");
        if (!g.index_.emplace(v.id, i).second)
            throw InputError("duplicate vertex id '" + v.id + "'");
    }
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= g.vertex_count() || b < 0 || b >= g.vertex_count())
            throw InputError("edge endpoint index out of range");
        g.edges_.push_back(Edge{a, b});
    }
    g.finish();
    return g;
}

void DualGraph::finish() {
    const int n = vertex_count();
    valence_.assign(static_cast<size_t>(n), 0);
    loops_.assign(static_cast<size_t>(n), 0);
    for (int e = 0; e < edge_count(); ++e) {
        const Edge& ed = edges_[static_cast<size_t>(e)];
        if (ed.is_loop()) {
            valence_[static_cast<size_t>(ed.a)] += 2;
            loops_[static_cast<size_t>(ed.a)] += 1;
        } else {
            valence_[static_cast<size_t>(ed.a)] += 1;
            valence_[static_cast<size_t>(ed.b)] += 1;
            nonloop_edges_.push_back(e);
        }
    }
    long long wsum = 0;
    for (const Vertex& v : vertices_) wsum += v.weight;
    genus_ = 1 - n + edge_count() + wsum;

    // Undirected reachability from vertex 0.
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (EdgeIndex e : nonloop_edges_) {
            const Edge& ed = edges_[static_cast<size_t>(e)];
            const int other = ed.a == v ? ed.b : (ed.b == v ? ed.a : -1);
            if (other >= 0 && !seen[static_cast<size_t>(other)]) {
                seen[static_cast<size_t>(other)] = 1;
                stack.push_back(other);
            }
        }
    }
    connected_ = std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

VertexIndex DualGraph::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw InputError("unknown vertex id '" + id + "'");
    return it->second;
}

long long Multidegree::total() const {
    return std::accumulate(values.begin(), values.end(), 0LL);
}

Multidegree Multidegree::plus(VertexIndex v) const {
    Multidegree r = *this;
    r.values[static_cast<size_t>(v)] += 1;
    return r;
}

Multidegree Multidegree::minus(VertexIndex v) const {
    Multidegree r = *this;
    r.values[static_cast<size_t>(v)] -= 1;
    return r;
}

Multidegree operator+(const Multidegree& x, const Multidegree& y) {
    if (x.values.size() != y.values.size()) throw InputError("multidegree size mismatch");
    Multidegree r = x;
    for (size_t i = 0; i < r.values.size(); ++i) r.values[i] += y.values[i];
    return r;
}

Multidegree operator-(const Multidegree& x, const Multidegree& y) {
    if (x.values.size() != y.values.size()) throw InputError("multidegree size mismatch");
    Multidegree r = x;
    for (size_t i = 0; i < r.values.size(); ++i) r.values[i] -= y.values[i];
    return r;
}

void require_matching(const DualGraph& g, const Multidegree& d) {
    if (static_cast<int>(d.values.size()) != g.vertex_count())
        throw InputError("multidegree has " + std::to_string(d.values.size()) +
                         " values for a graph with " + std::to_string(g.vertex_count()) +
                         " vertices");
}

VertexSet VertexSet::from_mask(const DualGraph& g, std::uint32_t mask) {
    if (g.vertex_count() > 32)
        throw ResourceError("vertex subsets support at most 32 vertices");
    const std::uint32_t full =
        g.vertex_count() == 32 ? ~0u : ((1u << g.vertex_count()) - 1u);
    if (mask & ~full) throw InputError("vertex set mask names vertices outside the graph");
    VertexSet s;
    s.mask_ = mask;
    return s;
}

VertexSet VertexSet::of(const DualGraph& g, const std::vector<std::string>& ids) {
    std::uint32_t mask = 0;
    for (const std::string& id : ids) mask |= 1u << g.index_of(id);
    return from_mask(g, mask);
}

VertexSet VertexSet::full(const DualGraph& g) {
    return from_mask(g, g.vertex_count() == 32 ? ~0u : ((1u << g.vertex_count()) - 1u));
}

int VertexSet::size() const { return std::popcount(mask_); }

VertexSet VertexSet::complement(const DualGraph& g) const {
    VertexSet s;
    s.mask_ = full(g).mask_ & ~mask_;
    return s;
}

std::vector<std::string> VertexSet::ids(const DualGraph& g) const {
    std::vector<std::string> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (contains(v)) out.push_back(g.vertex(v).id);
    return out;
}

long long genus(const DualGraph& g) { return g.genus(); }

long long subcurve_genus(const DualGraph& g, const VertexSet& y) {
    if (y.empty()) throw InputError("subcurve must be nonempty");
    VertexSet::from_mask(g, y.mask());  // range check
    long long wsum = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (y.contains(v)) wsum += g.weight(v);
    long long inside = 0;
    for (const Edge& e : g.edges())
        if (y.contains(e.a) && y.contains(e.b)) ++inside;
    return 1 - y.size() + inside + wsum;
}

Multidegree canonical_multidegree(const DualGraph& g) {
    Multidegree k;
    k.values.reserve(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        k.values.push_back(2 * g.weight(v) - 2 + g.valence(v));
    return k;
}

std::vector<EdgeIndex> cut_edges(const DualGraph& g, const VertexSet& y) {
    if (y.empty()) throw InputError("cut is defined for nonempty vertex sets");
    VertexSet::from_mask(g, y.mask());
    std::vector<EdgeIndex> out;
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.is_loop()) continue;
        if (y.contains(ed.a) != y.contains(ed.b)) out.push_back(e);
    }
    return out;
}

bool is_effective(const Multidegree& d) {
    return std::all_of(d.values.begin(), d.values.end(), [](long long v) { return v >= 0; });
}

bool is_stable_curve(const DualGraph& g) {
    if (!g.is_connected() || g.genus() < 2) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (2 * g.weight(v) - 2 + g.valence(v) <= 0) return false;
    return true;
}

}  // namespace thetadiv
