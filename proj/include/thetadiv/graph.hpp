#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "thetadiv/errors.hpp"

namespace thetadiv {

using VertexIndex = int;
using EdgeIndex = int;

struct Vertex {
    std::string id;
    long long weight = 0;  // g_v >= 0
};

struct Edge {
    VertexIndex a = 0;
    VertexIndex b = 0;
    bool is_loop() const { return a == b; }
};

// Vertex-weighted multigraph with parallel edges and loops. Vertex order is
// insertion order, edges are addressed by index; both are part of the graph's
// identity. Immutable after construction.
class DualGraph {
public:
    DualGraph(std::vector<Vertex> vertices,
              const std::vector<std::pair<std::string, std::string>>& edge_ids);

    // Endpoints given as vertex indices; used by generators and fixtures.
    static DualGraph from_indexed(std::vector<Vertex> vertices,
                                  const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int nonloop_edge_count() const { return static_cast<int>(nonloop_edges_.size()); }

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Vertex& vertex(VertexIndex v) const { return vertices_[static_cast<size_t>(v)]; }
    const Edge& edge(EdgeIndex e) const { return edges_[static_cast<size_t>(e)]; }

    // Indices of the non-loop edges, ascending.
    const std::vector<EdgeIndex>& nonloop_edges() const { return nonloop_edges_; }

    VertexIndex index_of(const std::string& id) const;
    bool has_vertex(const std::string& id) const { return index_.count(id) != 0; }

    long long weight(VertexIndex v) const { return vertices_[static_cast<size_t>(v)].weight; }
    // Number of edge ends at v; a loop counts twice.
    int valence(VertexIndex v) const { return valence_[static_cast<size_t>(v)]; }
    int loops_at(VertexIndex v) const { return loops_[static_cast<size_t>(v)]; }

    long long genus() const { return genus_; }
    bool is_connected() const { return connected_; }

private:
    DualGraph() = default;
    void finish();

    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, VertexIndex> index_;
    std::vector<int> valence_;
    std::vector<int> loops_;
    std::vector<EdgeIndex> nonloop_edges_;
    long long genus_ = 0;
    bool connected_ = true;
};

// Integer vector indexed by the graph's vertices, in vertex order.
struct Multidegree {
    std::vector<long long> values;

    Multidegree() = default;
    explicit Multidegree(std::vector<long long> v) : values(std::move(v)) {}

    long long total() const;
    long long at(VertexIndex v) const { return values[static_cast<size_t>(v)]; }

    Multidegree plus(VertexIndex v) const;   // d + v
    Multidegree minus(VertexIndex v) const;  // d - v

    friend bool operator==(const Multidegree&, const Multidegree&) = default;
    friend auto operator<=>(const Multidegree& x, const Multidegree& y) {
        return x.values <=> y.values;
    }
};

Multidegree operator+(const Multidegree& x, const Multidegree& y);
Multidegree operator-(const Multidegree& x, const Multidegree& y);

// Throws InputError unless d has one value per vertex of g.
void require_matching(const DualGraph& g, const Multidegree& d);

// Subset of vertices, stored as a bitmask with vertex i at bit i. Lists of
// subsets and "least" witnesses throughout the library use lexicographic
// order on the sorted member lists (scan::subset_lex_less).
class VertexSet {
public:
    VertexSet() = default;

    static VertexSet from_mask(const DualGraph& g, std::uint32_t mask);
    static VertexSet of(const DualGraph& g, const std::vector<std::string>& ids);
    static VertexSet full(const DualGraph& g);

    std::uint32_t mask() const { return mask_; }
    bool empty() const { return mask_ == 0; }
    int size() const;
    bool contains(VertexIndex v) const { return (mask_ >> v) & 1u; }

    VertexSet complement(const DualGraph& g) const;
    std::vector<std::string> ids(const DualGraph& g) const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

private:
    std::uint32_t mask_ = 0;
};

// ---- graph_core operations ----

// g = 1 - |V| + |E| + sum of weights; applied verbatim, disconnected input
// allowed (the value may then be negative).
long long genus(const DualGraph& g);

// Genus of the induced subgraph on Y (all edges with both endpoints in Y,
// loops included). Y may be disconnected; Y must be nonempty.
long long subcurve_genus(const DualGraph& g, const VertexSet& y);

// Per vertex 2*g_v - 2 + valence(v), loops counting 2; total is 2g - 2.
Multidegree canonical_multidegree(const DualGraph& g);

// Edge indices with exactly one endpoint in Y, ascending. Loops belong to no
// cut. Y must be nonempty.
std::vector<EdgeIndex> cut_edges(const DualGraph& g, const VertexSet& y);

bool is_effective(const Multidegree& d);

// Connected, genus >= 2, and 2*g_v - 2 + valence(v) > 0 at every vertex.
bool is_stable_curve(const DualGraph& g);

// ---- bundled fixture corpus ----

struct FixtureInfo {
    std::string name;
    std::string description;
};

// Static fixture names; "ex44k<k>" is additionally accepted for any k >= 1.
std::vector<FixtureInfo> fixture_catalog();
DualGraph fixture(const std::string& name);

}  // namespace thetadiv
