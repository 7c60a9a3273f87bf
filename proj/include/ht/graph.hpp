#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ht {

using VertexId = int;
using EdgeId = int;

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EdgeRec {
    EdgeId id{};
    VertexId u{}, v{};

    VertexId other(VertexId w) const { return w == u ? v : u; }
    bool touches(VertexId w) const { return u == w || v == w; }
    bool independent_of(const EdgeRec& f) const {
        return !touches(f.u) && !touches(f.v);
    }
};

/// Undirected graph with stable integer ids. Parallel edges are tolerated
/// (internal constructions need them); self-loops are rejected.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<VertexId> vertices, std::vector<EdgeRec> edges);

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<EdgeRec>& edges() const { return edges_; }

    bool has_vertex(VertexId v) const { return vindex_.count(v) != 0; }
    bool has_edge(EdgeId e) const { return eindex_.count(e) != 0; }
    const EdgeRec& edge(EdgeId e) const;
    const std::vector<EdgeId>& incident(VertexId v) const;
    int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }

    std::optional<EdgeId> edge_between(VertexId u, VertexId v) const;

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    Graph induced_subgraph(const std::set<VertexId>& verts) const;
    Graph edge_subgraph(const std::vector<EdgeId>& edges) const;

    bool is_connected() const;
    bool is_two_connected() const;
    int component_count() const;

    /// BFS spanning forest, lowest-id tie-breaking. Returns tree edge ids.
    std::vector<EdgeId> spanning_forest() const;

private:
    std::vector<VertexId> vertices_;
    std::vector<EdgeRec> edges_;
    std::map<VertexId, std::vector<EdgeId>> vindex_;
    std::map<EdgeId, int> eindex_;
};

/// Z2 edge labelling: lambda(e) is the crosscap-passage parity of e.
class EdgeLabelling {
public:
    EdgeLabelling() = default;
    static EdgeLabelling zero(const Graph& g);

    int at(EdgeId e) const;
    void set(EdgeId e, int value);
    void flip(EdgeId e) { set(e, 1 - at(e)); }
    bool defined(EdgeId e) const { return table_.count(e) != 0; }
    const std::map<EdgeId, int>& table() const { return table_; }

    bool operator==(const EdgeLabelling&) const = default;

private:
    std::map<EdgeId, int> table_;
};

/// A cycle given as a cyclic vertex sequence; edges[i] joins verts[i] and
/// verts[(i+1) % n].
struct Cycle {
    std::vector<VertexId> verts;
    std::vector<EdgeId> edges;

    static Cycle from_vertices(const Graph& g, std::vector<VertexId> verts);
    int size() const { return static_cast<int>(verts.size()); }
    bool contains_vertex(VertexId v) const;
    bool contains_edge(EdgeId e) const;
};

struct Bridge {
    bool single_edge = false;
    std::vector<VertexId> vertices;     // attachments plus interior vertices
    std::vector<EdgeId> edges;
    std::vector<VertexId> attachments;  // sorted, subset of V(Z)
    std::vector<VertexId> interior;     // sorted, disjoint from V(Z)
};

struct BlockDecomposition {
    std::vector<Graph> blocks;
    std::vector<VertexId> cut_vertices;
};

BlockDecomposition block_decomposition(const Graph& g);

std::vector<Bridge> cycle_bridges(const Graph& g, const Cycle& z);

int walk_parity(const Graph& g, const EdgeLabelling& lambda,
                std::span<const EdgeId> walk);

std::optional<Cycle> find_trivial_cycle(const Graph& g, const EdgeLabelling& lambda);

struct ProperPath {
    std::vector<VertexId> verts;  // first and last are attachments
    std::vector<EdgeId> edges;
};

std::optional<ProperPath> trivial_proper_path(const Graph& g, const Bridge& b,
                                              const EdgeLabelling& lambda);

struct FourWayCutResult {
    std::optional<VertexId> cut;
    // On "no cut": two vertex-disjoint paths, one joining a1-a2, one a3-a4,
    // when such a pair exists.
    std::vector<VertexId> witness_path_a;
    std::vector<VertexId> witness_path_b;
};

FourWayCutResult four_way_cut_vertex(const Graph& b,
                                     const std::array<VertexId, 4>& attachments);

// Small helpers shared across modules.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);
std::vector<EdgeId> shortest_path_edges(const Graph& g, VertexId from, VertexId to,
                                        const std::set<VertexId>& forbidden_interior);

}  // namespace ht
