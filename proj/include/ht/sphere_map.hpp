#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "ht/graph.hpp"

namespace ht {

using NodeId = int;

struct MapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One segment-end in a node's rotation: the chain of `edge` continues from
/// this node towards node `to`. Chains never visit a node twice, so the pair
/// identifies the segment-end uniquely.
struct RotEntry {
    EdgeId edge{};
    NodeId to{};
    bool operator==(const RotEntry&) const = default;
    auto operator<=>(const RotEntry&) const = default;
};

/// Directed segment of the planarized map: `edge`'s chain runs ... from, to ...
struct Dart {
    EdgeId edge{};
    NodeId from{};
    NodeId to{};
    bool operator==(const Dart&) const = default;
    auto operator<=>(const Dart&) const = default;
    Dart reversed() const { return {edge, to, from}; }
};

struct FaceMap {
    int face_count = 0;
    std::map<Dart, int> face_of;             // face to the LEFT of the dart
    std::vector<std::vector<Dart>> walks;    // boundary walk per face
};

/// A drawing of a graph on the sphere, planarized: crossings are explicit
/// degree-4 nodes, every node carries a ccw rotation of segment-ends, and each
/// graph edge is a chain of map segments. Carries the Z2 labelling lambda.
class SphereDrawing {
public:
    SphereDrawing() = default;

    /// Crossing-free drawing of a forest/cycle-free placement is rarely what
    /// you want; see build_reference_drawing for the canonical constructor.
    static SphereDrawing from_parts(Graph graph, EdgeLabelling lambda,
                                    std::map<NodeId, std::vector<RotEntry>> rotations,
                                    std::map<EdgeId, std::vector<NodeId>> chains);

    const Graph& graph() const { return graph_; }
    const EdgeLabelling& lambda() const { return lambda_; }
    EdgeLabelling& lambda() { return lambda_; }

    bool is_crossing_node(NodeId n) const { return !graph_.has_vertex(n); }
    bool has_node(NodeId n) const { return rotations_.count(n) != 0; }
    const std::vector<RotEntry>& rotation(NodeId n) const;
    const std::vector<NodeId>& chain(EdgeId e) const;
    const std::map<NodeId, std::vector<RotEntry>>& rotations() const { return rotations_; }
    const std::map<EdgeId, std::vector<NodeId>>& chains() const { return chains_; }

    int node_count() const { return static_cast<int>(rotations_.size()); }
    int segment_count() const;
    std::vector<NodeId> crossing_nodes() const;

    /// Crossing nodes shared by the chains of e and f.
    std::vector<NodeId> shared_crossings(EdgeId e, EdgeId f) const;

    NodeId fresh_node_id() { return next_node_id_++; }

    /// Drawings headed for or coming from the projective plane carry one
    /// distinguished crosscap node: edge chains may pass through it (each
    /// passage is one crosscap traversal) and its rotation slots pair
    /// antipodally. Plain sphere drawings leave this unset.
    const std::optional<NodeId>& crosscap_node() const { return crosscap_node_; }
    void set_crosscap_node(std::optional<NodeId> n) { crosscap_node_ = n; }

    // Low-level mutation surface for the surgery module. Callers are expected
    // to leave the map valid; validate() is the contract check.
    std::map<NodeId, std::vector<RotEntry>>& mutable_rotations() { return rotations_; }
    std::map<EdgeId, std::vector<NodeId>>& mutable_chains() { return chains_; }
    void set_graph(Graph g) { graph_ = std::move(g); }
    void note_max_node(NodeId n);

    /// Full structural validation: rotation/chain consistency, degree-4
    /// alternating crossings, chain self-crossing freedom, spherical Euler
    /// formula per component. Throws MapError with a description.
    void validate() const;

    FaceMap faces() const;

private:
    Graph graph_;
    EdgeLabelling lambda_;
    std::map<NodeId, std::vector<RotEntry>> rotations_;
    std::map<EdgeId, std::vector<NodeId>> chains_;
    std::optional<NodeId> crosscap_node_;
    NodeId next_node_id_ = 0;
};

/// Vertices in convex position in the given order, edges as chords; two
/// independent chords cross exactly once iff their endpoints interleave.
/// lambda is identically zero.
SphereDrawing build_reference_drawing(const Graph& g,
                                      const std::vector<VertexId>& order);

int crossing_parity(const SphereDrawing& d, EdgeId e, EdgeId f);

/// An edge is even when it crosses every other edge an even number of times.
bool edge_is_even(const SphereDrawing& d, EdgeId e);

struct CycleStatus {
    bool simple = false;
    bool all_edges_even = false;
    bool crossing_free = false;
    bool all_edges_trivial = false;
};

CycleStatus cycle_status(const SphereDrawing& d, const Cycle& z);

enum class Side { Inside, Outside, OnCycle };

struct CycleContext {
    Cycle z;
    std::map<VertexId, Side> vertex_side;
    std::map<EdgeId, Side> edge_side;
    Graph inside_graph;   // G^{+0}: inside edges and vertices plus Z
    Graph outside_graph;  // G^{-0}
    std::vector<Bridge> bridges;
    std::vector<Side> bridge_side;  // parallel to bridges
};

/// Definition-9 classification: 2-colors the faces of the planarized map
/// (colors flip exactly across segments of Z's chains) and reads off the
/// side of every vertex and edge. Preconditions: z simple, all edges even.
CycleContext side_classification(const SphereDrawing& d, const Cycle& z);

}  // namespace ht
