#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <vector>

#include "ht/sphere_map.hpp"

namespace ht::geo {

using Q = boost::multiprecision::cpp_rational;

struct Pt {
    Q x, y;
    bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
    bool operator<(const Pt& o) const { return x < o.x || (x == o.x && y < o.y); }
};

inline Pt operator-(const Pt& a, const Pt& b) { return {a.x - b.x, a.y - b.y}; }
inline Q cross(const Pt& a, const Pt& b) { return a.x * b.y - a.y * b.x; }

struct DegeneracyError : MapError {
    using MapError::MapError;
};

struct ArrangementInput {
    std::map<VertexId, Pt> vertex_pos;
    // Polyline of edge e runs from vertex_pos[e.u] to vertex_pos[e.v];
    // interior points are bends, not map nodes.
    std::map<EdgeId, std::vector<Pt>> polylines;
};

/// Computes the planar arrangement of the polylines with exact rational
/// arithmetic and returns the planarized map. Requires generic position:
/// pairwise transversal crossings, no triple points, no overlaps, no
/// vertex-interior incidences. Throws DegeneracyError otherwise.
SphereDrawing arrangement_to_drawing(const Graph& g, EdgeLabelling lambda,
                                     const ArrangementInput& in);

}  // namespace ht::geo
