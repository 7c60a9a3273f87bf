#include "exact_geometry.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace ht::geo {

namespace {

int half_plane(const Pt& v) {
    if (v.y > 0) return 0;
    if (v.y < 0) return 1;
    return v.x > 0 ? 0 : 1;
}

bool ccw_less(const Pt& a, const Pt& b) {
    int ha = half_plane(a), hb = half_plane(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

struct SegRef {
    EdgeId edge;
    int seg;  // index into the polyline's segment list
};

struct CrossingRec {
    Pt point;
    EdgeId e, f;
    int eseg, fseg;
    Q et, ft;  // parameters along the two segments
};

std::string pt_str(const Pt& p) {
    std::ostringstream os;
    os << "(" << p.x << ", " << p.y << ")";
    return os.str();
}

}  // namespace

SphereDrawing arrangement_to_drawing(const Graph& g, EdgeLabelling lambda,
                                     const ArrangementInput& in) {
    // Basic shape checks.
    for (VertexId v : g.vertices())
        if (!in.vertex_pos.count(v)) throw DegeneracyError("vertex without position");
    {
        std::map<Pt, VertexId> seen;
        for (const auto& [v, p] : in.vertex_pos) {
            if (seen.count(p))
                throw DegeneracyError("vertices " + std::to_string(seen[p]) + " and " +
                                      std::to_string(v) + " share the point " + pt_str(p));
            seen[p] = v;
        }
    }
    for (const EdgeRec& e : g.edges()) {
        auto it = in.polylines.find(e.id);
        if (it == in.polylines.end()) throw DegeneracyError("edge without polyline");
        const auto& pl = it->second;
        if (pl.size() < 2) throw DegeneracyError("polyline too short");
        if (!(pl.front() == in.vertex_pos.at(e.u)) || !(pl.back() == in.vertex_pos.at(e.v)))
            throw DegeneracyError("polyline of edge " + std::to_string(e.id) +
                                  " does not join its endpoints");
        for (size_t i = 0; i + 1 < pl.size(); ++i)
            if (pl[i] == pl[i + 1]) throw DegeneracyError("zero-length polyline segment");
    }

    // Gather all segments.
    std::vector<std::pair<SegRef, std::pair<Pt, Pt>>> segs;
    for (const EdgeRec& e : g.edges()) {
        const auto& pl = in.polylines.at(e.id);
        for (int i = 0; i + 1 < static_cast<int>(pl.size()); ++i)
            segs.push_back({{e.id, i}, {pl[i], pl[i + 1]}});
    }

    // Vertex-interior incidences.
    for (const auto& [v, p] : in.vertex_pos)
        for (const auto& [ref, s] : segs) {
            const auto& [a, b] = s;
            if (p == a || p == b) {
                // Must be an endpoint of the polyline at this vertex.
                const EdgeRec& e = g.edge(ref.edge);
                const auto& pl = in.polylines.at(ref.edge);
                bool fine = (ref.seg == 0 && p == pl.front() && e.touches(v) &&
                             in.vertex_pos.at(e.u) == pl.front()) ||
                            (ref.seg + 2 == static_cast<int>(pl.size()) && p == pl.back() &&
                             e.touches(v));
                bool interior_bend = !(p == pl.front()) && !(p == pl.back());
                if (interior_bend || !fine)
                    throw DegeneracyError("vertex " + std::to_string(v) +
                                          " lies on edge " + std::to_string(ref.edge));
                continue;
            }
            Pt d = b - a;
            if (cross(p - a, d) == 0) {
                // p collinear; inside the span?
                Q t = (d.x != 0) ? (p.x - a.x) / d.x : (p.y - a.y) / d.y;
                if (t > 0 && t < 1)
                    throw DegeneracyError("vertex " + std::to_string(v) +
                                          " lies in the interior of edge " +
                                          std::to_string(ref.edge));
            }
        }

    // Pairwise intersections.
    std::vector<CrossingRec> crossings;
    for (size_t i = 0; i < segs.size(); ++i) {
        for (size_t j = i + 1; j < segs.size(); ++j) {
            const auto& [ra, sa] = segs[i];
            const auto& [rb, sb] = segs[j];
            const auto& [p1, p2] = sa;
            const auto& [q1, q2] = sb;
            Pt r = p2 - p1, s = q2 - q1;
            Q denom = cross(r, s);
            bool same_edge = ra.edge == rb.edge;
            bool consecutive = same_edge && std::abs(ra.seg - rb.seg) == 1;
            if (denom == 0) {
                if (cross(q1 - p1, r) == 0) {
                    // Collinear. Any shared span beyond a common endpoint is
                    // an overlap.
                    auto param = [&](const Pt& p) {
                        return (r.x != 0) ? (p.x - p1.x) / r.x : (p.y - p1.y) / r.y;
                    };
                    Q lo = std::min(param(q1), param(q2));
                    Q hi = std::max(param(q1), param(q2));
                    if (hi > 0 && lo < 1)
                        throw DegeneracyError("edges " + std::to_string(ra.edge) + " and " +
                                              std::to_string(rb.edge) + " overlap");
                }
                continue;
            }
            Q t = cross(q1 - p1, s) / denom;
            Q u = cross(q1 - p1, r) / denom;
            if (t < 0 || t > 1 || u < 0 || u > 1) continue;
            bool a_end = (t == 0 || t == 1), b_end = (u == 0 || u == 1);
            Pt point{p1.x + t * r.x, p1.y + t * r.y};
            if (a_end && b_end) {
                // Shared endpoint: fine for adjacent edges at a common vertex
                // and for consecutive segments of one polyline.
                bool at_vertex = false;
                for (const auto& [v, p] : in.vertex_pos)
                    if (p == point) at_vertex = true;
                if (consecutive || at_vertex) continue;
                throw DegeneracyError("segments of edges " + std::to_string(ra.edge) + " and " +
                                      std::to_string(rb.edge) + " touch at " + pt_str(point));
            }
            if (a_end || b_end)
                throw DegeneracyError("endpoint of one segment lies inside another near " +
                                      pt_str(point));
            if (same_edge)
                throw DegeneracyError("edge " + std::to_string(ra.edge) + " crosses itself");
            crossings.push_back({point, ra.edge, rb.edge, ra.seg, rb.seg, t, u});
        }
    }

    // Triple points: two crossing records sharing one point.
    {
        std::map<Pt, int> count;
        for (const auto& c : crossings)
            if (++count[c.point] > 1)
                throw DegeneracyError("three or more segments meet at " + pt_str(c.point));
    }

    // Assign crossing node ids deterministically: sort records by point.
    NodeId next = 0;
    for (VertexId v : g.vertices()) next = std::max(next, v + 1);
    std::sort(crossings.begin(), crossings.end(),
              [](const CrossingRec& a, const CrossingRec& b) { return a.point < b.point; });
    std::vector<NodeId> cid(crossings.size());
    for (size_t i = 0; i < crossings.size(); ++i) cid[i] = next++;

    // Chains: crossings per edge ordered along the polyline.
    std::map<EdgeId, std::vector<NodeId>> chains;
    std::map<NodeId, Pt> node_pos;
    std::map<NodeId, std::array<Pt, 2>> strand_dirs;  // forward dir per strand (e then f)
    for (const auto& [v, p] : in.vertex_pos) node_pos[v] = p;
    for (const EdgeRec& e : g.edges()) {
        std::vector<std::tuple<int, Q, NodeId>> on_edge;
        for (size_t i = 0; i < crossings.size(); ++i) {
            if (crossings[i].e == e.id) on_edge.push_back({crossings[i].eseg, crossings[i].et, cid[i]});
            if (crossings[i].f == e.id) on_edge.push_back({crossings[i].fseg, crossings[i].ft, cid[i]});
        }
        std::sort(on_edge.begin(), on_edge.end());
        std::vector<NodeId> ch{e.u};
        for (auto& [s, t, id] : on_edge) ch.push_back(id);
        ch.push_back(e.v);
        chains[e.id] = std::move(ch);
    }
    for (size_t i = 0; i < crossings.size(); ++i) {
        const auto& c = crossings[i];
        node_pos[cid[i]] = c.point;
        const auto& ple = in.polylines.at(c.e);
        const auto& plf = in.polylines.at(c.f);
        strand_dirs[cid[i]] = {ple[c.eseg + 1] - ple[c.eseg], plf[c.fseg + 1] - plf[c.fseg]};
    }

    // Rotations: sort outgoing directions ccw.
    std::map<NodeId, std::vector<RotEntry>> rotations;
    for (VertexId v : g.vertices()) rotations[v];
    struct DartDir {
        Pt dir;
        RotEntry entry;
    };
    std::map<NodeId, std::vector<DartDir>> pending;
    for (const EdgeRec& e : g.edges()) {
        const auto& pl = in.polylines.at(e.id);
        const auto& ch = chains.at(e.id);
        pending[e.u].push_back({pl[1] - pl[0], {e.id, ch[1]}});
        pending[e.v].push_back({pl[pl.size() - 2] - pl[pl.size() - 1], {e.id, ch[ch.size() - 2]}});
    }
    for (size_t i = 0; i < crossings.size(); ++i) {
        NodeId n = cid[i];
        const auto& ce = chains.at(crossings[i].e);
        const auto& cf = chains.at(crossings[i].f);
        auto neighbors = [&](const std::vector<NodeId>& ch) {
            auto it = std::find(ch.begin(), ch.end(), n);
            size_t k = it - ch.begin();
            return std::pair<NodeId, NodeId>{ch[k - 1], ch[k + 1]};
        };
        auto [eprev, enext] = neighbors(ce);
        auto [fprev, fnext] = neighbors(cf);
        Pt ed = strand_dirs[n][0], fd = strand_dirs[n][1];
        pending[n].push_back({ed, {crossings[i].e, enext}});
        pending[n].push_back({{-ed.x, -ed.y}, {crossings[i].e, eprev}});
        pending[n].push_back({fd, {crossings[i].f, fnext}});
        pending[n].push_back({{-fd.x, -fd.y}, {crossings[i].f, fprev}});
    }
    for (auto& [n, dd] : pending) {
        std::sort(dd.begin(), dd.end(),
                  [](const DartDir& a, const DartDir& b) { return ccw_less(a.dir, b.dir); });
        for (size_t i = 0; i + 1 < dd.size(); ++i)
            if (!ccw_less(dd[i].dir, dd[i + 1].dir) && !ccw_less(dd[i + 1].dir, dd[i].dir))
                throw DegeneracyError("two segment-ends leave node " + std::to_string(n) +
                                      " in the same direction");
        auto& rot = rotations[n];
        for (const auto& x : dd) rot.push_back(x.entry);
    }

    SphereDrawing d = SphereDrawing::from_parts(g, std::move(lambda), std::move(rotations),
                                                std::move(chains));
    d.validate();
    return d;
}

}  // namespace ht::geo
