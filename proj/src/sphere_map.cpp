#include "ht/sphere_map.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <sstream>

#include "exact_geometry.hpp"

namespace ht {

SphereDrawing SphereDrawing::from_parts(Graph graph, EdgeLabelling lambda,
                                        std::map<NodeId, std::vector<RotEntry>> rotations,
                                        std::map<EdgeId, std::vector<NodeId>> chains) {
    SphereDrawing d;
    d.graph_ = std::move(graph);
    d.lambda_ = std::move(lambda);
    d.rotations_ = std::move(rotations);
    d.chains_ = std::move(chains);
    NodeId mx = -1;
    for (const auto& [n, rot] : d.rotations_) mx = std::max(mx, n);
    d.next_node_id_ = mx + 1;
    return d;
}

void SphereDrawing::note_max_node(NodeId n) { next_node_id_ = std::max(next_node_id_, n + 1); }

const std::vector<RotEntry>& SphereDrawing::rotation(NodeId n) const {
    auto it = rotations_.find(n);
    if (it == rotations_.end()) throw MapError("unknown map node " + std::to_string(n));
    return it->second;
}

const std::vector<NodeId>& SphereDrawing::chain(EdgeId e) const {
    auto it = chains_.find(e);
    if (it == chains_.end()) throw MapError("no chain for edge " + std::to_string(e));
    return it->second;
}

int SphereDrawing::segment_count() const {
    int total = 0;
    for (const auto& [e, ch] : chains_) total += static_cast<int>(ch.size()) - 1;
    return total;
}

std::vector<NodeId> SphereDrawing::crossing_nodes() const {
    std::vector<NodeId> out;
    for (const auto& [n, rot] : rotations_)
        if (is_crossing_node(n) && (!crosscap_node_ || n != *crosscap_node_)) out.push_back(n);
    return out;
}

std::vector<NodeId> SphereDrawing::shared_crossings(EdgeId e, EdgeId f) const {
    const auto& ce = chain(e);
    std::set<NodeId> se(ce.begin() + 1, ce.end() - 1);
    std::vector<NodeId> out;
    const auto& cf = chain(f);
    for (size_t i = 1; i + 1 < cf.size(); ++i)
        if (se.count(cf[i])) out.push_back(cf[i]);
    return out;
}

FaceMap SphereDrawing::faces() const {
    FaceMap fm;
    // Index rotation entries per node for sigma lookups.
    std::map<NodeId, std::map<RotEntry, int>> index;
    for (const auto& [n, rot] : rotations_) {
        auto& m = index[n];
        for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
            if (m.count(rot[i]))
                throw MapError("duplicate rotation entry at node " + std::to_string(n));
            m[rot[i]] = i;
        }
    }
    std::vector<Dart> all;
    for (const auto& [e, ch] : chains_)
        for (size_t i = 0; i + 1 < ch.size(); ++i) {
            all.push_back({e, ch[i], ch[i + 1]});
            all.push_back({e, ch[i + 1], ch[i]});
        }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw MapError("ambiguous dart; a chain repeats a neighbor pair");

    auto phi = [&](const Dart& d) -> Dart {
        // next dart ccw after arriving along d at d.to
        auto nit = index.find(d.to);
        if (nit == index.end()) throw MapError("rotation missing at node " + std::to_string(d.to));
        auto eit = nit->second.find({d.edge, d.from});
        if (eit == nit->second.end())
            throw MapError("rotation at node " + std::to_string(d.to) +
                           " lacks an incident segment-end of edge " + std::to_string(d.edge));
        const auto& rot = rotations_.at(d.to);
        const RotEntry& next = rot[(eit->second + 1) % rot.size()];
        return Dart{next.edge, d.to, next.to};
    };

    for (const Dart& d : all) {
        if (fm.face_of.count(d)) continue;
        int id = fm.face_count++;
        std::vector<Dart> walk;
        Dart at = d;
        do {
            if (fm.face_of.count(at))
                throw MapError("face tracing collision; inconsistent rotation");
            fm.face_of[at] = id;
            walk.push_back(at);
            at = phi(at);
        } while (!(at == d));
        fm.walks.push_back(std::move(walk));
    }
    return fm;
}

void SphereDrawing::validate() const {
    for (const EdgeRec& e : graph_.edges())
        if (!lambda_.defined(e.id)) throw MapError("lambda undefined on edge " + std::to_string(e.id));

    std::map<NodeId, std::vector<RotEntry>> expected;
    for (const EdgeRec& e : graph_.edges()) {
        auto it = chains_.find(e.id);
        if (it == chains_.end()) throw MapError("edge without chain: " + std::to_string(e.id));
        const auto& ch = it->second;
        if (ch.size() < 2) throw MapError("chain too short on edge " + std::to_string(e.id));
        if (ch.front() != e.u || ch.back() != e.v)
            throw MapError("chain endpoints disagree with edge " + std::to_string(e.id));
        std::map<NodeId, int> seen;
        for (NodeId n : ch) seen[n]++;
        for (auto& [n, c] : seen) {
            bool is_cc = crosscap_node_ && n == *crosscap_node_;
            if (c > 1 && !is_cc)
                throw MapError("chain of edge " + std::to_string(e.id) + " revisits node " +
                               std::to_string(n));
        }
        for (size_t i = 0; i + 1 < ch.size(); ++i) {
            if (ch[i] == ch[i + 1]) throw MapError("zero-length segment");
            expected[ch[i]].push_back({e.id, ch[i + 1]});
            expected[ch[i + 1]].push_back({e.id, ch[i]});
        }
        for (size_t i = 1; i + 1 < ch.size(); ++i) {
            if (graph_.has_vertex(ch[i])) throw MapError("chain passes through a real vertex");
        }
    }
    if (chains_.size() != static_cast<size_t>(graph_.edge_count()))
        throw MapError("chain table does not match edge set");

    // Rotation tables list exactly the incident segment-ends, once each.
    for (const auto& [n, rot] : rotations_) {
        auto it = expected.find(n);
        std::vector<RotEntry> want = it == expected.end() ? std::vector<RotEntry>{} : it->second;
        std::vector<RotEntry> got = rot;
        std::sort(want.begin(), want.end());
        std::sort(got.begin(), got.end());
        if (want != got)
            throw MapError("rotation at node " + std::to_string(n) +
                           " does not list its incident segment-ends");
        if (std::adjacent_find(got.begin(), got.end()) != got.end())
            throw MapError("duplicate rotation entry at node " + std::to_string(n));
    }
    for (const auto& [n, ends] : expected)
        if (!rotations_.count(n)) throw MapError("node missing from rotation table");
    for (VertexId v : graph_.vertices())
        if (!rotations_.count(v)) throw MapError("graph vertex missing from rotation table");

    // Crossing nodes: degree 4, two strands crossing transversally.
    for (const auto& [n, rot] : rotations_) {
        if (graph_.has_vertex(n)) continue;
        if (crosscap_node_ && n == *crosscap_node_) {
            if (rot.size() % 2 != 0) throw MapError("crosscap node has odd degree");
            continue;
        }
        if (rot.size() != 4)
            throw MapError("crossing node " + std::to_string(n) + " does not have degree 4");
        if (!(rot[0].edge == rot[2].edge && rot[1].edge == rot[3].edge &&
              rot[0].edge != rot[1].edge))
            throw MapError("crossing node " + std::to_string(n) +
                           " strands are not paired opposite");
    }

    // Spherical Euler formula, per connected component of the map.
    FaceMap fm = faces();
    std::map<NodeId, int> comp;
    int ncomp = 0;
    for (const auto& [n, rot] : rotations_) {
        if (comp.count(n)) continue;
        std::deque<NodeId> q{n};
        comp[n] = ncomp;
        while (!q.empty()) {
            NodeId x = q.front();
            q.pop_front();
            for (const RotEntry& r : rotations_.at(x))
                if (!comp.count(r.to)) {
                    comp[r.to] = ncomp;
                    q.push_back(r.to);
                }
        }
        ++ncomp;
    }
    std::vector<int> vcount(ncomp, 0), ecount(ncomp, 0), fcount(ncomp, 0);
    for (const auto& [n, c] : comp) vcount[c]++;
    for (const auto& [e, ch] : chains_)
        for (size_t i = 0; i + 1 < ch.size(); ++i) ecount[comp.at(ch[i])]++;
    for (int f = 0; f < fm.face_count; ++f) fcount[comp.at(fm.walks[f].front().from)]++;
    for (int c = 0; c < ncomp; ++c) {
        if (vcount[c] == 1 && ecount[c] == 0) continue;  // isolated node floats in a face
        if (vcount[c] - ecount[c] + fcount[c] != 2) {
            std::ostringstream os;
            os << "Euler check failed on a map component: V=" << vcount[c]
               << " E=" << ecount[c] << " F=" << fcount[c];
            throw MapError(os.str());
        }
    }
}

int crossing_parity(const SphereDrawing& d, EdgeId e, EdgeId f) {
    if (e == f) throw MapError("crossing_parity needs two distinct edges");
    return static_cast<int>(d.shared_crossings(e, f).size()) % 2;
}

bool edge_is_even(const SphereDrawing& d, EdgeId e) {
    for (const EdgeRec& f : d.graph().edges())
        if (f.id != e && crossing_parity(d, e, f.id) != 0) return false;
    return true;
}

CycleStatus cycle_status(const SphereDrawing& d, const Cycle& z) {
    CycleStatus st;
    st.simple = true;
    st.crossing_free = true;
    st.all_edges_even = true;
    st.all_edges_trivial = true;
    for (size_t i = 0; i < z.edges.size(); ++i) {
        const auto& ch = d.chain(z.edges[i]);
        if (ch.size() > 2) st.crossing_free = false;
        if (d.lambda().at(z.edges[i]) != 0) st.all_edges_trivial = false;
        for (size_t j = i + 1; j < z.edges.size(); ++j)
            if (!d.shared_crossings(z.edges[i], z.edges[j]).empty()) st.simple = false;
        if (st.all_edges_even && !edge_is_even(d, z.edges[i])) st.all_edges_even = false;
    }
    return st;
}

CycleContext side_classification(const SphereDrawing& d, const Cycle& z) {
    CycleStatus st = cycle_status(d, z);
    if (!st.simple || !st.all_edges_even)
        throw MapError("side_classification requires a simple cycle with even edges");

    FaceMap fm = d.faces();
    std::set<EdgeId> zedges(z.edges.begin(), z.edges.end());

    // 2-color the faces; the color flips exactly across segments of Z's chains.
    std::vector<int> color(fm.face_count, -1);
    std::deque<int> q;
    color[0] = 0;
    q.push_back(0);
    while (!q.empty()) {
        int f = q.front();
        q.pop_front();
        for (const Dart& dart : fm.walks[f]) {
            int g = fm.face_of.at(dart.reversed());
            int want = zedges.count(dart.edge) ? 1 - color[f] : color[f];
            if (color[g] == -1) {
                color[g] = want;
                q.push_back(g);
            } else if (color[g] != want) {
                throw MapError("face 2-coloring inconsistent; corrupted map or bad cycle");
            }
        }
    }
    for (int f = 0; f < fm.face_count; ++f)
        if (color[f] == -1) color[f] = 0;  // faces of other map components

    // Determinism: the side of face 0 (lowest face id) is "outside".
    auto side_of_color = [](int c) { return c == 0 ? Side::Outside : Side::Inside; };

    CycleContext ctx;
    ctx.z = z;
    std::set<VertexId> zverts(z.verts.begin(), z.verts.end());

    for (VertexId v : d.graph().vertices()) {
        if (zverts.count(v)) {
            ctx.vertex_side[v] = Side::OnCycle;
            continue;
        }
        if (d.rotation(v).empty()) {
            ctx.vertex_side[v] = side_of_color(0);
            continue;
        }
        std::optional<int> c;
        for (const RotEntry& r : d.rotation(v)) {
            int fc = color[fm.face_of.at({r.edge, v, r.to})];
            if (!c) c = fc;
            else if (*c != fc) throw MapError("vertex sees two colors off the cycle");
        }
        ctx.vertex_side[v] = side_of_color(*c);
    }

    for (const EdgeRec& e : d.graph().edges()) {
        if (zedges.count(e.id)) {
            ctx.edge_side[e.id] = Side::OnCycle;
            continue;
        }
        auto corner_color = [&](VertexId at) -> int {
            const auto& ch = d.chain(e.id);
            NodeId nb = (at == ch.front()) ? ch[1] : ch[ch.size() - 2];
            return color[fm.face_of.at({e.id, at, nb})];
        };
        std::optional<int> decided;
        for (VertexId end : {e.u, e.v}) {
            int c = !zverts.count(end)
                        ? (ctx.vertex_side.at(end) == Side::Inside ? 1 : 0)
                        : corner_color(end);
            if (!decided) decided = c;
            else if (*decided != c)
                throw MapError("edge classifies to both sides; evenness precondition violated");
        }
        ctx.edge_side[e.id] = side_of_color(*decided);
    }

    std::set<VertexId> vin(zverts.begin(), zverts.end()), vout(zverts.begin(), zverts.end());
    std::vector<EdgeRec> ein, eout;
    for (const EdgeRec& e : d.graph().edges()) {
        Side s = ctx.edge_side.at(e.id);
        if (s == Side::OnCycle) {
            ein.push_back(e);
            eout.push_back(e);
        } else if (s == Side::Inside) {
            ein.push_back(e);
        } else {
            eout.push_back(e);
        }
    }
    for (const auto& [v, s] : ctx.vertex_side) {
        if (s == Side::Inside) vin.insert(v);
        if (s == Side::Outside) vout.insert(v);
    }
    ctx.inside_graph = Graph(std::vector<VertexId>(vin.begin(), vin.end()), ein);
    ctx.outside_graph = Graph(std::vector<VertexId>(vout.begin(), vout.end()), eout);

    ctx.bridges = cycle_bridges(d.graph(), z);
    for (const Bridge& b : ctx.bridges) {
        Side s = ctx.edge_side.at(b.edges.front());
        for (EdgeId e : b.edges)
            if (ctx.edge_side.at(e) != s)
                throw MapError("bridge straddles the cycle; classification corrupt");
        ctx.bridge_side.push_back(s);
    }
    return ctx;
}

SphereDrawing build_reference_drawing(const Graph& g, const std::vector<VertexId>& order) {
    if (order.size() != static_cast<size_t>(g.vertex_count()))
        throw MapError("vertex order must list every vertex once");
    std::set<VertexId> check(order.begin(), order.end());
    for (VertexId v : g.vertices())
        if (!check.count(v)) throw MapError("vertex order must list every vertex once");

    geo::ArrangementInput in;
    // Convex positions on the unit circle via the rational parametrization
    // ((1-t^2)/(1+t^2), 2t/(1+t^2)); increasing t walks ccw.
    int n = static_cast<int>(order.size());
    for (int i = 0; i < n; ++i) {
        geo::Q t(2 * i - (n - 1), std::max(n, 2));
        geo::Q den = 1 + t * t;
        in.vertex_pos[order[i]] = {(1 - t * t) / den, (2 * t) / den};
    }
    for (const EdgeRec& e : g.edges())
        in.polylines[e.id] = {in.vertex_pos[e.u], in.vertex_pos[e.v]};
    return geo::arrangement_to_drawing(g, EdgeLabelling::zero(g), in);
}

}  // namespace ht
