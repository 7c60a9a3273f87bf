#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "ht/graph.hpp"

using namespace ht;

namespace {

Graph complete_graph(int n, int first_vertex = 1) {
    std::vector<VertexId> vs;
    std::vector<EdgeRec> es;
    int id = 0;
    for (int i = 0; i < n; ++i) vs.push_back(first_vertex + i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            es.push_back({id++, first_vertex + i, first_vertex + j});
    return Graph(vs, es);
}

Graph cycle_graph(int n) {
    std::vector<VertexId> vs;
    std::vector<EdgeRec> es;
    for (int i = 1; i <= n; ++i) vs.push_back(i);
    for (int i = 0; i < n; ++i) es.push_back({i, i + 1, (i + 1) % n + 1});
    return Graph(vs, es);
}

}  // namespace

TEST_CASE("graph construction rejects self-loops and bad endpoints") {
    CHECK_THROWS_AS(Graph({1, 2}, {{0, 1, 1}}), GraphError);
    CHECK_THROWS_AS(Graph({1, 2}, {{0, 1, 3}}), GraphError);
    CHECK_THROWS_AS(Graph({1, 2, 3}, {{0, 1, 2}, {0, 2, 3}}), GraphError);
}

TEST_CASE("block decomposition: triangle is one block") {
    Graph g = cycle_graph(3);
    auto bd = block_decomposition(g);
    CHECK(bd.blocks.size() == 1);
    CHECK(bd.cut_vertices.empty());
    CHECK(bd.blocks[0].edge_count() == 3);
}

TEST_CASE("block decomposition: two triangles sharing one vertex") {
    // triangle 1-2-3 and triangle 3-4-5
    Graph g({1, 2, 3, 4, 5},
            {{0, 1, 2}, {1, 2, 3}, {2, 1, 3}, {3, 3, 4}, {4, 4, 5}, {5, 3, 5}});
    auto bd = block_decomposition(g);
    CHECK(bd.blocks.size() == 2);
    REQUIRE(bd.cut_vertices.size() == 1);
    CHECK(bd.cut_vertices[0] == 3);
}

TEST_CASE("block decomposition: K5 plus a pendant edge") {
    Graph k5 = complete_graph(5);
    std::vector<VertexId> vs = k5.vertices();
    vs.push_back(6);
    std::vector<EdgeRec> es = k5.edges();
    es.push_back({100, 5, 6});
    Graph g(vs, es);
    auto bd = block_decomposition(g);
    REQUIRE(bd.blocks.size() == 2);
    std::set<int> sizes;
    for (const auto& b : bd.blocks) sizes.insert(b.edge_count());
    CHECK(sizes == std::set<int>{1, 10});
    REQUIRE(bd.cut_vertices.size() == 1);
    CHECK(bd.cut_vertices[0] == 5);
}

TEST_CASE("block decomposition covers edges exactly once; blocks share <= 1 vertex") {
    // Random-ish small graphs, deterministic seeds.
    for (int n = 2; n <= 6; ++n) {
        unsigned mask_limit = 1u << (n * (n - 1) / 2);
        for (unsigned mask = 0; mask < mask_limit; mask += 7) {
            std::vector<VertexId> vs;
            for (int i = 1; i <= n; ++i) vs.push_back(i);
            std::vector<EdgeRec> es;
            int id = 0, bit = 0;
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    if (mask & (1u << bit)) es.push_back({id++, i, j});
                    ++bit;
                }
            Graph g(vs, es);
            auto bd = block_decomposition(g);
            std::multiset<EdgeId> covered;
            for (const auto& b : bd.blocks)
                for (const auto& e : b.edges()) covered.insert(e.id);
            std::multiset<EdgeId> expect;
            for (const auto& e : g.edges()) expect.insert(e.id);
            CHECK(covered == expect);
            for (size_t i = 0; i < bd.blocks.size(); ++i)
                for (size_t j = i + 1; j < bd.blocks.size(); ++j) {
                    std::set<VertexId> a(bd.blocks[i].vertices().begin(),
                                         bd.blocks[i].vertices().end());
                    int shared = 0;
                    for (VertexId v : bd.blocks[j].vertices()) shared += a.count(v);
                    CHECK(shared <= 1);
                }
        }
    }
}

TEST_CASE("bridges: K4 with z = triangle") {
    Graph g = complete_graph(4);  // vertices 1..4
    Cycle z = Cycle::from_vertices(g, {1, 2, 3});
    auto bs = cycle_bridges(g, z);
    REQUIRE(bs.size() == 1);
    CHECK_FALSE(bs[0].single_edge);
    CHECK(bs[0].attachments == std::vector<VertexId>{1, 2, 3});
    CHECK(bs[0].interior == std::vector<VertexId>{4});
    CHECK(bs[0].edges.size() == 3);
}

TEST_CASE("bridges: C4 with both diagonals") {
    Graph g({1, 2, 3, 4},
            {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 1}, {4, 1, 3}, {5, 2, 4}});
    Cycle z = Cycle::from_vertices(g, {1, 2, 3, 4});
    auto bs = cycle_bridges(g, z);
    REQUIRE(bs.size() == 2);
    CHECK(bs[0].single_edge);
    CHECK(bs[1].single_edge);
}

TEST_CASE("bridges partition E\\E(z) and V\\V(z) on all small graphs") {
    Graph g = complete_graph(6);
    Cycle z = Cycle::from_vertices(g, {1, 2, 3, 4});
    auto bs = cycle_bridges(g, z);
    std::set<EdgeId> zedges(z.edges.begin(), z.edges.end());
    std::multiset<EdgeId> covered;
    std::multiset<VertexId> vcovered;
    for (const auto& b : bs) {
        for (EdgeId e : b.edges) covered.insert(e);
        for (VertexId v : b.interior) vcovered.insert(v);
        for (VertexId a : b.attachments) CHECK(z.contains_vertex(a));
    }
    std::multiset<EdgeId> expect;
    for (const auto& e : g.edges())
        if (!zedges.count(e.id)) expect.insert(e.id);
    CHECK(covered == expect);
    CHECK(vcovered == std::multiset<VertexId>{5, 6});
}

TEST_CASE("walk_parity basics") {
    Graph g = cycle_graph(5);
    EdgeLabelling l = EdgeLabelling::zero(g);
    l.set(2, 1);
    CHECK(walk_parity(g, l, std::vector<EdgeId>{}) == 0);
    CHECK(walk_parity(g, l, std::vector<EdgeId>{2, 2}) == 0);  // edge twice
    CHECK(walk_parity(g, l, std::vector<EdgeId>{0, 1, 2, 3, 4}) == 1);
    CHECK_THROWS_AS(walk_parity(g, l, std::vector<EdgeId>{0, 2}), GraphError);
}

TEST_CASE("find_trivial_cycle: all-zero labelling returns some cycle") {
    Graph g = complete_graph(4);
    EdgeLabelling l = EdgeLabelling::zero(g);
    auto z = find_trivial_cycle(g, l);
    REQUIRE(z.has_value());
    CHECK(walk_parity(g, l, z->edges) == 0);
}

TEST_CASE("find_trivial_cycle: theta graph picks the two equal-parity paths") {
    // three x-y paths: edges (0), (1,2), (3,4); parities 1, 1, 0
    Graph g({1, 2, 3, 4}, {{0, 1, 2}, {1, 1, 3}, {2, 3, 2}, {3, 1, 4}, {4, 4, 2}});
    EdgeLabelling l = EdgeLabelling::zero(g);
    l.set(0, 1);
    l.set(1, 1);
    auto z = find_trivial_cycle(g, l);
    REQUIRE(z.has_value());
    CHECK(walk_parity(g, l, z->edges) == 0);
    std::set<EdgeId> got(z->edges.begin(), z->edges.end());
    CHECK(got == std::set<EdgeId>{0, 1, 2});
}

TEST_CASE("find_trivial_cycle: C5 with one marked edge has none") {
    Graph g = cycle_graph(5);
    EdgeLabelling l = EdgeLabelling::zero(g);
    l.set(3, 1);
    CHECK_FALSE(find_trivial_cycle(g, l).has_value());
}

TEST_CASE("find_trivial_cycle requires 2-connected") {
    Graph path({1, 2, 3}, {{0, 1, 2}, {1, 2, 3}});
    EdgeLabelling l = EdgeLabelling::zero(path);
    CHECK_THROWS_AS(find_trivial_cycle(path, l), GraphError);
}

TEST_CASE("trivial_proper_path: single edge bridge") {
    Graph g({1, 2, 3, 4}, {{0, 1, 2}, {1, 2, 3}, {2, 3, 1}, {3, 1, 3}});
    Cycle z = Cycle::from_vertices(g, {1, 2, 3});
    (void)z;
    Bridge b;
    b.single_edge = true;
    b.vertices = {1, 3};
    b.edges = {3};
    b.attachments = {1, 3};
    EdgeLabelling l = EdgeLabelling::zero(g);
    auto p = trivial_proper_path(g, b, l);
    REQUIRE(p.has_value());
    CHECK(p->edges == std::vector<EdgeId>{3});
    l.set(3, 1);
    CHECK_FALSE(trivial_proper_path(g, b, l).has_value());
}

TEST_CASE("trivial_proper_path: unique path of parity 1 gives none") {
    // bridge: x=1 - w=5 - y=2 hanging off triangle 1,2,3
    Graph g({1, 2, 3, 5}, {{0, 1, 2}, {1, 2, 3}, {2, 3, 1}, {3, 1, 5}, {4, 5, 2}});
    Cycle z = Cycle::from_vertices(g, {1, 2, 3});
    auto bs = cycle_bridges(g, z);
    REQUIRE(bs.size() == 1);
    EdgeLabelling l = EdgeLabelling::zero(g);
    l.set(3, 1);
    CHECK_FALSE(trivial_proper_path(g, bs[0], l).has_value());
    l.set(4, 1);  // now the path 1-5-2 is trivial
    auto p = trivial_proper_path(g, bs[0], l);
    REQUIRE(p.has_value());
    CHECK(walk_parity(g, l, p->edges) == 0);
}

TEST_CASE("trivial_proper_path agrees with brute force on detour bridge") {
    // bridge between x=1, y=2: path 1-5-2 plus detour 5-6-2 of opposite parity
    Graph g({1, 2, 3, 5, 6},
            {{0, 1, 2}, {1, 2, 3}, {2, 3, 1}, {3, 1, 5}, {4, 5, 2}, {5, 5, 6}, {6, 6, 2}});
    Cycle z = Cycle::from_vertices(g, {1, 2, 3});
    auto bs = cycle_bridges(g, z);
    REQUIRE(bs.size() == 1);
    EdgeLabelling l = EdgeLabelling::zero(g);
    l.set(4, 1);  // path via edge 4 has parity 1; detour via 5,6 has parity 0
    auto p = trivial_proper_path(g, bs[0], l);
    REQUIRE(p.has_value());
    CHECK(walk_parity(g, l, p->edges) == 0);
    std::set<EdgeId> got(p->edges.begin(), p->edges.end());
    CHECK(got == std::set<EdgeId>{3, 5, 6});
}

TEST_CASE("four_way_cut_vertex: star center found") {
    Graph star({0, 1, 2, 3, 4}, {{0, 0, 1}, {1, 0, 2}, {2, 0, 3}, {3, 0, 4}});
    auto r = four_way_cut_vertex(star, {1, 2, 3, 4});
    REQUIRE(r.cut.has_value());
    CHECK(*r.cut == 0);
}

TEST_CASE("four_way_cut_vertex: K4 has none, with witness") {
    Graph g = complete_graph(4);
    auto r = four_way_cut_vertex(g, {1, 2, 3, 4});
    CHECK_FALSE(r.cut.has_value());
    REQUIRE_FALSE(r.witness_path_a.empty());
    REQUIRE_FALSE(r.witness_path_b.empty());
    CHECK(r.witness_path_a.front() == 1);
    CHECK(r.witness_path_a.back() == 2);
    CHECK(r.witness_path_b.front() == 3);
    CHECK(r.witness_path_b.back() == 4);
    std::set<VertexId> a(r.witness_path_a.begin(), r.witness_path_a.end());
    for (VertexId v : r.witness_path_b) CHECK_FALSE(a.count(v));
}

TEST_CASE("four_way_cut_vertex: subdivided spider center") {
    Graph g({0, 1, 2, 3, 4, 11, 22, 33, 44},
            {{0, 0, 11}, {1, 11, 1}, {2, 0, 22}, {3, 22, 2},
             {4, 0, 33}, {5, 33, 3}, {6, 0, 44}, {7, 44, 4}});
    auto r = four_way_cut_vertex(g, {1, 2, 3, 4});
    REQUIRE(r.cut.has_value());
    CHECK(*r.cut == 0);
}

TEST_CASE("four_way_cut_vertex rejects bad attachments") {
    Graph g = complete_graph(4);
    CHECK_THROWS_AS(four_way_cut_vertex(g, {1, 1, 2, 3}), GraphError);
    CHECK_THROWS_AS(four_way_cut_vertex(g, {1, 2, 3, 9}), GraphError);
}
