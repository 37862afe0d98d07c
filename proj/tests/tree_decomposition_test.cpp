#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "okp/drawing.hpp"
#include "okp/errors.hpp"
#include "okp/generators.hpp"
#include "okp/oracles.hpp"
#include "okp/tree_decomposition.hpp"
#include "okp/triangulation.hpp"

using namespace okp;

namespace {

ConvexDrawing complete_graph(int n) {
    ConvexDrawing d(n);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) d.add_edge(a, b);
    }
    return d;
}

ConvexDrawing cycle(int n) {
    ConvexDrawing d(n);
    for (int v = 0; v < n; ++v) d.add_edge(v, (v + 1) % n);
    return d;
}

std::array<Vertex, 3> sorted_tri(const TriFace& f) {
    std::array<Vertex, 3> s = f.tri;
    std::sort(s.begin(), s.end());
    return s;
}

// Two stacked K4s: chords {0,2},{1,3},{0,3} and {4,6},{5,7},{4,7} on an
// octagon. The triangulation splits into four parts.
ConvexDrawing two_k4s() {
    ConvexDrawing d = cycle(8);
    for (const Edge& e :
         std::vector<Edge>{{0, 2}, {1, 3}, {0, 3}, {4, 6}, {5, 7}, {4, 7}}) {
        d.add_edge(e.first, e.second);
    }
    return d;
}

// Hexagon with chords {2,4} and {0,2}, triangulated by hand with the links
// {1,3}, {3,5}, {1,5}. The central face (1,3,5) sees {2,4} as a bent edge.
struct BentFixture {
    ConvexDrawing d;
    Triangulation t;
};

BentFixture bent_fixture() {
    ConvexDrawing d = cycle(6);
    d.add_edge(2, 4);
    d.add_edge(0, 2);
    Triangulation t =
        triangulation_from_links(d, {{1, 3}, {3, 5}, {1, 5}});
    return {std::move(d), std::move(t)};
}

// Face triple of a part node, sorted, for order-independent assertions.
std::array<Vertex, 3> node_tri(const Triangulation& t, const PartFace& pf) {
    return sorted_tri(t.faces[pf.face]);
}

void check_split_shape(const Triangulation& t, const PartSplit& s) {
    // Every face appears in exactly one part; parent/child wiring is sane.
    std::vector<int> seen(t.faces.size(), 0);
    for (size_t p = 0; p < s.parts.size(); ++p) {
        const TriangulationPart& part = s.parts[p];
        REQUIRE(!part.nodes.empty());
        CHECK(part.nodes[0].parent == -1);
        for (size_t i = 0; i < part.nodes.size(); ++i) {
            const PartFace& pf = part.nodes[i];
            REQUIRE(pf.face >= 0);
            REQUIRE(pf.face < static_cast<int>(t.faces.size()));
            seen[pf.face] += 1;
            CHECK(s.part_of_face[pf.face] == static_cast<int>(p));
            if (pf.left >= 0) {
                CHECK(part.nodes[pf.left].parent == static_cast<int>(i));
                CHECK(part.nodes[pf.left].parent_link == pf.left_link);
                CHECK(t.links[pf.left_link].pn() > 0);
            }
            if (pf.right >= 0) {
                CHECK(part.nodes[pf.right].parent == static_cast<int>(i));
                CHECK(part.nodes[pf.right].parent_link == pf.right_link);
                CHECK(t.links[pf.right_link].pn() > 0);
            }
            if (pf.left >= 0 && pf.right >= 0) {
                const InnerLink& ll = t.links[pf.left_link];
                const InnerLink& rl = t.links[pf.right_link];
                const bool lighter = ll.pn() < rl.pn();
                const bool tie = ll.pn() == rl.pn();
                CHECK((lighter || tie));
            }
        }
    }
    for (int c : seen) CHECK(c == 1);
    for (int id : s.unpierced_links) {
        CHECK(t.links[id].pn() == 0);
        const InnerLink& l = t.links[id];
        CHECK(s.part_of_face[l.upper_face] != s.part_of_face[l.lower_face]);
    }
}

}  // namespace

TEST_CASE("weak dual shapes: edge, path, chain") {
    const Triangulation k4 = triangulate_strong(complete_graph(4), 1, true);
    CHECK(weak_dual(k4) == std::vector<std::pair<int, int>>{{0, 1}});

    // The hexagon fans from vertex 5: faces in creation order
    // (0,1,5),(1,2,5),(2,3,5),(3,4,5) chained by the fan links.
    const Triangulation fan = triangulate_strong(cycle(6), 0, true);
    CHECK(weak_dual(fan) ==
          std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});

    const Triangulation k5 = triangulate_strong(complete_graph(5), 2, true);
    CHECK(weak_dual(k5) == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

    // Dual edge count is always (#faces - 1), and the dual is connected.
    const RandomDrawing rd = random_outer_k_planar(24, 3, 99);
    const Triangulation t = triangulate_strong(rd.drawing, 3, true);
    const auto dual = weak_dual(t);
    CHECK(dual.size() == t.faces.size() - 1);
    std::vector<std::vector<int>> adj(t.faces.size());
    for (auto [a, b] : dual) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> stack{0};
    std::set<int> reach{0};
    while (!stack.empty()) {
        const int f = stack.back();
        stack.pop_back();
        for (int g : adj[f]) {
            if (reach.insert(g).second) stack.push_back(g);
        }
    }
    CHECK(reach.size() == t.faces.size());
}

TEST_CASE("splitting at unpierced links") {
    // K4: the single link {0,2} is pierced, so there is one part.
    const Triangulation k4 = triangulate_strong(complete_graph(4), 1, true);
    const PartSplit sk4 = split_at_unpierced_links(k4);
    check_split_shape(k4, sk4);
    CHECK(sk4.parts.size() == 1);
    CHECK(sk4.parts[0].nodes.size() == 2);
    CHECK(sk4.unpierced_links.empty());
    // The part is re-rooted at the lexicographically smallest leaf face.
    CHECK(node_tri(k4, sk4.parts[0].nodes[0]) == std::array<Vertex, 3>{0, 1, 2});

    // Hexagon fan: all three links unpierced, four singleton parts.
    const Triangulation fan = triangulate_strong(cycle(6), 0, true);
    const PartSplit sfan = split_at_unpierced_links(fan);
    check_split_shape(fan, sfan);
    CHECK(sfan.parts.size() == 4);
    for (const TriangulationPart& p : sfan.parts) CHECK(p.nodes.size() == 1);
    CHECK(sfan.unpierced_links.size() == 3);

    // Two stacked K4s: three unpierced links separate four parts, two of
    // which are joined internally by a pierced link.
    const Triangulation t8 = triangulate_strong(two_k4s(), 1, true);
    const PartSplit s8 = split_at_unpierced_links(t8);
    check_split_shape(t8, s8);
    CHECK(s8.parts.size() == 4);
    std::multiset<size_t> sizes;
    for (const TriangulationPart& p : s8.parts) sizes.insert(p.nodes.size());
    CHECK(sizes == std::multiset<size_t>{1, 1, 2, 2});
    std::set<Edge> unpierced;
    std::set<Edge> pierced;
    for (int id : s8.unpierced_links) {
        const InnerLink& l = t8.links[id];
        unpierced.insert(make_edge(l.oriented.first, l.oriented.second));
    }
    for (const InnerLink& l : t8.links) {
        if (l.pn() > 0) {
            pierced.insert(make_edge(l.oriented.first, l.oriented.second));
        }
    }
    CHECK(unpierced == std::set<Edge>{{0, 3}, {3, 7}, {4, 7}});
    CHECK(pierced == std::set<Edge>{{0, 2}, {4, 6}});
}

TEST_CASE("edge classification on the bent fixture") {
    const BentFixture fx = bent_fixture();
    CHECK(fx.t.edge_pn == 2);
    CHECK(fx.t.triangle_pn == 4);

    const std::vector<ClassifiedEdge> cls = classify_pierced_edges(fx.t);
    std::map<std::pair<std::array<Vertex, 3>, Edge>, EdgeClassification> got;
    for (const ClassifiedEdge& c : cls) {
        const auto key = std::make_pair(sorted_tri(fx.t.faces[c.face]), c.edge);
        CHECK(got.emplace(key, c.kind).second);  // each incidence appears once
    }
    REQUIRE(got.size() == 6);
    const std::array<Vertex, 3> f015{0, 1, 5};
    const std::array<Vertex, 3> f123{1, 2, 3};
    const std::array<Vertex, 3> f135{1, 3, 5};
    const std::array<Vertex, 3> f345{3, 4, 5};
    const Edge e02{0, 2};
    const Edge e24{2, 4};
    CHECK(got.at({f135, e24}) == EdgeClassification::Bent);
    CHECK(got.at({f135, e02}) == EdgeClassification::Lineal);
    CHECK(got.at({f123, e02}) == EdgeClassification::ParentOnly);
    CHECK(got.at({f015, e02}) == EdgeClassification::Short);
    CHECK(got.at({f123, e24}) == EdgeClassification::ParentOnly);
    CHECK(got.at({f345, e24}) == EdgeClassification::ParentOnly);
}

TEST_CASE("complete graph on five vertices, full decomposition") {
    const ConvexDrawing k5 = complete_graph(5);
    const Triangulation t = triangulate_o2p(k5, true);
    const TreeDecomposition td = build_tree_decomposition(k5, t);

    REQUIRE(td.bags.size() == 5);
    CHECK(td.bags[0] == std::vector<Vertex>{0, 1, 2});
    CHECK(td.bags[1] == std::vector<Vertex>{0, 1, 2, 3, 4});
    CHECK(td.bags[2] == std::vector<Vertex>{0, 2, 3, 4});
    CHECK(td.bags[3] == std::vector<Vertex>{0, 2, 3, 4});
    CHECK(td.bags[4] == std::vector<Vertex>{0, 3, 4});
    CHECK(td.tree_edges ==
          std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(td.provenance ==
          std::vector<std::string>{"face:0,1,2", "primary:0,1,2->0,2,3",
                                   "face:0,2,3", "primary:0,2,3->0,3,4",
                                   "face:0,3,4"});
    CHECK(td.width == 4);

    const ValidationReport rep = validate_td(k5, td);
    CHECK(rep.ok);
    CHECK(rep.issues.empty());
    CHECK(rep.width == 4);

    // K5 has treewidth exactly 4, so this decomposition is optimal.
    CHECK(brute_treewidth(k5).value == 4);
}

TEST_CASE("complete graph on four vertices, full decomposition") {
    const ConvexDrawing k4 = complete_graph(4);
    const Triangulation t = triangulate_strong(k4, 1, true);
    const TreeDecomposition td = build_tree_decomposition(k4, t);
    REQUIRE(td.bags.size() == 3);
    CHECK(td.bags[0] == std::vector<Vertex>{0, 1, 2});
    CHECK(td.bags[1] == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(td.bags[2] == std::vector<Vertex>{0, 2, 3});
    CHECK(td.tree_edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(td.width == 3);
    CHECK(validate_td(k4, td).ok);
}

TEST_CASE("bent fixture lifts through a secondary bag") {
    const BentFixture fx = bent_fixture();
    const TreeDecomposition td = build_tree_decomposition(fx.d, fx.t);

    REQUIRE(td.bags.size() == 8);
    std::multiset<std::vector<Vertex>> bags(td.bags.begin(), td.bags.end());
    const std::multiset<std::vector<Vertex>> expect{
        {0, 1, 5},           // face (0,1,5)
        {0, 1, 2, 5},        // primary above (1,3,5): endpoint 2 of {0,2}
        {1, 2, 3, 5},        // face (1,3,5): lineal {0,2} lifts 2
        {1, 3, 4, 5},        // primary above (3,4,5): bent {2,4} lifts 4
        {1, 2, 3, 4, 5},     // secondary at (1,3,5): holds 2 and 4 together
        {1, 2, 3, 5},        // primary above (1,2,3)
        {3, 4, 5},           // face (3,4,5)
        {1, 2, 3},           // face (1,2,3)
    };
    CHECK(bags == expect);
    CHECK(td.width == 4);
    CHECK(validate_td(fx.d, td).ok);

    // Exactly one secondary bag was needed (one bent edge).
    int secondaries = 0;
    for (const std::string& p : td.provenance) {
        if (p.rfind("secondary:", 0) == 0) ++secondaries;
    }
    CHECK(secondaries == 1);
}

TEST_CASE("hexagon fan: unpierced links rejoin singleton parts") {
    const ConvexDrawing c6 = cycle(6);
    const Triangulation t = triangulate_strong(c6, 0, true);
    const TreeDecomposition td = build_tree_decomposition(c6, t);
    // No piercing edges anywhere: the bags are exactly the four face bags.
    REQUIRE(td.bags.size() == 4);
    for (const auto& b : td.bags) CHECK(b.size() == 3);
    CHECK(td.width == 2);
    CHECK(td.tree_edges.size() == 3);
    CHECK(validate_td(c6, td).ok);
}

TEST_CASE("validator rejects broken decompositions") {
    const ConvexDrawing k4 = complete_graph(4);

    TreeDecomposition missing_edge;
    missing_edge.n = 4;
    missing_edge.bags = {{0, 1, 2}, {0, 2, 3}};
    missing_edge.tree_edges = {{0, 1}};
    missing_edge.width = 2;
    const ValidationReport r1 = validate_td(k4, missing_edge);
    CHECK_FALSE(r1.ok);
    REQUIRE(!r1.issues.empty());

    TreeDecomposition broken_connectivity;
    broken_connectivity.n = 4;
    broken_connectivity.bags = {{0, 1, 2}, {1, 2, 3}, {0, 2, 3}};
    broken_connectivity.tree_edges = {{0, 1}, {1, 2}};
    broken_connectivity.width = 2;
    const ValidationReport r2 = validate_td(k4, broken_connectivity);
    CHECK_FALSE(r2.ok);

    TreeDecomposition missing_vertex;
    missing_vertex.n = 4;
    missing_vertex.bags = {{0, 1, 2}};
    missing_vertex.tree_edges = {};
    missing_vertex.width = 2;
    CHECK_FALSE(validate_td(k4, missing_vertex).ok);

    TreeDecomposition cyclic;
    cyclic.n = 4;
    cyclic.bags = {{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}};
    cyclic.tree_edges = {{0, 1}, {1, 2}, {0, 2}};
    cyclic.width = 3;
    CHECK_FALSE(validate_td(k4, cyclic).ok);

    // Every drawing edge must be covered; cycle(4) includes {0,3}.
    TreeDecomposition no_wrap;
    no_wrap.n = 4;
    no_wrap.bags = {{0, 1}, {1, 2}, {2, 3}};
    no_wrap.tree_edges = {{0, 1}, {1, 2}};
    no_wrap.width = 1;
    CHECK_FALSE(validate_td(cycle(4), no_wrap).ok);  // misses edge {0,3}
}

TEST_CASE("random drawings: decomposition is valid and within the cap") {
    for (int k = 1; k <= 3; ++k) {
        for (int n : {8, 13, 21, 34}) {
            for (std::uint64_t seed : {1u, 2u}) {
                const RandomDrawing rd =
                    random_outer_k_planar(n, k, 7000u + seed + 10u * n);
                CAPTURE(k);
                CAPTURE(n);
                CAPTURE(seed);

                const Triangulation ts = triangulate_strong(rd.drawing, k, true);
                const TreeDecomposition tds =
                    build_tree_decomposition(rd.drawing, ts);
                CHECK(validate_td(rd.drawing, tds).ok);
                CHECK(2 * (tds.width + 1) <= ts.triangle_pn + 7);
                // Headline bound: width <= 1.5k + 2.
                CHECK(tds.width <= (3 * k + (k % 2 ? 4 : 5)) / 2);

                const Triangulation tw = triangulate_weak(rd.drawing, k, true);
                const TreeDecomposition tdw =
                    build_tree_decomposition(rd.drawing, tw);
                CHECK(validate_td(rd.drawing, tdw).ok);
                CHECK(2 * (tdw.width + 1) <= tw.triangle_pn + 7);

                if (k <= 2) {
                    const Triangulation to = triangulate_o2p(rd.drawing, true);
                    const TreeDecomposition tdo =
                        build_tree_decomposition(rd.drawing, to);
                    CHECK(validate_td(rd.drawing, tdo).ok);
                    CHECK(tdo.width <= 4);  // triangle piercing number <= 4
                }
            }
        }
    }
}

TEST_CASE("small drawings: width upper-bounds the exact treewidth") {
    for (int n = 6; n <= 11; ++n) {
        for (int k = 1; k <= 2; ++k) {
            const RandomDrawing rd =
                random_outer_k_planar(n, k, 400u + 7u * n + k);
            const Triangulation t = triangulate_strong(rd.drawing, k, true);
            const TreeDecomposition td = build_tree_decomposition(rd.drawing, t);
            REQUIRE(validate_td(rd.drawing, td).ok);
            const OracleResult tw = brute_treewidth(rd.drawing);
            CAPTURE(n);
            CAPTURE(k);
            CHECK(tw.value <= td.width);
        }
    }
}

TEST_CASE("min-mode triangulations decompose as well") {
    for (int k = 1; k <= 2; ++k) {
        const RandomDrawing rd = random_outer_min_k_planar(2 * k + 9, k, 31u + k);
        const Triangulation t = triangulate_min(rd.drawing, k, true);
        const TreeDecomposition td = build_tree_decomposition(rd.drawing, t);
        CHECK(validate_td(rd.drawing, td).ok);
        CHECK(2 * (td.width + 1) <= t.triangle_pn + 7);
    }
}

TEST_CASE("large instance smoke test") {
    const RandomDrawing rd = random_outer_k_planar(2000, 3, 424242);
    const Triangulation t = triangulate_strong(rd.drawing, 3, true);
    const TreeDecomposition td = build_tree_decomposition(rd.drawing, t);
    CHECK(validate_td(rd.drawing, td).ok);
    CHECK(td.width <= 6);  // 1.5*3 + 2, floored
    CHECK(td.bags.size() >= t.faces.size());
}
