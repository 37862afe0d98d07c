#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "okp/drawing.hpp"
#include "okp/errors.hpp"
#include "okp/generators.hpp"
#include "okp/oracles.hpp"
#include "okp/separation.hpp"
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

std::vector<Vertex> separator_of(const Separation& s) {
    std::vector<Vertex> out;
    std::set_intersection(s.a.begin(), s.a.end(), s.b.begin(), s.b.end(),
                          std::back_inserter(out));
    return out;
}

void check_separation(const ConvexDrawing& d, const Separation& s) {
    const ValidationReport rep = validate_separation(d, s);
    CAPTURE(rep.issues.empty() ? std::string() : rep.issues.front());
    CHECK(rep.ok);
    const int n = d.n();
    // Balanced shores: both private sides hold at most 2n/3 vertices.
    std::vector<Vertex> a_only;
    std::set_difference(s.a.begin(), s.a.end(), s.b.begin(), s.b.end(),
                        std::back_inserter(a_only));
    std::vector<Vertex> b_only;
    std::set_difference(s.b.begin(), s.b.end(), s.a.begin(), s.a.end(),
                        std::back_inserter(b_only));
    CHECK(3 * static_cast<int>(a_only.size()) <= 2 * n);
    CHECK(3 * static_cast<int>(b_only.size()) <= 2 * n);
    CHECK(s.order == static_cast<int>(separator_of(s).size()));
}

}  // namespace

TEST_CASE("hexagon fan separation, fully pinned") {
    const ConvexDrawing c6 = cycle(6);
    const Triangulation t = triangulate_strong(c6, 0, true);

    // The centroid is the face whose removal splits the four-face fan into
    // halves: face (1,2,5), index 1 in creation order.
    const int c = centroid_triangle(t);
    std::array<Vertex, 3> tri = t.faces[c].tri;
    std::sort(tri.begin(), tri.end());
    CHECK(tri == std::array<Vertex, 3>{1, 2, 5});

    const Separation s = build_separation(c6, t);
    CHECK(s.a == std::vector<Vertex>{2, 3, 4, 5});
    CHECK(s.b == std::vector<Vertex>{0, 1, 2, 5});
    CHECK(s.order == 2);
    CHECK(s.balance == doctest::Approx(2.0 / 6.0));
    check_separation(c6, s);
}

TEST_CASE("the triangle produces the trivial separation") {
    const ConvexDrawing d = cycle(3);
    const Triangulation t = triangulate_weak(d, 0, true);
    const Separation s = build_separation(d, t);
    const std::vector<Vertex> all{0, 1, 2};
    CHECK(s.a == all);
    CHECK(s.b == all);
    CHECK(s.order == 3);
    check_separation(d, s);
}

TEST_CASE("complete graphs separate within the piercing budget") {
    for (int n : {4, 5}) {
        const ConvexDrawing kn = complete_graph(n);
        const int k = n - 3;  // K4 is outer 1-planar, K5 outer 2-planar
        const Triangulation t = triangulate_strong(kn, k, true);
        const Separation s = build_separation(kn, t);
        check_separation(kn, s);
        CHECK(s.order <= t.edge_pn + 2);
    }
}

TEST_CASE("separator stays within piercing-number plus two") {
    for (int k = 1; k <= 3; ++k) {
        for (int n : {9, 16, 27, 40}) {
            for (std::uint64_t seed : {3u, 4u}) {
                const RandomDrawing rd =
                    random_outer_k_planar(n, k, 5200u + seed + 13u * n);
                CAPTURE(k);
                CAPTURE(n);
                const Triangulation t = triangulate_strong(rd.drawing, k, true);
                const Separation s = build_separation(rd.drawing, t);
                check_separation(rd.drawing, s);
                CHECK(s.order <= t.edge_pn + 2);
                CHECK(s.order <= k + 2);  // headline bound
            }
        }
    }
}

TEST_CASE("construction never beats the exact optimum") {
    for (int n = 6; n <= 11; ++n) {
        const RandomDrawing rd = random_outer_k_planar(n, 2, 900u + n);
        const Triangulation t = triangulate_strong(rd.drawing, 2, true);
        const Separation s = build_separation(rd.drawing, t);
        check_separation(rd.drawing, s);
        const OracleResult opt = brute_min_balanced_separation(rd.drawing);
        CAPTURE(n);
        CHECK(opt.value <= s.order);
    }
}

TEST_CASE("validator rejects a crossing edge and bad bookkeeping") {
    const ConvexDrawing c4 = cycle(4);

    Separation crossing;
    crossing.a = {0, 1};
    crossing.b = {2, 3};
    crossing.order = 0;
    crossing.balance = 0.5;
    const ValidationReport r1 = validate_separation(c4, crossing);
    CHECK_FALSE(r1.ok);  // edge {1,2} runs between the private sides
    CHECK(!r1.issues.empty());

    Separation uncovered;
    uncovered.a = {0, 1};
    uncovered.b = {0, 1};
    uncovered.order = 2;
    uncovered.balance = 0.0;
    CHECK_FALSE(validate_separation(c4, uncovered).ok);

    Separation wrong_order;
    wrong_order.a = {0, 1, 2, 3};
    wrong_order.b = {0, 1, 2, 3};
    wrong_order.order = 1;  // separator is actually all four vertices
    wrong_order.balance = 0.0;
    CHECK_FALSE(validate_separation(c4, wrong_order).ok);

    Separation wrong_balance;
    wrong_balance.a = {0, 1, 2, 3};
    wrong_balance.b = {0, 1, 2, 3};
    wrong_balance.order = 4;
    wrong_balance.balance = 0.25;  // both private sides are empty
    CHECK_FALSE(validate_separation(c4, wrong_balance).ok);
}

TEST_CASE("separations from every triangulation method agree on validity") {
    const RandomDrawing rd = random_outer_k_planar(30, 2, 777);
    for (const Triangulation& t :
         {triangulate_strong(rd.drawing, 2, true),
          triangulate_weak(rd.drawing, 2, true), triangulate_o2p(rd.drawing, true)}) {
        const Separation s = build_separation(rd.drawing, t);
        check_separation(rd.drawing, s);
        CHECK(s.order <= t.edge_pn + 2);
    }
}

TEST_CASE("large instance smoke test") {
    const RandomDrawing rd = random_outer_k_planar(5000, 2, 1337);
    const Triangulation t = triangulate_strong(rd.drawing, 2, true);
    const Separation s = build_separation(rd.drawing, t);
    check_separation(rd.drawing, s);
    CHECK(s.order <= 4);
}
