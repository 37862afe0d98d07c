#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "okp/drawing.hpp"
#include "okp/errors.hpp"
#include "okp/json_io.hpp"
#include "okp/oracles.hpp"
#include "okp/separation.hpp"
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

bool same_drawing(const ConvexDrawing& a, const ConvexDrawing& b) {
    return a.n() == b.n() && a.edges() == b.edges();
}

}  // namespace

TEST_CASE("drawing JSON round trip") {
    const ConvexDrawing k5 = complete_graph(5);
    const json j = to_json(k5);
    CHECK(j["n"] == 5);
    CHECK(j["edges"].size() == 10);
    CHECK(j["edges"][0] == json::array({0, 1}));
    CHECK(same_drawing(drawing_from_json(j), k5));

    // Text form survives a parse round trip.
    CHECK(same_drawing(drawing_from_json(parse_json_text(j.dump())), k5));

    // Edgeless drawings round trip as well.
    const ConvexDrawing bare(4);
    CHECK(same_drawing(drawing_from_json(to_json(bare)), bare));
}

TEST_CASE("triangulation JSON round trip preserves links, piercers, stats") {
    const ConvexDrawing k5 = complete_graph(5);
    const Triangulation t = triangulate_strong(k5, 2);
    const json j = to_json(t);
    CHECK(j["n"] == 5);
    CHECK(j["inner_links"].size() == t.links.size());
    CHECK(j["edge_pn"] == t.edge_pn);
    CHECK(j["triangle_pn"] == t.triangle_pn);
    CHECK(j["trace"].size() == t.trace.size());
    for (const json& step : j["trace"]) {
        REQUIRE(step.contains("link"));
        REQUIRE(step.contains("case"));
        REQUIRE(step.contains("split"));
        REQUIRE(step.contains("new_links"));
        REQUIRE(step.contains("piercing"));
    }

    const Triangulation back = triangulation_from_json(k5, j);
    REQUIRE(back.links.size() == t.links.size());
    for (size_t i = 0; i < t.links.size(); ++i) {
        CHECK(back.links[i].oriented == t.links[i].oriented);
        CHECK(back.links[i].piercers == t.links[i].piercers);
    }
    CHECK(back.edge_pn == t.edge_pn);
    CHECK(back.triangle_pn == t.triangle_pn);
    CHECK(back.faces.size() == t.faces.size());
}

TEST_CASE("triangulation JSON rejects piercers that contradict the drawing") {
    const ConvexDrawing k5 = complete_graph(5);
    json j = to_json(triangulate_strong(k5, 2));

    json tampered = j;
    REQUIRE(tampered["inner_links"][0]["piercers"].size() > 0);
    tampered["inner_links"][0]["piercers"] = json::array({json::array({0, 1})});
    CHECK_THROWS_AS(triangulation_from_json(k5, tampered), InvalidInputError);

    json wrong_edge_pn = j;
    wrong_edge_pn["edge_pn"] = 17;
    CHECK_THROWS_AS(triangulation_from_json(k5, wrong_edge_pn), InvalidInputError);

    json wrong_triangle_pn = j;
    wrong_triangle_pn["triangle_pn"] = 17;
    CHECK_THROWS_AS(triangulation_from_json(k5, wrong_triangle_pn), InvalidInputError);

    // Mismatched vertex count.
    CHECK_THROWS_AS(triangulation_from_json(complete_graph(6), j), InvalidInputError);
}

TEST_CASE("tree decomposition JSON round trip") {
    const ConvexDrawing k5 = complete_graph(5);
    const TreeDecomposition td = build_tree_decomposition(k5, triangulate_o2p(k5));
    const json j = to_json(td);
    CHECK(j["bags"].size() == td.bags.size());
    CHECK(j["tree"].size() == td.tree_edges.size());
    CHECK(j["width"] == td.width);
    CHECK(j["provenance"].size() == td.provenance.size());

    const TreeDecomposition back = td_from_json(j);
    CHECK(back.bags == td.bags);
    CHECK(back.tree_edges == td.tree_edges);
    CHECK(back.width == td.width);
    CHECK(back.provenance == td.provenance);
    CHECK(validate_td(k5, back).ok);

    // Width and provenance are optional on input; width is recomputed.
    json minimal;
    minimal["bags"] = json::array({json::array({0, 1}), json::array({1, 2})});
    minimal["tree"] = json::array({json::array({0, 1})});
    const TreeDecomposition small = td_from_json(minimal);
    CHECK(small.width == 1);
    CHECK(small.n == 3);
    CHECK(small.provenance.empty());
}

TEST_CASE("separation JSON round trip") {
    const ConvexDrawing k5 = complete_graph(5);
    const Separation s = build_separation(k5, triangulate_o2p(k5));
    const json j = to_json(s);
    CHECK(j.contains("A"));
    CHECK(j.contains("B"));
    CHECK(j.contains("order"));
    CHECK(j.contains("balance"));

    const Separation back = separation_from_json(j);
    CHECK(back.a == s.a);
    CHECK(back.b == s.b);
    CHECK(back.order == s.order);
    CHECK(back.balance == doctest::Approx(s.balance));
    CHECK(validate_separation(k5, back).ok);
}

TEST_CASE("oracle result JSON shape") {
    const OracleResult r = brute_treewidth(complete_graph(4));
    const json j = to_json(r);
    CHECK(j["value"] == 3);
    CHECK(j["method"] == "treewidth-subset-dp");
    CHECK(j["witness"].is_array());
    CHECK(j["witness"].size() == 1);
}

TEST_CASE("malformed JSON raises input errors") {
    CHECK_THROWS_AS(parse_json_text("{"), InvalidInputError);
    CHECK_THROWS_AS(parse_json_text(""), InvalidInputError);
    CHECK_THROWS_AS(parse_json_text("[1, 2,"), InvalidInputError);

    CHECK_THROWS_AS(drawing_from_json(parse_json_text("{\"edges\": []}")),
                    InvalidInputError);
    CHECK_THROWS_AS(drawing_from_json(parse_json_text("{\"n\": 4}")),
                    InvalidInputError);
    CHECK_THROWS_AS(drawing_from_json(parse_json_text("{\"n\": \"four\", \"edges\": []}")),
                    InvalidInputError);
    CHECK_THROWS_AS(
        drawing_from_json(parse_json_text("{\"n\": 4, \"edges\": [[0]]}")),
        InvalidInputError);
    CHECK_THROWS_AS(
        drawing_from_json(parse_json_text("{\"n\": 4, \"edges\": [[0, 9]]}")),
        InvalidInputError);

    CHECK_THROWS_AS(td_from_json(parse_json_text("{\"bags\": []}")),
                    InvalidInputError);
    CHECK_THROWS_AS(td_from_json(parse_json_text("{\"bags\": [[0, \"x\"]], \"tree\": []}")),
                    InvalidInputError);
    CHECK_THROWS_AS(separation_from_json(parse_json_text("{\"A\": [0]}")),
                    InvalidInputError);
    CHECK_THROWS_AS(
        triangulation_from_json(complete_graph(4), parse_json_text("{\"n\": 4}")),
        InvalidInputError);
}

TEST_CASE("JSON file parsing") {
    const std::string path = "/tmp/okp_json_io_test_drawing.json";
    {
        std::ofstream out(path);
        out << to_json(complete_graph(5)).dump(2);
    }
    CHECK(same_drawing(drawing_from_json(parse_json_file(path)), complete_graph(5)));
    std::remove(path.c_str());

    CHECK_THROWS_AS(parse_json_file("/tmp/okp_json_io_test_missing.json"),
                    InvalidInputError);

    const std::string bad = "/tmp/okp_json_io_test_bad.json";
    {
        std::ofstream out(bad);
        out << "{not json";
    }
    CHECK_THROWS_AS(parse_json_file(bad), InvalidInputError);
    std::remove(bad.c_str());
}
