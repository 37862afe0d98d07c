#include "okp/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <string>
#include <vector>

#include "okp/errors.hpp"

namespace okp {

namespace {

json pair_json(int a, int b) { return json::array({a, b}); }

std::pair<int, int> int_pair(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
        !j[1].is_number_integer()) {
        throw InvalidInputError(std::string(what) + " must be a pair of integers");
    }
    return {j[0].get<int>(), j[1].get<int>()};
}

std::vector<Edge> edge_list(const json& j, const char* what) {
    if (!j.is_array()) {
        throw InvalidInputError(std::string(what) + " must be an array");
    }
    std::vector<Edge> out;
    out.reserve(j.size());
    for (const json& e : j) {
        const auto [a, b] = int_pair(e, what);
        out.push_back(make_edge(a, b));
    }
    return out;
}

template <typename F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInputError(std::string("malformed ") + what + ": " + e.what());
    }
}

}  // namespace

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInputError(std::string("malformed JSON: ") + e.what());
    }
}

json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInputError("cannot open file: " + path);
    }
    try {
        return json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInputError("malformed JSON in " + path + ": " + e.what());
    }
}

json to_json(const ConvexDrawing& d) {
    json j;
    j["n"] = d.n();
    json edges = json::array();
    for (const Edge& e : d.edges()) edges.push_back(pair_json(e.first, e.second));
    j["edges"] = edges;
    return j;
}

ConvexDrawing drawing_from_json(const json& j) {
    return guarded("drawing", [&] {
        if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
            throw InvalidInputError("drawing JSON needs fields \"n\" and \"edges\"");
        }
        if (!j["n"].is_number_integer()) {
            throw InvalidInputError("drawing field \"n\" must be an integer");
        }
        ConvexDrawing d(j["n"].get<int>());
        for (const Edge& e : edge_list(j["edges"], "drawing edge")) {
            d.add_edge(e.first, e.second);
        }
        return d;
    });
}

json to_json(const Triangulation& t) {
    json j;
    j["n"] = t.n;
    json links = json::array();
    for (const InnerLink& l : t.links) {
        json entry;
        entry["link"] = pair_json(l.oriented.first, l.oriented.second);
        json piercers = json::array();
        for (const Edge& e : l.piercers) piercers.push_back(pair_json(e.first, e.second));
        entry["piercers"] = piercers;
        links.push_back(entry);
    }
    j["inner_links"] = links;
    j["edge_pn"] = t.edge_pn;
    j["triangle_pn"] = t.triangle_pn;
    json trace = json::array();
    for (const SplitRecord& r : t.trace) {
        json entry;
        entry["link"] = pair_json(r.active.first, r.active.second);
        entry["case"] = split_case_tag(r.kind);
        entry["split"] = r.split_vertex;
        entry["new_links"] = json::array({pair_json(r.new_links[0].first, r.new_links[0].second),
                                          pair_json(r.new_links[1].first, r.new_links[1].second)});
        entry["piercing"] = pair_json(r.new_pn[0], r.new_pn[1]);
        trace.push_back(entry);
    }
    j["trace"] = trace;
    return j;
}

Triangulation triangulation_from_json(const ConvexDrawing& d, const json& j) {
    return guarded("triangulation", [&] {
        if (!j.is_object() || !j.contains("n") || !j.contains("inner_links")) {
            throw InvalidInputError(
                "triangulation JSON needs fields \"n\" and \"inner_links\"");
        }
        if (j["n"].get<int>() != d.n()) {
            throw InvalidInputError("triangulation is over " +
                                    j["n"].dump() + " vertices but the drawing has " +
                                    std::to_string(d.n()));
        }
        std::vector<Edge> links;
        std::vector<std::vector<Edge>> stored_piercers;
        for (const json& entry : j["inner_links"]) {
            const auto [u, v] = int_pair(entry.at("link"), "inner link");
            links.push_back(make_edge(u, v));
            stored_piercers.push_back(edge_list(entry.at("piercers"), "piercer"));
        }
        Triangulation t = triangulation_from_links(d, links);
        // The rebuilt structure must agree with every stored piercer list.
        for (size_t i = 0; i < links.size(); ++i) {
            std::vector<Edge> stored = stored_piercers[i];
            std::sort(stored.begin(), stored.end());
            bool found = false;
            for (const InnerLink& l : t.links) {
                if (make_edge(l.oriented.first, l.oriented.second) != links[i]) continue;
                std::vector<Edge> rebuilt = l.piercers;
                std::sort(rebuilt.begin(), rebuilt.end());
                if (rebuilt != stored) {
                    throw InvalidInputError(
                        "stored piercers of link {" + std::to_string(links[i].first) +
                        "," + std::to_string(links[i].second) +
                        "} do not match the drawing");
                }
                found = true;
            }
            if (!found) {
                throw InvalidInputError("stored link is missing from the rebuild");
            }
        }
        if (j.contains("edge_pn") && j["edge_pn"].get<int>() != t.edge_pn) {
            throw InvalidInputError("stored edge piercing number does not match");
        }
        if (j.contains("triangle_pn") && j["triangle_pn"].get<int>() != t.triangle_pn) {
            throw InvalidInputError("stored triangle piercing number does not match");
        }
        return t;
    });
}

json to_json(const TreeDecomposition& td) {
    json j;
    j["bags"] = td.bags;
    json tree = json::array();
    for (const auto& [a, b] : td.tree_edges) tree.push_back(pair_json(a, b));
    j["tree"] = tree;
    j["width"] = td.width;
    j["provenance"] = td.provenance;
    return j;
}

TreeDecomposition td_from_json(const json& j) {
    return guarded("tree decomposition", [&] {
        TreeDecomposition td;
        if (!j.is_object() || !j.contains("bags") || !j.contains("tree")) {
            throw InvalidInputError(
                "tree decomposition JSON needs fields \"bags\" and \"tree\"");
        }
        td.bags = j["bags"].get<std::vector<std::vector<Vertex>>>();
        for (const json& e : j["tree"]) {
            td.tree_edges.push_back(int_pair(e, "tree edge"));
        }
        int max_vertex = -1;
        for (const auto& bag : td.bags) {
            for (Vertex v : bag) max_vertex = std::max(max_vertex, v);
        }
        td.n = j.contains("n") ? j["n"].get<int>() : max_vertex + 1;
        int max_size = 0;
        for (const auto& bag : td.bags) {
            max_size = std::max(max_size, static_cast<int>(bag.size()));
        }
        td.width = j.contains("width") ? j["width"].get<int>() : max_size - 1;
        if (j.contains("provenance")) {
            td.provenance = j["provenance"].get<std::vector<std::string>>();
        }
        return td;
    });
}

json to_json(const Separation& s) {
    json j;
    j["A"] = s.a;
    j["B"] = s.b;
    j["order"] = s.order;
    j["balance"] = s.balance;
    return j;
}

Separation separation_from_json(const json& j) {
    return guarded("separation", [&] {
        Separation s;
        s.a = j.at("A").get<std::vector<Vertex>>();
        s.b = j.at("B").get<std::vector<Vertex>>();
        s.order = j.at("order").get<int>();
        s.balance = j.at("balance").get<double>();
        return s;
    });
}

json to_json(const OracleResult& r) {
    json j;
    j["value"] = r.value;
    j["witness"] = r.witness;
    j["method"] = r.method;
    return j;
}

}  // namespace okp
