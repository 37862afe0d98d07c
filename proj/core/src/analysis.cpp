#include "okp/analysis.hpp"

#include <string>
#include <utility>

#include "okp/errors.hpp"
#include "okp/separation.hpp"
#include "okp/tree_decomposition.hpp"
#include "okp/triangulation.hpp"

namespace okp {

namespace {

json triangulation_summary(const Triangulation& t) {
    json j;
    j["edge_pn"] = t.edge_pn;
    j["triangle_pn"] = t.triangle_pn;
    j["links"] = t.links.size();
    return j;
}

// The caps the chosen procedure certifies: links pierced at most p, face
// side sums at most c. Width and cop bounds follow as (c+5)/2 and (c+7)/4,
// the separator bound as p + 2.
struct MethodCaps {
    int edge_cap;
    int triangle_cap;
};

MethodCaps caps_for(const std::string& method, int k) {
    if (method == "strong") return {k, k % 2 == 1 ? 3 * k - 1 : 3 * k};
    if (method == "o2p") return {2, 4};
    return {std::max(0, 2 * k - 1), std::max(0, 6 * k - 3)};  // weak, min
}

}  // namespace

json run_analysis(const ConvexDrawing& d, const AnalysisOptions& opt) {
    if (d.n() < 3) {
        throw InvalidInputError("analysis needs a drawing on at least 3 vertices");
    }
    const CrossingProfile profile = crossing_profile(augment_outer_cycle(d));
    const int k = opt.k >= 0
                      ? opt.k
                      : (opt.min_k_mode ? profile.min_k_ok_for : profile.max_count);

    json out;
    out["n"] = d.n();
    out["m"] = d.m();
    out["k"] = k;
    out["lcr_of_drawing"] = profile.max_count;
    out["is_outer_k_planar"] = profile.max_count <= k;
    out["min_k_planar_k"] = profile.min_k_ok_for;
    out["min_k_mode"] = opt.min_k_mode;

    json tris = json::object();
    Triangulation chosen;  // the one used for decomposition and separation
    std::string chosen_method;
    if (opt.min_k_mode) {
        if (profile.min_k_ok_for <= k) {
            chosen = triangulate_min(d, k, opt.checked);
            chosen_method = "min";
            tris["min"] = triangulation_summary(chosen);
        }
    } else if (profile.max_count <= k) {
        tris["weak"] = triangulation_summary(triangulate_weak(d, k, opt.checked));
        Triangulation strong = triangulate_strong(d, k, opt.checked);
        tris["strong"] = triangulation_summary(strong);
        if (profile.max_count <= 2) {
            Triangulation o2p = triangulate_o2p(d, opt.checked);
            tris["o2p"] = triangulation_summary(o2p);
            if (k <= 2) {
                chosen = std::move(o2p);
                chosen_method = "o2p";
            }
        }
        if (chosen_method.empty()) {
            chosen = std::move(strong);
            chosen_method = "strong";
        }
    }
    out["triangulations"] = tris;

    if (!chosen_method.empty()) {
        const TreeDecomposition td = build_tree_decomposition(d, chosen);
        json jtd;
        jtd["method"] = chosen_method;
        jtd["width"] = td.width;
        jtd["bag_count"] = td.bags.size();
        out["tree_decomposition"] = jtd;

        const Separation sep = build_separation(d, chosen);
        json jsep;
        jsep["order"] = sep.order;
        jsep["balance"] = sep.balance;
        out["separation"] = jsep;

        const MethodCaps caps = caps_for(chosen_method, k);
        json bounds;
        bounds["treewidth_le"] = (caps.triangle_cap + 5) / 2;
        bounds["separator_le"] = caps.edge_cap + 2;
        bounds["cop_number_le"] = (caps.triangle_cap + 7) / 4.0;
        out["bounds"] = bounds;
    } else {
        out["tree_decomposition"] = nullptr;
        out["separation"] = nullptr;
        out["bounds"] = nullptr;
    }
    return out;
}

}  // namespace okp
