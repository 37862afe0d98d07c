#include "okp/separation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <string>

#include "okp/errors.hpp"

namespace okp {

namespace {

[[noreturn]] void cert_fail(const std::string& what) {
    throw InternalCertificateError("certificate violated: " + what);
}

void require_cert(bool ok, const char* what) {
    if (!ok) cert_fail(what);
}

std::array<Vertex, 3> sorted_tri(const TriFace& f) {
    std::array<Vertex, 3> s = f.tri;
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace

int centroid_triangle(const Triangulation& t) {
    const int faces = static_cast<int>(t.faces.size());
    if (faces <= 0) {
        throw InvalidInputError("triangulation has no faces");
    }
    // Children are created after their parent, so a reverse scan sees every
    // subtree size before it is needed.
    std::vector<int> size(faces, 1);
    for (int f = faces - 1; f >= 0; --f) {
        if (t.faces[f].left_child >= 0) size[f] += size[t.faces[f].left_child];
        if (t.faces[f].right_child >= 0) size[f] += size[t.faces[f].right_child];
    }
    int best = -1;
    for (int f = 0; f < faces; ++f) {
        int max_comp = faces - size[f];
        if (t.faces[f].left_child >= 0) {
            max_comp = std::max(max_comp, size[t.faces[f].left_child]);
        }
        if (t.faces[f].right_child >= 0) {
            max_comp = std::max(max_comp, size[t.faces[f].right_child]);
        }
        if (2 * max_comp > faces) continue;
        if (best < 0 || sorted_tri(t.faces[f]) < sorted_tri(t.faces[best])) {
            best = f;
        }
    }
    require_cert(best >= 0, "the weak dual has no centroid face");
    return best;
}

Separation build_separation(const ConvexDrawing& d, const Triangulation& t) {
    const int n = d.n();
    Separation out;
    if (n <= 3) {
        // Complete on at most three vertices: everything is separator.
        for (Vertex v = 0; v < n; ++v) {
            out.a.push_back(v);
            out.b.push_back(v);
        }
        out.order = n;
        out.balance = 0.0;
        return out;
    }
    if (t.n != n) {
        throw InvalidInputError("triangulation is over " + std::to_string(t.n) +
                                " vertices but the drawing has " +
                                std::to_string(n));
    }
    const int faces = static_cast<int>(t.faces.size());
    const int f = centroid_triangle(t);
    const TriFace& face = t.faces[f];

    // The three corner-to-corner arcs around the face. tri = (a, w, b) with
    // the left side (a, w), right side (w, b) and parent side (a, b).
    struct Region {
        Vertex from, to;  // vertices strictly inside ccw (from..to)
        int link;         // bounding link id, -1 when it is an outer edge
        int count;
    };
    std::array<Region, 3> regions = {{
        {face.tri[0], face.tri[1], face.left_link,
         ccw_dist(n, face.tri[0], face.tri[1]) - 1},
        {face.tri[1], face.tri[2], face.right_link,
         ccw_dist(n, face.tri[1], face.tri[2]) - 1},
        {face.tri[2], face.tri[0], face.parent_link,
         ccw_dist(n, face.tri[2], face.tri[0]) - 1},
    }};
    // Region sizes must match the dual subtree sizes the centroid was
    // chosen by: a region of r vertices spans exactly r faces.
    {
        std::vector<int> size(faces, 1);
        for (int g = faces - 1; g >= 0; --g) {
            if (t.faces[g].left_child >= 0) size[g] += size[t.faces[g].left_child];
            if (t.faces[g].right_child >= 0) size[g] += size[t.faces[g].right_child];
        }
        const int left = face.left_child >= 0 ? size[face.left_child] : 0;
        const int right = face.right_child >= 0 ? size[face.right_child] : 0;
        require_cert(regions[0].count == left,
                     "left region does not match the left dual subtree");
        require_cert(regions[1].count == right,
                     "right region does not match the right dual subtree");
        require_cert(regions[2].count == faces - size[f],
                     "outer region does not match the dual tree remainder");
    }

    int pick = 0;
    for (int i = 1; i < 3; ++i) {
        if (regions[i].count > regions[pick].count) {
            pick = i;
        } else if (regions[i].count == regions[pick].count) {
            const Edge a = make_edge(regions[i].from, regions[i].to);
            const Edge b = make_edge(regions[pick].from, regions[pick].to);
            if (a < b) pick = i;
        }
    }
    const Region& r = regions[pick];
    require_cert(r.count > 0, "largest region around the centroid is empty");
    require_cert(r.link >= 0, "a non-empty region is bounded by an outer edge");
    require_cert(2 * r.count <= faces, "largest region exceeds half the faces");
    require_cert(3 * r.count >= faces - 1,
                 "largest region is below a third of the remainder");

    // Separator: the bounding link's endpoints plus the far endpoint of
    // every edge piercing it.
    std::set<Vertex> sep{r.from, r.to};
    for (const Edge& e : t.links[r.link].piercers) {
        const Vertex far = in_open_arc(n, r.from, r.to, e.first) ? e.second : e.first;
        require_cert(in_open_arc(n, r.to, r.from, far),
                     "piercer of the cut link has no endpoint outside the region");
        sep.insert(far);
    }
    require_cert(static_cast<int>(sep.size()) <= t.edge_pn + 2,
                 "separator exceeds the piercing bound plus two");

    for (Vertex v = 0; v < n; ++v) {
        const bool inside = in_open_arc(n, r.from, r.to, v);
        if (inside || sep.count(v)) out.a.push_back(v);
        if (!inside) out.b.push_back(v);
    }
    out.order = static_cast<int>(sep.size());
    const int a_only = static_cast<int>(out.a.size()) - out.order;
    const int b_only = static_cast<int>(out.b.size()) - out.order;
    require_cert(a_only == r.count, "region size does not match the A shore");
    require_cert(3 * std::max(a_only, b_only) <= 2 * n,
                 "a shore keeps more than two thirds of the vertices");
    out.balance = static_cast<double>(std::max(a_only, b_only)) / n;

    // Validate against the augmented drawing: a pipeline separation must
    // respect the outer cycle even when the input omits some of its edges.
    ValidationReport rep = validate_separation(augment_outer_cycle(d), out);
    if (!rep.ok) {
        cert_fail("constructed separation failed validation: " + rep.issues.front());
    }
    return out;
}

ValidationReport validate_separation(const ConvexDrawing& d, const Separation& s) {
    ValidationReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.issues.push_back(std::move(msg));
    };
    const int n = d.n();
    std::vector<Vertex> a = s.a, b = s.b;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    auto check_side = [&](const std::vector<Vertex>& side, const char* name) {
        for (size_t i = 0; i < side.size(); ++i) {
            if (side[i] < 0 || side[i] >= n) {
                fail(std::string(name) + " contains out-of-range vertex " +
                     std::to_string(side[i]));
            }
            if (i > 0 && side[i] == side[i - 1]) {
                fail(std::string(name) + " lists vertex " + std::to_string(side[i]) +
                     " twice");
            }
        }
    };
    check_side(a, "side A");
    check_side(b, "side B");
    if (!rep.ok) return rep;

    // side of v: 1 = A only, 2 = B only, 3 = separator.
    std::vector<int> side(n, 0);
    for (Vertex v : a) side[v] |= 1;
    for (Vertex v : b) side[v] |= 2;
    int order = 0, a_only = 0, b_only = 0;
    for (Vertex v = 0; v < n; ++v) {
        switch (side[v]) {
            case 0: fail("vertex " + std::to_string(v) + " is in neither side"); break;
            case 1: ++a_only; break;
            case 2: ++b_only; break;
            default: ++order; break;
        }
    }
    for (const Edge& e : d.edges()) {
        const int su = side[e.first], sv = side[e.second];
        if ((su == 1 && sv == 2) || (su == 2 && sv == 1)) {
            fail("edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                 "} crosses the separation");
        }
    }
    if (s.order != order) {
        fail("stored order " + std::to_string(s.order) + " differs from |A ∩ B| = " +
             std::to_string(order));
    }
    const double balance =
        n > 0 ? static_cast<double>(std::max(a_only, b_only)) / n : 0.0;
    if (std::abs(s.balance - balance) > 1e-12) {
        fail("stored balance " + std::to_string(s.balance) +
             " differs from computed " + std::to_string(balance));
    }
    return rep;
}

}  // namespace okp
