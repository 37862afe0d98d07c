#pragma once

#include <array>
#include <string>
#include <vector>

#include "okp/drawing.hpp"

namespace okp {

// How an active link was split into a triangle and two child links.
enum class SplitCase {
    NoPiercing,       // link unpierced: split at the farthest incident neighbor
    MiddleEndpoint,   // split at the right endpoint of the middle piercer
    DisjointCrosser,  // split at an endpoint of the guide crosser (no shared ends)
    SharesU,          // guide crosser shares the link's first endpoint
    SharesV,          // guide crosser shares the link's second endpoint
    HeavyFirstCase,   // unpierced link, heavy neighbor edge: redirected split
    HeavySecondCase,  // pierced link, heavy middle piercer: redirected split
};

// Stable string tag used in trace output.
std::string split_case_tag(SplitCase c);

// One step of the triangulation: the active link (u, v) was split at w,
// producing the face {u, w, v} and the child links (u, w) and (w, v).
struct SplitRecord {
    Link active;
    SplitCase kind = SplitCase::NoPiercing;
    Vertex split_vertex = -1;
    std::array<Link, 2> new_links{};
    std::array<int, 2> new_pn{};  // piercing numbers of the two child links
};

// A chord of the polygon used as a triangle side. Its right side, the open
// ccw arc (oriented.first .. oriented.second), is the region it was split
// over. upper_face is the face that has this link as a side from above;
// lower_face is the face created by splitting it.
struct InnerLink {
    Link oriented;
    int upper_face = -1;
    int lower_face = -1;
    std::vector<Edge> piercers;  // canonical piercing order
    int pn() const { return static_cast<int>(piercers.size()); }
};

// A triangle face. Sides: the parent link (tri[0], tri[2]) above, and the
// child links (tri[0], tri[1]) and (tri[1], tri[2]) below. Side ids are
// indices into Triangulation::links, or -1 for outer edges / the root side.
struct TriFace {
    std::array<Vertex, 3> tri{};  // (u, w, v) in split orientation
    int parent_face = -1;
    int parent_link = -1;
    int left_link = -1, right_link = -1;
    int left_child = -1, right_child = -1;
};

// A triangulation of the convex polygon on n vertices by n-3 pairwise
// non-crossing chords (the inner links), together with, for every inner
// link, the graph edges piercing it.
struct Triangulation {
    int n = 0;
    int k = 0;
    std::string method;  // "weak", "strong", "o2p", or "min"
    std::vector<InnerLink> links;
    std::vector<TriFace> faces;
    std::vector<SplitRecord> trace;
    int edge_pn = 0;      // max piercing number over inner links
    int triangle_pn = 0;  // max over faces of the sum of its sides' numbers

    // Sum of piercing numbers of the three sides of face f (outer sides
    // and the root side count zero).
    int face_pn(int f) const;
};

// (edge_pn, triangle_pn).
std::pair<int, int> piercing_stats(const Triangulation& t);

// Triangulation procedures. Each augments the outer cycle, validates the
// crossing budget (BoundViolationError names an offender on failure), and
// guarantees via internal certificates (InternalCertificateError on any
// breach, which would be a library bug):
//   weak:   requires every edge crossed <= k; every link pierced <= 2k-1.
//   strong: requires every edge crossed <= k; every link pierced <= k.
//   o2p:    k = 2 specialization of strong; links pierced <= 2, every
//           triangle's sides pierced <= 4 in total.
//   min:    requires that of any two crossing edges one is crossed <= k
//           times; every link pierced <= 2k-1, triangles <= 6k-3.
// `checked` re-derives every piercer list by a brute scan and compares.
Triangulation triangulate_weak(const ConvexDrawing& d, int k, bool checked = false);
Triangulation triangulate_strong(const ConvexDrawing& d, int k, bool checked = false);
Triangulation triangulate_o2p(const ConvexDrawing& d, bool checked = false);
Triangulation triangulate_min(const ConvexDrawing& d, int k, bool checked = false);

// Rebuilds the face/dual structure from a given set of inner links (the
// piercer lists are recomputed by brute scans). Intended for tests and
// hand-built fixtures. Throws InvalidInputError if the links do not form a
// valid triangulation of the polygon.
Triangulation triangulation_from_links(const ConvexDrawing& d,
                                       const std::vector<Edge>& inner_links);

}  // namespace okp
