#pragma once

#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "okp/errors.hpp"

namespace okp {

using Vertex = int;

// Unordered edge, normalized so that first < second.
using Edge = std::pair<Vertex, Vertex>;

// Oriented chord (u, v): its "right side" is the open ccw arc (u..v).
using Link = std::pair<Vertex, Vertex>;

// Normalizes and validates an unordered vertex pair. Throws on loops.
Edge make_edge(Vertex a, Vertex b);

// Distance from a to b walking counterclockwise, in [0, n).
inline int ccw_dist(int n, int a, int b) {
    int d = (b - a) % n;
    return d < 0 ? d + n : d;
}

// True iff x lies strictly inside the ccw arc from a to b.
inline bool in_open_arc(int n, int a, int b, int x) {
    int span = ccw_dist(n, a, b);
    int d = ccw_dist(n, a, x);
    return d > 0 && d < span;
}

// True iff the chords {a,b} and {c,d} cross, i.e. exactly one of c, d lies
// strictly inside the ccw arc from a to b. All four vertices must be distinct
// and in [0, n); throws InvalidInputError otherwise.
bool intertwined(int n, Vertex a, Vertex b, Vertex c, Vertex d);

// Non-throwing crossing test: false whenever the chords share an endpoint.
inline bool crosses(int n, const Edge& e, const Edge& f) {
    if (e.first == f.first || e.first == f.second || e.second == f.first ||
        e.second == f.second) {
        return false;
    }
    return in_open_arc(n, e.first, e.second, f.first) !=
           in_open_arc(n, e.first, e.second, f.second);
}

// A graph drawn with its vertices at positions 0..n-1 in counterclockwise
// convex position; every edge is the straight chord between its endpoints.
class ConvexDrawing {
  public:
    explicit ConvexDrawing(int n);

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int m() const { return static_cast<int>(edges_.size()); }

    // Throws InvalidInputError on loops, duplicates, or out-of-range indices.
    void add_edge(Vertex a, Vertex b);

    bool has_edge(Vertex a, Vertex b) const;
    const std::vector<Vertex>& neighbors(Vertex v) const;

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::unordered_set<std::uint64_t> keys_;
};

// Returns a copy of d with every missing outer-cycle edge {i, i+1 mod n}
// added. Requires n >= 3. Outer edges never cross anything, so all crossing
// counts are preserved.
ConvexDrawing augment_outer_cycle(const ConvexDrawing& d);

// Per-edge crossing counts, aligned with d.edges().
struct CrossingProfile {
    std::vector<int> per_edge;
    int max_count = 0;     // smallest k such that d is outer k-planar
    int min_k_ok_for = 0;  // smallest k such that d is outer min-k-planar
};

// Full pairwise crossing structure, built with an interval sweep in
// O(m log m + X) where X is the number of crossing pairs.
class CrossingIndex {
  public:
    explicit CrossingIndex(const ConvexDrawing& d);

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }

    // Ids of the edges crossing edge id, sorted ascending.
    const std::vector<int>& crossers(int id) const { return crossers_[id]; }
    int count(int id) const { return static_cast<int>(crossers_[id].size()); }
    int max_count() const { return max_count_; }
    int min_k_ok_for() const { return min_k_ok_for_; }

    // Index of an edge in edges(), or -1 if the edge is absent.
    int edge_id(const Edge& e) const;
    const Edge& edge(int id) const { return edges_[id]; }

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> crossers_;
    std::unordered_map<std::uint64_t, int> id_of_;
    int max_count_ = 0;
    int min_k_ok_for_ = 0;
};

CrossingProfile crossing_profile(const ConvexDrawing& d);

// All edges of d that pierce the link l = (u, v): edges {w, x} with
// w strictly inside the ccw arc (u..v) and x strictly inside (v..u).
// Ordered by ccw distance of w from u; ties (shared w) by descending ccw
// distance of x from u, which is the order the piercers cross the chord
// (u, v) in every straight-line realization of the cyclic order.
std::vector<Edge> piercing_edges(const ConvexDrawing& d, const Link& l);

// Sorts a list of edges that all pierce l into the order described above.
void sort_piercers(int n, const Link& l, std::vector<Edge>& piercers);

}  // namespace okp
