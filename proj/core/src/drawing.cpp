#include "okp/drawing.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace okp {

namespace {

std::uint64_t edge_key(const Edge& e) {
    return (static_cast<std::uint64_t>(e.first) << 32) |
           static_cast<std::uint32_t>(e.second);
}

}  // namespace

Edge make_edge(Vertex a, Vertex b) {
    if (a == b) {
        throw InvalidInputError("edge endpoints must differ, got loop at vertex " +
                                std::to_string(a));
    }
    return a < b ? Edge{a, b} : Edge{b, a};
}

bool intertwined(int n, Vertex a, Vertex b, Vertex c, Vertex d) {
    for (Vertex v : {a, b, c, d}) {
        if (v < 0 || v >= n) {
            throw InvalidInputError("vertex " + std::to_string(v) +
                                    " out of range [0, " + std::to_string(n) + ")");
        }
    }
    if (a == b || a == c || a == d || b == c || b == d || c == d) {
        throw InvalidInputError("intertwined requires four distinct vertices");
    }
    return in_open_arc(n, a, b, c) != in_open_arc(n, a, b, d);
}

ConvexDrawing::ConvexDrawing(int n) : n_(n), adj_(n >= 0 ? n : 0) {
    if (n < 1) {
        throw InvalidInputError("drawing needs at least one vertex, got n = " +
                                std::to_string(n));
    }
}

void ConvexDrawing::add_edge(Vertex a, Vertex b) {
    if (a < 0 || a >= n_ || b < 0 || b >= n_) {
        throw InvalidInputError("edge {" + std::to_string(a) + "," +
                                std::to_string(b) + "} out of range [0, " +
                                std::to_string(n_) + ")");
    }
    Edge e = make_edge(a, b);
    if (!keys_.insert(edge_key(e)).second) {
        throw InvalidInputError("duplicate edge {" + std::to_string(e.first) + "," +
                                std::to_string(e.second) + "}");
    }
    edges_.push_back(e);
    adj_[e.first].push_back(e.second);
    adj_[e.second].push_back(e.first);
}

bool ConvexDrawing::has_edge(Vertex a, Vertex b) const {
    if (a == b || a < 0 || a >= n_ || b < 0 || b >= n_) return false;
    return keys_.count(edge_key(make_edge(a, b))) > 0;
}

const std::vector<Vertex>& ConvexDrawing::neighbors(Vertex v) const {
    if (v < 0 || v >= n_) {
        throw InvalidInputError("vertex " + std::to_string(v) + " out of range");
    }
    return adj_[v];
}

ConvexDrawing augment_outer_cycle(const ConvexDrawing& d) {
    if (d.n() < 3) {
        throw InvalidInputError("outer-cycle augmentation needs n >= 3, got n = " +
                                std::to_string(d.n()));
    }
    ConvexDrawing out = d;
    for (int i = 0; i < d.n(); ++i) {
        int j = (i + 1) % d.n();
        if (!out.has_edge(i, j)) out.add_edge(i, j);
    }
    return out;
}

CrossingIndex::CrossingIndex(const ConvexDrawing& d)
    : n_(d.n()), edges_(d.edges()), crossers_(edges_.size()) {
    const int m = static_cast<int>(edges_.size());
    id_of_.reserve(static_cast<std::size_t>(m) * 2);
    for (int i = 0; i < m; ++i) id_of_.emplace(edge_key(edges_[i]), i);

    // Two chords {a,b}, {c,d} with a<b, c<d cross iff a<c<b<d or c<a<d<b:
    // a strict interleaving of intervals on the line 0..n-1. Sweep edges by
    // left endpoint; keep an active set ordered by right endpoint; for each
    // new edge J report every active I with l_J < r_I < r_J.
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return edges_[x] < edges_[y];
    });

    std::set<std::pair<int, int>> active;  // (right endpoint, id)
    std::size_t i = 0;
    while (i < order.size()) {
        const int l = edges_[order[i]].first;
        // Chords fully to the left can no longer interleave with anything.
        while (!active.empty() && active.begin()->first <= l) {
            active.erase(active.begin());
        }
        std::size_t group_end = i;
        while (group_end < order.size() && edges_[order[group_end]].first == l) {
            ++group_end;
        }
        for (std::size_t g = i; g < group_end; ++g) {
            const int j = order[g];
            const int r = edges_[j].second;
            for (auto it = active.upper_bound({l, m}); it != active.end(); ++it) {
                if (it->first >= r) break;
                crossers_[j].push_back(it->second);
                crossers_[it->second].push_back(j);
            }
        }
        // Same-left chords share an endpoint and never cross each other, so
        // they are inserted only after the whole group has been queried.
        for (std::size_t g = i; g < group_end; ++g) {
            active.insert({edges_[order[g]].second, order[g]});
        }
        i = group_end;
    }

    for (int e = 0; e < m; ++e) {
        std::sort(crossers_[e].begin(), crossers_[e].end());
        max_count_ = std::max(max_count_, static_cast<int>(crossers_[e].size()));
    }
    for (int e = 0; e < m; ++e) {
        for (int f : crossers_[e]) {
            if (f <= e) continue;
            min_k_ok_for_ = std::max(
                min_k_ok_for_,
                std::min(static_cast<int>(crossers_[e].size()),
                         static_cast<int>(crossers_[f].size())));
        }
    }
}

int CrossingIndex::edge_id(const Edge& e) const {
    auto it = id_of_.find(edge_key(e));
    return it == id_of_.end() ? -1 : it->second;
}

CrossingProfile crossing_profile(const ConvexDrawing& d) {
    CrossingIndex idx(d);
    CrossingProfile p;
    p.per_edge.resize(d.m());
    for (int i = 0; i < d.m(); ++i) p.per_edge[i] = idx.count(i);
    p.max_count = idx.max_count();
    p.min_k_ok_for = idx.min_k_ok_for();
    return p;
}

void sort_piercers(int n, const Link& l, std::vector<Edge>& piercers) {
    const int u = l.first;
    std::sort(piercers.begin(), piercers.end(), [&](const Edge& x, const Edge& y) {
        const bool xin = in_open_arc(n, l.first, l.second, x.first);
        const bool yin = in_open_arc(n, l.first, l.second, y.first);
        const int xw = xin ? x.first : x.second;
        const int xl = xin ? x.second : x.first;
        const int yw = yin ? y.first : y.second;
        const int yl = yin ? y.second : y.first;
        const int dxw = ccw_dist(n, u, xw);
        const int dyw = ccw_dist(n, u, yw);
        if (dxw != dyw) return dxw < dyw;
        // Piercers sharing a right endpoint never cross each other, so their
        // crossing order along the link is forced: the one whose left endpoint
        // is closer to u (counterclockwise) crosses closer to u.
        return ccw_dist(n, u, xl) > ccw_dist(n, u, yl);
    });
}

std::vector<Edge> piercing_edges(const ConvexDrawing& d, const Link& l) {
    const int n = d.n();
    if (l.first < 0 || l.first >= n || l.second < 0 || l.second >= n ||
        l.first == l.second) {
        throw InvalidInputError("link endpoints must be distinct vertices in range");
    }
    std::vector<Edge> out;
    for (const Edge& e : d.edges()) {
        if (crosses(n, Edge{l.first, l.second}, e)) out.push_back(e);
    }
    sort_piercers(n, l, out);
    return out;
}

}  // namespace okp
