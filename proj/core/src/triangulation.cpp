#include "okp/triangulation.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>

namespace okp {

std::string split_case_tag(SplitCase c) {
    switch (c) {
        case SplitCase::NoPiercing: return "no-piercing";
        case SplitCase::MiddleEndpoint: return "middle-endpoint";
        case SplitCase::DisjointCrosser: return "disjoint-\xc3\xaa";
        case SplitCase::SharesU: return "shares-u";
        case SplitCase::SharesV: return "shares-v";
        case SplitCase::HeavyFirstCase: return "heavy-first-case";
        case SplitCase::HeavySecondCase: return "heavy-second-case";
    }
    throw InternalCertificateError("unknown split case");
}

int Triangulation::face_pn(int f) const {
    const TriFace& fc = faces.at(f);
    int total = 0;
    for (int id : {fc.parent_link, fc.left_link, fc.right_link}) {
        if (id >= 0) total += links[id].pn();
    }
    return total;
}

std::pair<int, int> piercing_stats(const Triangulation& t) {
    return {t.edge_pn, t.triangle_pn};
}

namespace {

enum class Method { Weak, Strong, O2P, Min };

const char* method_name(Method m) {
    switch (m) {
        case Method::Weak: return "weak";
        case Method::Strong: return "strong";
        case Method::O2P: return "o2p";
        case Method::Min: return "min";
    }
    return "?";
}

[[noreturn]] void cert_fail(const std::string& what) {
    throw InternalCertificateError("certificate violated: " + what);
}

void require_cert(bool ok, const char* what) {
    if (!ok) cert_fail(what);
}

std::string edge_str(const Edge& e) {
    return "{" + std::to_string(e.first) + "," + std::to_string(e.second) + "}";
}

struct PendingLink {
    int a = 0, b = 0;
    int parent_face = -1;
    std::vector<int> piercers;  // edge ids, canonical piercing order
};

class Engine {
  public:
    Engine(const ConvexDrawing& input, int k, Method m, bool checked)
        : d_(augment_outer_cycle(input)), idx_(d_), k_(k), method_(m), checked_(checked) {
        if (k < 0) {
            throw InvalidInputError("crossing budget k must be non-negative, got " +
                                    std::to_string(k));
        }
        precheck();
        build_sorted_adjacency();
        out_.n = d_.n();
        out_.k = k_;
        out_.method = method_name(m);
    }

    Triangulation run();

  private:
    ConvexDrawing d_;
    CrossingIndex idx_;
    int k_;
    Method method_;
    bool checked_;
    Triangulation out_;
    // neighbors of each vertex sorted ascending by ccw distance from it
    std::vector<std::vector<Vertex>> adj_by_dist_;

    int n() const { return d_.n(); }
    int ccw(int a, int b) const { return ccw_dist(n(), a, b); }
    int count(int id) const { return idx_.count(id); }
    bool is_heavy(int id) const { return count(id) > k_; }

    void precheck();
    void build_sorted_adjacency();

    int link_cap() const {
        switch (method_) {
            case Method::Weak:
            case Method::Min: return std::max(0, 2 * k_ - 1);
            case Method::Strong: return k_;
            case Method::O2P: return 2;
        }
        return 0;
    }

    // Neighbor of a strictly inside (a..b) with maximal ccw distance from a.
    Vertex farthest_neighbor_in_arc(int a, int b) const;

    // Role split of an edge relative to the oriented link (a, b): the
    // endpoint strictly inside (a..b) comes first.
    std::pair<Vertex, Vertex> piercer_roles(int a, int b, const Edge& e) const;

    std::vector<int> right_side_crossers(int a, int b, int ej) const;
    int first_crosser_toward_link(int a, int wj, const std::vector<int>& rsc) const;
    int first_crosser_from_u(int a, int wn, int heavy_id) const;
    std::pair<int, int> classify_crosser_sides(int a, int b, int ej, int ehat) const;

    void sort_piercer_ids(int a, int b, std::vector<int>& ids) const;
    std::vector<int> filter_piercers(const std::vector<int>& candidates, int p,
                                     int q) const;
    std::vector<Edge> materialize(const std::vector<int>& ids) const;
    void verify_piercers_brute(int a, int b, const std::vector<int>& ids) const;

    struct SplitChoice {
        Vertex w = -1;
        SplitCase kind = SplitCase::NoPiercing;
        std::vector<int> left, right;  // child piercer ids
    };
    SplitChoice choose_split(const PendingLink& cur);

    void finalize();
};

void Engine::precheck() {
    if (method_ == Method::Min) {
        if (idx_.min_k_ok_for() <= k_) return;
        for (int e = 0; e < static_cast<int>(idx_.edges().size()); ++e) {
            if (count(e) <= k_) continue;
            for (int f : idx_.crossers(e)) {
                if (f > e && count(f) > k_) {
                    throw BoundViolationError(
                        "edges " + edge_str(idx_.edge(e)) + " and " +
                        edge_str(idx_.edge(f)) + " cross each other and are crossed " +
                        std::to_string(count(e)) + " and " + std::to_string(count(f)) +
                        " times; one of any two crossing edges must stay within k = " +
                        std::to_string(k_));
                }
            }
        }
        cert_fail("min-k precheck found no offending pair");
    }
    if (idx_.max_count() <= k_) return;
    for (int e = 0; e < static_cast<int>(idx_.edges().size()); ++e) {
        if (count(e) > k_) {
            throw BoundViolationError(
                "edge " + edge_str(idx_.edge(e)) + " is crossed " +
                std::to_string(count(e)) + " times, exceeding the budget k = " +
                std::to_string(k_));
        }
    }
    cert_fail("crossing precheck found no offending edge");
}

void Engine::build_sorted_adjacency() {
    adj_by_dist_.resize(n());
    for (int v = 0; v < n(); ++v) {
        adj_by_dist_[v] = d_.neighbors(v);
        std::sort(adj_by_dist_[v].begin(), adj_by_dist_[v].end(),
                  [&](Vertex x, Vertex y) { return ccw(v, x) < ccw(v, y); });
    }
}

Vertex Engine::farthest_neighbor_in_arc(int a, int b) const {
    const std::vector<Vertex>& nb = adj_by_dist_[a];
    const int span = ccw(a, b);
    // First neighbor with distance >= span; its predecessor is the answer.
    auto it = std::lower_bound(nb.begin(), nb.end(), span,
                               [&](Vertex x, int s) { return ccw(a, x) < s; });
    require_cert(it != nb.begin(), "unpierced link has no incident edge on its right side");
    return *std::prev(it);
}

std::pair<Vertex, Vertex> Engine::piercer_roles(int a, int b, const Edge& e) const {
    if (in_open_arc(n(), a, b, e.first)) return {e.first, e.second};
    require_cert(in_open_arc(n(), a, b, e.second), "piercer has no endpoint inside the link's right side");
    return {e.second, e.first};
}

std::vector<int> Engine::right_side_crossers(int a, int b, int ej) const {
    const int span = ccw(a, b);
    const int coincident = idx_.edge_id(make_edge(a, b));
    std::vector<int> rsc;
    for (int g : idx_.crossers(ej)) {
        if (g == coincident) continue;
        const Edge& ge = idx_.edge(g);
        if (ccw(a, ge.first) <= span && ccw(a, ge.second) <= span) rsc.push_back(g);
    }
    return rsc;
}

// Among the right-side crossers of e_j, the one whose crossing comes first
// when walking e_j away from the link: no other crosser may reach at least
// as far back on both arcs around w_j. Remaining ambiguity (mutually
// crossing candidates) is resolved toward the lexicographically smallest
// edge.
int Engine::first_crosser_toward_link(int a, int wj, const std::vector<int>& rsc) const {
    const int dwj = ccw(a, wj);
    auto coords = [&](int g) -> std::pair<int, int> {
        const Edge& ge = idx_.edge(g);
        int d1 = ccw(a, ge.first), d2 = ccw(a, ge.second);
        require_cert(d1 != dwj && d2 != dwj, "right-side crosser shares the middle endpoint");
        int ds = d1 < dwj ? d1 : d2;  // side toward the link's first endpoint
        int dt = d1 < dwj ? d2 : d1;
        require_cert(ds < dwj && dt > dwj, "right-side crosser does not straddle the middle endpoint");
        return {dwj - ds, dt - dwj};  // how far each endpoint reaches back
    };
    int best = -1;
    std::pair<int, int> bc{};
    for (int g : rsc) {
        auto c = coords(g);
        bool dominated = false;
        for (int h : rsc) {
            if (h == g) continue;
            auto ch = coords(h);
            if (ch.first >= c.first && ch.second >= c.second) {
                dominated = true;
                break;
            }
        }
        if (dominated) continue;
        if (best == -1 || idx_.edge(g) < idx_.edge(best)) {
            best = g;
            bc = c;
        }
    }
    (void)bc;
    require_cert(best >= 0, "no undominated right-side crosser");
    return best;
}

// Among the crossers of the heavy edge {a, wn}, the one whose crossing is
// closest to a: no other crosser may be at least as close on both arcs.
int Engine::first_crosser_from_u(int a, int wn, int heavy_id) const {
    const std::vector<int>& cands = idx_.crossers(heavy_id);
    auto coords = [&](int g) -> std::pair<int, int> {
        auto [s, t] = piercer_roles(a, wn, idx_.edge(g));
        return {ccw(a, s), ccw(t, a)};
    };
    int best = -1;
    for (int g : cands) {
        auto c = coords(g);
        bool dominated = false;
        for (int h : cands) {
            if (h == g) continue;
            auto ch = coords(h);
            if (ch.first <= c.first && ch.second <= c.second) {
                dominated = true;
                break;
            }
        }
        if (dominated) continue;
        if (best == -1 || idx_.edge(g) < idx_.edge(best)) best = g;
    }
    require_cert(best >= 0, "heavy edge has no undominated crosser");
    return best;
}

// Splits the crossings on the guide crosser ehat = {s, t} (other than its
// crossing with e_j) into those on the s side and those on the t side of
// the e_j crossing. Piercers of the link are placed by their right
// endpoint, matching the drawing in which all left-side vertices are
// pushed together; everything else is forced.
std::pair<int, int> Engine::classify_crosser_sides(int a, int b, int ej, int ehat) const {
    const Edge& eje = idx_.edge(ej);
    auto [wj, xj] = piercer_roles(a, b, eje);
    const Edge& he = idx_.edge(ehat);
    const int dwj = ccw(a, wj);
    int ds = ccw(a, he.first), dt = ccw(a, he.second);
    if (ds > dt) std::swap(ds, dt);
    require_cert(ds < dwj && dwj < dt, "guide crosser does not straddle the middle endpoint");

    int s_side = 0, t_side = 0;
    for (int g : idx_.crossers(ehat)) {
        if (g == ej) continue;
        const Edge& ge = idx_.edge(g);
        if (!crosses(n(), ge, eje)) {
            Vertex p = (ge.first == wj || ge.first == xj) ? ge.second : ge.first;
            if (ge.first != wj && ge.first != xj && ge.second != wj && ge.second != xj) {
                require_cert(in_open_arc(n(), xj, wj, ge.first) ==
                                 in_open_arc(n(), xj, wj, ge.second),
                             "non-crossing edge straddles the middle piercer");
            }
            if (in_open_arc(n(), xj, wj, p)) {
                ++s_side;
            } else {
                ++t_side;
            }
            continue;
        }
        const bool first_in = in_open_arc(n(), a, b, ge.first);
        const bool second_in = in_open_arc(n(), a, b, ge.second);
        if (first_in != second_in && ge.first != a && ge.first != b &&
            ge.second != a && ge.second != b) {
            // Pierces the link: place by the right endpoint.
            const Vertex wg = first_in ? ge.first : ge.second;
            const int dwg = ccw(a, wg);
            require_cert(dwg != dwj, "piercing crosser shares the middle endpoint");
            require_cert(dwg > ds && dwg < dt, "piercing crosser misses the guide crosser's span");
            if (dwg < dwj) {
                ++s_side;
            } else {
                ++t_side;
            }
            continue;
        }
        // Entirely on the link's right side and crossing e_j as well.
        const int d1 = ccw(a, ge.first), d2 = ccw(a, ge.second);
        require_cert(d1 <= ccw(a, b) && d2 <= ccw(a, b),
                     "crosser of the guide edge is neither piercing nor right-side");
        const int near = std::min(d1, d2), far = std::max(d1, d2);
        require_cert(near < dwj && far > dwj, "right-side crosser does not straddle the middle endpoint");
        if (near > ds) {
            require_cert(far > dt, "right-side crosser nested inside the guide crosser");
            ++t_side;
        } else {
            require_cert(far < dt, "right-side crosser envelops the guide crosser");
            ++s_side;
        }
    }
    return {s_side, t_side};
}

void Engine::sort_piercer_ids(int a, int b, std::vector<int>& ids) const {
    std::sort(ids.begin(), ids.end(), [&](int x, int y) {
        auto [wx, lx] = piercer_roles(a, b, idx_.edge(x));
        auto [wy, ly] = piercer_roles(a, b, idx_.edge(y));
        if (ccw(a, wx) != ccw(a, wy)) return ccw(a, wx) < ccw(a, wy);
        // Same right endpoint: such piercers cannot cross each other, so the
        // one whose left endpoint is closer to a crosses the link first.
        return ccw(a, lx) > ccw(a, ly);
    });
}

std::vector<int> Engine::filter_piercers(const std::vector<int>& candidates, int p,
                                         int q) const {
    const Edge chord{p, q};
    std::vector<int> out;
    for (int id : candidates) {
        if (crosses(n(), chord, idx_.edge(id))) out.push_back(id);
    }
    sort_piercer_ids(p, q, out);
    return out;
}

std::vector<Edge> Engine::materialize(const std::vector<int>& ids) const {
    std::vector<Edge> out;
    out.reserve(ids.size());
    for (int id : ids) out.push_back(idx_.edge(id));
    return out;
}

void Engine::verify_piercers_brute(int a, int b, const std::vector<int>& ids) const {
    std::vector<Edge> expect = piercing_edges(d_, Link{a, b});
    std::vector<Edge> got = materialize(ids);
    if (expect != got) {
        cert_fail("piercer list of link (" + std::to_string(a) + "," +
                  std::to_string(b) + ") disagrees with a brute recomputation");
    }
}

Engine::SplitChoice Engine::choose_split(const PendingLink& cur) {
    const int a = cur.a, b = cur.b;
    const int l = static_cast<int>(cur.piercers.size());
    SplitChoice res;

    auto finish = [&](std::vector<int> candidates) {
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()),
                         candidates.end());
        res.left = filter_piercers(candidates, a, res.w);
        res.right = filter_piercers(candidates, res.w, b);
    };

    if (l == 0) {
        const Vertex wn = farthest_neighbor_in_arc(a, b);
        const int eid = idx_.edge_id(make_edge(a, wn));
        require_cert(eid >= 0, "neighbor edge missing from the index");
        if (method_ == Method::Min && is_heavy(eid)) {
            res.kind = SplitCase::HeavyFirstCase;
            const int ehat = first_crosser_from_u(a, wn, eid);
            require_cert(!is_heavy(ehat), "first crosser of a heavy edge is heavy");
            auto [s, t] = piercer_roles(a, wn, idx_.edge(ehat));
            require_cert(ccw(a, t) <= ccw(a, b),
                         "crosser of the heavy neighbor edge leaves the link's right side");
            res.w = s;
            finish(idx_.crossers(ehat));
            require_cert(static_cast<int>(res.left.size()) <= count(ehat) &&
                             static_cast<int>(res.right.size()) <= count(ehat) &&
                             count(ehat) <= k_,
                         "heavy-redirect children exceed the crosser's budget");
        } else {
            res.kind = SplitCase::NoPiercing;
            res.w = wn;
            finish(idx_.crossers(eid));
            require_cert(static_cast<int>(res.left.size()) <= count(eid) &&
                             static_cast<int>(res.right.size()) <= count(eid),
                         "children of an unpierced link exceed the neighbor edge's crossings");
        }
        return res;
    }

    const int j = l / 2 + 1;  // 1-indexed middle piercer
    const int ej = cur.piercers[j - 1];
    auto [wj, xj] = piercer_roles(a, b, idx_.edge(ej));
    (void)xj;
    std::vector<int> rsc = right_side_crossers(a, b, ej);
    const int r = static_cast<int>(rsc.size());

    auto candidates_base = [&]() {
        std::vector<int> c = cur.piercers;
        c.insert(c.end(), rsc.begin(), rsc.end());
        return c;
    };

    const bool weak_like =
        method_ == Method::Weak || (method_ == Method::Min && !is_heavy(ej));
    if (weak_like) {
        res.kind = SplitCase::MiddleEndpoint;
        res.w = wj;
        finish(candidates_base());
        require_cert(static_cast<int>(res.left.size()) <= j - 1 + r &&
                         static_cast<int>(res.right.size()) <= l - j + r,
                     "children of a middle-endpoint split exceed their shares");
        return res;
    }

    if (method_ == Method::Min) {
        // Heavy middle piercer.
        if (r == 0) {
            res.kind = SplitCase::MiddleEndpoint;
            res.w = wj;
            finish(cur.piercers);
            require_cert(static_cast<int>(res.left.size()) <= j - 1 &&
                             static_cast<int>(res.right.size()) <= l - j,
                         "children of a crossing-free middle split exceed the piercer shares");
            return res;
        }
        res.kind = SplitCase::HeavySecondCase;
        const int ehat = first_crosser_toward_link(a, wj, rsc);
        require_cert(!is_heavy(ehat), "first right-side crosser of a heavy edge is heavy");
        const Edge& he = idx_.edge(ehat);
        const bool first_free = he.first != a && he.first != b;
        const bool second_free = he.second != a && he.second != b;
        if (first_free && second_free) {
            auto [s_cnt, t_cnt] = classify_crosser_sides(a, b, ej, ehat);
            require_cert(s_cnt + t_cnt == count(ehat) - 1,
                         "side classification does not cover the guide crosser's crossings");
            int ds = ccw(a, he.first), dt = ccw(a, he.second);
            Vertex s = he.first, t = he.second;
            if (ds > dt) {
                std::swap(s, t);
            }
            res.w = s_cnt <= t_cnt ? s : t;
        } else {
            require_cert(first_free || second_free,
                         "guide crosser coincides with the link");
            res.w = first_free ? he.first : he.second;
        }
        std::vector<int> c = candidates_base();
        const auto& hc = idx_.crossers(ehat);
        c.insert(c.end(), hc.begin(), hc.end());
        finish(std::move(c));
        require_cert(static_cast<int>(res.left.size()) <= 2 * k_ - 1 &&
                         static_cast<int>(res.right.size()) <= 2 * k_ - 1,
                     "heavy-redirect children exceed the weak budget");
        return res;
    }

    // Strong and its k = 2 specialization.
    if (r == 0) {
        res.kind = SplitCase::MiddleEndpoint;
        res.w = wj;
        finish(cur.piercers);
        require_cert(static_cast<int>(res.left.size()) <= j - 1 &&
                         static_cast<int>(res.right.size()) <= l - j,
                     "children of a crossing-free middle split exceed the piercer shares");
        return res;
    }
    if (method_ == Method::O2P) {
        require_cert(r == 1, "middle piercer of a doubly-crossed drawing has two crossers beyond the link");
    }
    const int ehat = first_crosser_toward_link(a, wj, rsc);
    const Edge& he = idx_.edge(ehat);
    const int cnt_ehat = count(ehat);
    std::vector<int> c = candidates_base();
    const auto& hc = idx_.crossers(ehat);
    c.insert(c.end(), hc.begin(), hc.end());

    if (he.first == a || he.second == a) {
        res.kind = SplitCase::SharesU;
        res.w = he.first == a ? he.second : he.first;
        require_cert(ccw(a, res.w) > ccw(a, wj) && ccw(a, res.w) < ccw(a, b),
                     "shared-endpoint crosser leaves the expected arc");
        finish(std::move(c));
        require_cert(static_cast<int>(res.left.size()) == cnt_ehat && cnt_ehat <= k_,
                     "link along the guide crosser is not pierced by exactly its crossers");
        require_cert(static_cast<int>(res.right.size()) <=
                         (l - j) + std::max(0, cnt_ehat - j),
                     "far child of a shared-endpoint split exceeds its share");
        if (method_ == Method::O2P) {
            require_cert(static_cast<int>(res.right.size()) <= std::max(0, cnt_ehat - l),
                         "far child exceeds the guide crosser's spare crossings");
        }
        return res;
    }
    if (he.first == b || he.second == b) {
        res.kind = SplitCase::SharesV;
        const Vertex z = he.first == b ? he.second : he.first;
        require_cert(ccw(a, z) > 0 && ccw(a, z) < ccw(a, wj),
                     "shared-endpoint crosser leaves the expected arc");
        if (method_ == Method::O2P) {
            res.w = wj;
            finish(std::move(c));
            require_cert(res.right.empty(),
                         "right child of a shared-endpoint split is pierced");
            require_cert(static_cast<int>(res.left.size()) <= 2,
                         "left child of a shared-endpoint split exceeds two piercers");
        } else {
            res.w = z;
            finish(std::move(c));
            require_cert(static_cast<int>(res.right.size()) == cnt_ehat && cnt_ehat <= k_,
                         "link along the guide crosser is not pierced by exactly its crossers");
            require_cert(static_cast<int>(res.left.size()) <=
                             (j - 1) + std::max(0, cnt_ehat - (l - j + 1)),
                         "near child of a shared-endpoint split exceeds its share");
        }
        return res;
    }

    res.kind = SplitCase::DisjointCrosser;
    auto [s_cnt, t_cnt] = classify_crosser_sides(a, b, ej, ehat);
    require_cert(s_cnt + t_cnt == cnt_ehat - 1,
                 "side classification does not cover the guide crosser's crossings");
    require_cert(cnt_ehat <= k_, "guide crosser exceeds the edge budget");
    require_cert(2 * std::min(s_cnt, t_cnt) <= k_ - 1,
                 "both sides of the guide crossing carry more than half the budget");
    int ds = ccw(a, he.first), dt = ccw(a, he.second);
    Vertex s = he.first, t = he.second;
    if (ds > dt) std::swap(s, t);
    res.w = s_cnt <= t_cnt ? s : t;
    finish(std::move(c));
    const bool took_s = res.w == s;
    const int near_pn = static_cast<int>((took_s ? res.right : res.left).size());
    const int far_pn = static_cast<int>((took_s ? res.left : res.right).size());
    require_cert(far_pn <= k_ - 1, "far child of a disjoint split reaches the full budget");
    require_cert(near_pn <= k_, "near child of a disjoint split exceeds the budget");
    if (method_ == Method::O2P) {
        require_cert(std::min(s_cnt, t_cnt) == 0,
                     "a side of the guide crossing is non-empty despite the two-crossing budget");
        require_cert(near_pn <= 2, "near child of a disjoint split exceeds two piercers");
        if (took_s) {
            require_cert(far_pn <= 1, "far child of a disjoint split exceeds one piercer");
        } else {
            require_cert(far_pn == 0, "far child pierced despite an empty guide side");
        }
    }
    return res;
}

Triangulation Engine::run() {
    const int N = n();
    std::vector<PendingLink> stack;
    stack.push_back(PendingLink{0, N - 1, -1, {}});

    while (!stack.empty()) {
        PendingLink cur = std::move(stack.back());
        stack.pop_back();
        const int span = ccw(cur.a, cur.b);
        if (span == 1) {
            require_cert(cur.piercers.empty(), "outer edge reported as pierced");
            continue;
        }
        const bool is_root = cur.parent_face < 0;
        require_cert(static_cast<int>(cur.piercers.size()) <= link_cap(),
                     "active link pierced beyond the method's budget");
        int link_id = -1;
        if (!is_root) {
            link_id = static_cast<int>(out_.links.size());
            InnerLink rec;
            rec.oriented = Link{cur.a, cur.b};
            rec.upper_face = cur.parent_face;
            rec.piercers = materialize(cur.piercers);
            out_.links.push_back(std::move(rec));
            TriFace& pf = out_.faces[cur.parent_face];
            if (cur.a == pf.tri[0] && cur.b == pf.tri[1]) {
                pf.left_link = link_id;
            } else {
                require_cert(cur.a == pf.tri[1] && cur.b == pf.tri[2],
                             "child link does not bound its parent face");
                pf.right_link = link_id;
            }
            if (checked_) verify_piercers_brute(cur.a, cur.b, cur.piercers);
        }

        SplitChoice s = choose_split(cur);
        require_cert(in_open_arc(N, cur.a, cur.b, s.w), "split vertex outside the active link");

        const int face_id = static_cast<int>(out_.faces.size());
        TriFace face;
        face.tri = {cur.a, s.w, cur.b};
        face.parent_face = cur.parent_face;
        face.parent_link = link_id;
        out_.faces.push_back(face);
        if (link_id >= 0) out_.links[link_id].lower_face = face_id;
        if (cur.parent_face >= 0) {
            TriFace& pf = out_.faces[cur.parent_face];
            if (pf.left_link == link_id) {
                pf.left_child = face_id;
            } else {
                pf.right_child = face_id;
            }
        }

        SplitRecord rec;
        rec.active = Link{cur.a, cur.b};
        rec.kind = s.kind;
        rec.split_vertex = s.w;
        rec.new_links = {Link{cur.a, s.w}, Link{s.w, cur.b}};
        rec.new_pn = {static_cast<int>(s.left.size()), static_cast<int>(s.right.size())};
        out_.trace.push_back(std::move(rec));

        stack.push_back(PendingLink{s.w, cur.b, face_id, std::move(s.right)});
        stack.push_back(PendingLink{cur.a, s.w, face_id, std::move(s.left)});
    }

    finalize();
    return std::move(out_);
}

void Engine::finalize() {
    const int N = n();
    require_cert(static_cast<int>(out_.links.size()) == N - 3,
                 "triangulation does not have n-3 inner links");
    require_cert(static_cast<int>(out_.faces.size()) == N - 2,
                 "triangulation does not have n-2 faces");
    out_.edge_pn = 0;
    for (const InnerLink& l : out_.links) out_.edge_pn = std::max(out_.edge_pn, l.pn());
    out_.triangle_pn = 0;
    for (int f = 0; f < static_cast<int>(out_.faces.size()); ++f) {
        out_.triangle_pn = std::max(out_.triangle_pn, out_.face_pn(f));
    }

    int edge_cap = link_cap(), tri_cap = 0;
    switch (method_) {
        case Method::Weak:
        case Method::Min: tri_cap = std::max(0, 6 * k_ - 3); break;
        case Method::Strong: tri_cap = k_ % 2 == 1 ? 3 * k_ - 1 : 3 * k_; break;
        case Method::O2P: tri_cap = 4; break;
    }
    require_cert(out_.edge_pn <= edge_cap, "max link piercing exceeds the method's bound");
    require_cert(out_.triangle_pn <= tri_cap, "max triangle piercing exceeds the method's bound");
}

}  // namespace

Triangulation triangulate_weak(const ConvexDrawing& d, int k, bool checked) {
    return Engine(d, k, Method::Weak, checked).run();
}

Triangulation triangulate_strong(const ConvexDrawing& d, int k, bool checked) {
    return Engine(d, k, Method::Strong, checked).run();
}

Triangulation triangulate_o2p(const ConvexDrawing& d, bool checked) {
    return Engine(d, 2, Method::O2P, checked).run();
}

Triangulation triangulate_min(const ConvexDrawing& d, int k, bool checked) {
    return Engine(d, k, Method::Min, checked).run();
}

Triangulation triangulation_from_links(const ConvexDrawing& d,
                                       const std::vector<Edge>& inner_links) {
    const ConvexDrawing aug = augment_outer_cycle(d);
    const int n = aug.n();
    if (static_cast<int>(inner_links.size()) != n - 3) {
        throw InvalidInputError("a triangulation of " + std::to_string(n) +
                                " vertices needs exactly " + std::to_string(n - 3) +
                                " inner links, got " +
                                std::to_string(inner_links.size()));
    }
    std::unordered_set<std::uint64_t> seen;
    for (const Edge& e : inner_links) {
        Edge ne = make_edge(e.first, e.second);
        if (ne.first < 0 || ne.second >= n) {
            throw InvalidInputError("inner link " + edge_str(ne) + " out of range");
        }
        if (ccw_dist(n, ne.first, ne.second) < 2 || ccw_dist(n, ne.second, ne.first) < 2) {
            throw InvalidInputError("inner link " + edge_str(ne) + " is an outer edge");
        }
        if (!seen.insert((static_cast<std::uint64_t>(ne.first) << 32) |
                         static_cast<std::uint32_t>(ne.second))
                 .second) {
            throw InvalidInputError("duplicate inner link " + edge_str(ne));
        }
    }
    for (size_t i = 0; i < inner_links.size(); ++i) {
        for (size_t j = i + 1; j < inner_links.size(); ++j) {
            if (crosses(n, inner_links[i], inner_links[j])) {
                throw InvalidInputError("inner links " + edge_str(inner_links[i]) +
                                        " and " + edge_str(inner_links[j]) + " cross");
            }
        }
    }

    // Adjacency over links plus the outer cycle, sorted by ccw distance.
    std::vector<std::vector<Vertex>> la(n);
    for (int v = 0; v < n; ++v) {
        la[v].push_back((v + 1) % n);
        la[v].push_back((v + n - 1) % n);
    }
    for (const Edge& e : inner_links) {
        Edge ne = make_edge(e.first, e.second);
        la[ne.first].push_back(ne.second);
        la[ne.second].push_back(ne.first);
    }
    std::unordered_set<std::uint64_t> link_set = seen;
    auto has_link = [&](int x, int y) {
        if (ccw_dist(n, x, y) == 1 || ccw_dist(n, y, x) == 1) return true;
        Edge ne = make_edge(x, y);
        return link_set.count((static_cast<std::uint64_t>(ne.first) << 32) |
                              static_cast<std::uint32_t>(ne.second)) > 0;
    };
    for (int v = 0; v < n; ++v) {
        std::sort(la[v].begin(), la[v].end(),
                  [&](Vertex x, Vertex y) { return ccw_dist(n, v, x) < ccw_dist(n, v, y); });
    }

    Triangulation out;
    out.n = n;
    out.method = "from-links";
    struct Item {
        int a, b, parent_face;
    };
    std::vector<Item> stack{{0, n - 1, -1}};
    while (!stack.empty()) {
        Item cur = stack.back();
        stack.pop_back();
        if (ccw_dist(n, cur.a, cur.b) == 1) continue;
        const bool is_root = cur.parent_face < 0;
        int link_id = -1;
        if (!is_root) {
            link_id = static_cast<int>(out.links.size());
            InnerLink rec;
            rec.oriented = Link{cur.a, cur.b};
            rec.upper_face = cur.parent_face;
            rec.piercers = piercing_edges(aug, rec.oriented);
            out.links.push_back(std::move(rec));
            TriFace& pf = out.faces[cur.parent_face];
            if (cur.a == pf.tri[0] && cur.b == pf.tri[1]) {
                pf.left_link = link_id;
            } else {
                pf.right_link = link_id;
            }
        }
        const int span = ccw_dist(n, cur.a, cur.b);
        auto it = std::lower_bound(
            la[cur.a].begin(), la[cur.a].end(), span,
            [&](Vertex x, int s) { return ccw_dist(n, cur.a, x) < s; });
        if (it == la[cur.a].begin()) {
            throw InvalidInputError("links do not triangulate the polygon");
        }
        const Vertex w = *std::prev(it);
        if (!has_link(w, cur.b)) {
            throw InvalidInputError("links do not triangulate the polygon: face at (" +
                                    std::to_string(cur.a) + "," + std::to_string(cur.b) +
                                    ") has no closing side");
        }
        const int face_id = static_cast<int>(out.faces.size());
        TriFace face;
        face.tri = {cur.a, w, cur.b};
        face.parent_face = cur.parent_face;
        face.parent_link = link_id;
        out.faces.push_back(face);
        if (link_id >= 0) out.links[link_id].lower_face = face_id;
        if (cur.parent_face >= 0) {
            TriFace& pf = out.faces[cur.parent_face];
            if (pf.left_link == link_id) {
                pf.left_child = face_id;
            } else {
                pf.right_child = face_id;
            }
        }
        stack.push_back({w, cur.b, face_id});
        stack.push_back({cur.a, w, face_id});
    }
    if (static_cast<int>(out.faces.size()) != n - 2) {
        throw InvalidInputError("links do not triangulate the polygon");
    }
    for (const InnerLink& l : out.links) out.edge_pn = std::max(out.edge_pn, l.pn());
    for (int f = 0; f < static_cast<int>(out.faces.size()); ++f) {
        out.triangle_pn = std::max(out.triangle_pn, out.face_pn(f));
    }
    out.k = out.edge_pn;
    return out;
}

}  // namespace okp
