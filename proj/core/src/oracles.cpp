#include "okp/oracles.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <string>
#include <vector>

#include "okp/errors.hpp"
#include "okp/separation.hpp"

namespace okp {

namespace {

void check_cap(const char* what, int n, int cap) {
    if (n > cap) {
        throw OracleCapError(std::string(what) + " oracle is capped at " +
                             std::to_string(cap) + " vertices, got " +
                             std::to_string(n));
    }
    if (cap > 25) {
        throw InvalidInputError("oracle cap beyond 25 vertices is not supported");
    }
}

[[noreturn]] void cert_fail(const std::string& what) {
    throw InternalCertificateError("certificate violated: " + what);
}

std::vector<std::uint32_t> adjacency_masks(const ConvexDrawing& d) {
    std::vector<std::uint32_t> mask(d.n(), 0);
    for (const Edge& e : d.edges()) {
        mask[e.first] |= std::uint32_t{1} << e.second;
        mask[e.second] |= std::uint32_t{1} << e.first;
    }
    return mask;
}

}  // namespace

OracleResult brute_treewidth(const ConvexDrawing& d, int cap) {
    const int n = d.n();
    check_cap("treewidth", n, cap);
    const std::vector<std::uint32_t> mask = adjacency_masks(d);
    const std::uint32_t full = n == 32 ? ~0u : (std::uint32_t{1} << n) - 1;

    // q(T, v): neighbors of v outside T∪{v} reachable through T∪{v}.
    const auto q_value = [&](std::uint32_t t, int v) {
        const std::uint32_t allowed = t | (std::uint32_t{1} << v);
        std::uint32_t reach = std::uint32_t{1} << v;
        std::uint32_t nbrs = 0;
        for (;;) {
            nbrs = 0;
            for (std::uint32_t r = reach; r;) {
                const int u = std::countr_zero(r);
                r &= r - 1;
                nbrs |= mask[u];
            }
            const std::uint32_t grown = reach | (nbrs & allowed);
            if (grown == reach) break;
            reach = grown;
        }
        return std::popcount(nbrs & ~allowed);
    };

    // dp[S]: best width over elimination orders that eliminate S first.
    std::vector<int> dp(full + 1, 0);
    std::vector<signed char> choice(full + 1, -1);
    for (std::uint32_t s = 1; s <= full; ++s) {
        int best = INT_MAX;
        int best_v = -1;
        for (std::uint32_t r = s; r;) {
            const int v = std::countr_zero(r);
            r &= r - 1;
            const std::uint32_t t = s & ~(std::uint32_t{1} << v);
            const int cand = std::max(dp[t], q_value(t, v));
            if (cand < best) {
                best = cand;
                best_v = v;
            }
        }
        dp[s] = best;
        choice[s] = static_cast<signed char>(best_v);
    }

    std::vector<int> order(n);
    std::uint32_t s = full;
    for (int i = n - 1; i >= 0; --i) {
        const int v = choice[s];
        order[i] = v;
        s &= ~(std::uint32_t{1} << v);
    }

    // Re-verify by simulating the elimination on the fill-in graph.
    std::vector<std::uint32_t> fill = mask;
    std::uint32_t remaining = full;
    int width = 0;
    for (int v : order) {
        const std::uint32_t nbrs =
            fill[v] & remaining & ~(std::uint32_t{1} << v);
        width = std::max(width, std::popcount(nbrs));
        for (std::uint32_t r = nbrs; r;) {
            const int u = std::countr_zero(r);
            r &= r - 1;
            fill[u] |= nbrs & ~(std::uint32_t{1} << u);
        }
        remaining &= ~(std::uint32_t{1} << v);
    }
    if (width != dp[full]) {
        cert_fail("elimination order width " + std::to_string(width) +
                  " does not reproduce the treewidth value " +
                  std::to_string(dp[full]));
    }
    return {dp[full], {order}, "treewidth-subset-dp"};
}

OracleResult brute_min_balanced_separation(const ConvexDrawing& d, int cap) {
    const int n = d.n();
    check_cap("balanced separation", n, cap);
    const std::vector<std::uint32_t> mask = adjacency_masks(d);
    const std::uint32_t full = n == 32 ? ~0u : (std::uint32_t{1} << n) - 1;

    int best_order = INT_MAX;
    std::vector<int> best_a, best_b;
    for (std::uint32_t x = 0; x <= full; ++x) {
        const int ord = std::popcount(x);
        if (ord >= best_order) continue;
        const std::uint32_t rest = full & ~x;
        // Connected components of the rest, seeded in vertex order.
        std::vector<std::uint32_t> comps;
        std::uint32_t todo = rest;
        while (todo) {
            std::uint32_t comp = todo & -todo;
            for (;;) {
                std::uint32_t grow = comp;
                for (std::uint32_t r = comp; r;) {
                    const int u = std::countr_zero(r);
                    r &= r - 1;
                    grow |= mask[u] & rest;
                }
                if (grow == comp) break;
                comp = grow;
            }
            comps.push_back(comp);
            todo &= ~comp;
        }
        // Achievable sizes of one shore, via subset-sum over components.
        std::uint32_t sums = 1;
        for (std::uint32_t c : comps) sums |= sums << std::popcount(c);
        const int rest_size = std::popcount(rest);
        int take = -1;
        for (int v = 0; v <= rest_size; ++v) {
            if (((sums >> v) & 1) && 3 * v <= 2 * n && 3 * (rest_size - v) <= 2 * n) {
                take = v;
                break;
            }
        }
        if (take < 0) continue;
        // Reconstruct a shore of exactly `take` vertices, preferring to
        // leave components out when possible.
        std::vector<std::uint32_t> prefix{1};
        for (std::uint32_t c : comps) {
            prefix.push_back(prefix.back() | (prefix.back() << std::popcount(c)));
        }
        std::uint32_t a_mask = x;
        int rem = take;
        for (int i = static_cast<int>(comps.size()) - 1; i >= 0; --i) {
            if ((prefix[i] >> rem) & 1) continue;  // reachable without comps[i]
            a_mask |= comps[i];
            rem -= std::popcount(comps[i]);
        }
        if (rem != 0) cert_fail("separation shore reconstruction failed");
        best_order = ord;
        best_a.clear();
        best_b.clear();
        for (int v = 0; v < n; ++v) {
            const std::uint32_t bit = std::uint32_t{1} << v;
            if (a_mask & bit) best_a.push_back(v);
            if ((x & bit) || !(a_mask & bit)) best_b.push_back(v);
        }
    }
    if (best_order == INT_MAX) {
        cert_fail("no balanced separation found, not even the whole vertex set");
    }

    Separation s;
    s.a = best_a;
    s.b = best_b;
    s.order = best_order;
    const int a_only = static_cast<int>(best_a.size()) - best_order;
    const int b_only = static_cast<int>(best_b.size()) - best_order;
    s.balance = n > 0 ? static_cast<double>(std::max(a_only, b_only)) / n : 0.0;
    const ValidationReport rep = validate_separation(d, s);
    if (!rep.ok) {
        cert_fail("brute-force separation failed validation: " + rep.issues.front());
    }
    if (3 * std::max(a_only, b_only) > 2 * n) {
        cert_fail("brute-force separation is not balanced");
    }
    return {best_order, {best_a, best_b}, "separator-subset-enumeration"};
}

OracleResult brute_convex_lcr(const ConvexDrawing& d, int cap) {
    const int n = d.n();
    check_cap("convex local crossing number", n, cap);
    const std::vector<Edge>& edges = d.edges();
    const int m = static_cast<int>(edges.size());

    // Adjacency lists for placement-time chord creation.
    std::vector<std::vector<Vertex>> adj(n);
    for (const Edge& e : edges) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }

    std::vector<int> pos(n, -1);       // position -> vertex
    std::vector<int> where(n, -1);     // vertex -> position
    struct Chord {
        int lo, hi, count;
    };
    std::vector<Chord> chords;
    std::vector<int> found;

    const auto search = [&](int limit) {
        const auto dfs = [&](auto&& self, int p, int placed_mask) -> bool {
            if (p == n) {
                found.assign(pos.begin(), pos.end());
                return true;
            }
            for (int v = 0; v < n; ++v) {
                if (placed_mask & (1 << v)) continue;
                if (p == n - 1 && n >= 3 && v <= pos[1]) continue;  // reflection
                // New chords from v to placed neighbors; count crossings.
                // Chords created in this step all share the vertex v, so
                // they never cross each other: scan only pre-existing ones.
                const size_t pre = chords.size();
                std::vector<int> bumped;
                int new_chords = 0;
                bool ok = true;
                for (Vertex u : adj[v]) {
                    if (where[u] < 0) continue;
                    const int q = where[u];
                    int own = 0;
                    for (size_t c = 0; c < pre && ok; ++c) {
                        if (chords[c].lo < q && q < chords[c].hi) {
                            ++own;
                            if (++chords[c].count > limit) ok = false;
                            bumped.push_back(static_cast<int>(c));
                        }
                    }
                    if (own > limit) ok = false;
                    if (!ok) break;
                    chords.push_back({q, p, own});
                    ++new_chords;
                }
                if (ok) {
                    pos[p] = v;
                    where[v] = p;
                    if (self(self, p + 1, placed_mask | (1 << v))) return true;
                    pos[p] = -1;
                    where[v] = -1;
                }
                chords.resize(chords.size() - new_chords);
                for (int c : bumped) --chords[c].count;
            }
            return false;
        };
        pos[0] = 0;
        where[0] = 0;
        const bool hit = dfs(dfs, 1, 1);
        where[0] = -1;
        pos[0] = -1;
        return hit;
    };

    int value = -1;
    const int ceiling = m * (m - 1) / 2 + 1;
    for (int limit = 0; limit <= ceiling; ++limit) {
        if (search(limit)) {
            value = limit;
            break;
        }
    }
    if (value < 0) cert_fail("crossing search exhausted without an order");

    // Re-verify the witness from scratch.
    std::vector<int> at(n, -1);
    for (int p = 0; p < n; ++p) {
        if (found[p] < 0 || found[p] >= n || at[found[p]] >= 0) {
            cert_fail("crossing witness is not a permutation");
        }
        at[found[p]] = p;
    }
    int verify = 0;
    for (int i = 0; i < m; ++i) {
        int count = 0;
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            const int a = at[edges[i].first], b = at[edges[i].second];
            const int c = at[edges[j].first], e = at[edges[j].second];
            if (a == c || a == e || b == c || b == e) continue;
            if (in_open_arc(n, a, b, c) != in_open_arc(n, a, b, e)) ++count;
        }
        verify = std::max(verify, count);
    }
    if (verify != value) {
        cert_fail("witness order realizes " + std::to_string(verify) +
                  " crossings per edge, expected " + std::to_string(value));
    }
    return {value, {found}, "iterative-deepening-positions"};
}

}  // namespace okp
