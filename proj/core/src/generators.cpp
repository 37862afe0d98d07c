#include "okp/generators.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "okp/errors.hpp"

namespace okp {

namespace {

// Uniform integer in [0, m) by rejection sampling on raw engine words, so
// the stream is identical on every platform (distributions are not).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t m) {
        const std::uint64_t limit = m == 0 ? 0 : ~std::uint64_t{0} - ~std::uint64_t{0} % m;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % m;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

  private:
    std::mt19937_64 engine_;
};

std::uint64_t edge_key(const Edge& e) {
    return (static_cast<std::uint64_t>(e.first) << 32) |
           static_cast<std::uint32_t>(e.second);
}

// Crossing bookkeeping for incremental chord insertion: chords incident to
// each vertex, scanned along the shorter side of a candidate.
class ChordSet {
  public:
    explicit ChordSet(int n) : n_(n), incident_(n) {}

    int size() const { return static_cast<int>(chords_.size()); }
    const std::vector<Edge>& chords() const { return chords_; }
    int count(int id) const { return counts_[id]; }

    // Ids of accepted chords crossing e.
    std::vector<int> crossing(const Edge& e) const {
        int a = e.first, b = e.second;
        if (ccw_dist(n_, a, b) > n_ / 2) std::swap(a, b);
        std::vector<int> out;
        for (int v = (a + 1) % n_; v != b; v = (v + 1) % n_) {
            for (int id : incident_[v]) {
                const Edge& c = chords_[id];
                const Vertex other = c.first == v ? c.second : c.first;
                if (!in_open_arc(n_, a, b, other) && other != a && other != b) {
                    out.push_back(id);
                }
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    int add(const Edge& e, const std::vector<int>& crossed) {
        const int id = size();
        chords_.push_back(e);
        counts_.push_back(static_cast<int>(crossed.size()));
        incident_[e.first].push_back(id);
        incident_[e.second].push_back(id);
        for (int c : crossed) ++counts_[c];
        return id;
    }

  private:
    int n_;
    std::vector<Edge> chords_;
    std::vector<int> counts_;
    std::vector<std::vector<int>> incident_;
};

std::vector<Edge> chord_candidates(int n, Rng& rng) {
    std::vector<Edge> cands;
    if (n <= 300) {
        for (Vertex a = 0; a < n; ++a) {
            for (Vertex b = a + 2; b < n; ++b) {
                if (a == 0 && b == n - 1) continue;  // outer edge
                cands.emplace_back(a, b);
            }
        }
    } else {
        std::unordered_set<std::uint64_t> seen;
        for (int i = 0; i < 6 * n; ++i) {
            const int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            const int span = 2 + static_cast<int>(rng.below(63));
            const Edge e = make_edge(a, (a + span) % n);
            if (seen.insert(edge_key(e)).second) cands.push_back(e);
        }
    }
    rng.shuffle(cands);
    return cands;
}

ConvexDrawing outer_cycle(int n) {
    ConvexDrawing d(n);
    for (Vertex v = 0; v < n; ++v) d.add_edge(v, (v + 1) % n);
    return d;
}

}  // namespace

ConvexDrawing stacked_prism(int m, int n) {
    // Odd m breaks the alternating row layout: its guarantees (row edges
    // uncrossed, column edges crossed at most 2n-2) need matched ends.
    if (m < 2 || m % 2 != 0 || n < 1) {
        throw InvalidInputError(
            "stacked prism needs an even number of rows >= 2 and >= 1 column");
    }
    const auto pos = [&](int r, int c) {
        return r * n + (r % 2 == 0 ? c : n - 1 - c);
    };
    ConvexDrawing d(m * n);
    const auto add = [&](Vertex a, Vertex b) {
        if (a != b && !d.has_edge(a, b)) d.add_edge(a, b);
    };
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < n; ++c) {
            if (c + 1 < n) add(pos(r, c), pos(r, c + 1));  // row edge
            if (r + 1 < m) {
                add(pos(r, c), pos(r + 1, c));  // column edge
            } else {
                add(pos(r, c), pos(0, c));  // column wraparound
            }
        }
    }
    return d;
}

RandomDrawing random_outer_k_planar(int n, int k, std::uint64_t seed) {
    if (n < 3 || k < 0) {
        throw InvalidInputError("random drawing needs n >= 3 and k >= 0");
    }
    Rng rng(seed);
    ChordSet chords(n);
    int achieved = 0;
    for (const Edge& e : chord_candidates(n, rng)) {
        const std::vector<int> crossed = chords.crossing(e);
        if (static_cast<int>(crossed.size()) > k) continue;
        bool ok = true;
        for (int id : crossed) {
            if (chords.count(id) + 1 > k) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        const int id = chords.add(e, crossed);
        achieved = std::max(achieved, chords.count(id));
        for (int c : crossed) achieved = std::max(achieved, chords.count(c));
    }
    RandomDrawing out{outer_cycle(n), achieved};
    for (const Edge& e : chords.chords()) out.drawing.add_edge(e.first, e.second);
    return out;
}

RandomDrawing random_outer_min_k_planar(int n, int k, std::uint64_t seed) {
    if (k < 1) {
        throw InvalidInputError("min-k generation needs k >= 1");
    }
    if (n < 2 * k + 4) {
        throw InvalidInputError("min-" + std::to_string(k) + " planting needs n >= " +
                                std::to_string(2 * k + 4));
    }
    Rng rng(seed);
    ChordSet chords(n);

    // Planted heavy chord with k+1 pairwise nested light crossers: the
    // result cannot be outer k-planar, but every crossing pair still has an
    // edge crossed at most once.
    const int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    const int h = n / 2;
    const Edge heavy = make_edge(a, (a + h) % n);
    chords.add(heavy, {});
    for (int i = 0; i <= k; ++i) {
        const Edge light = make_edge((a + 1 + i) % n, (a + h + 1 + (k - i)) % n);
        const std::vector<int> crossed = chords.crossing(light);
        chords.add(light, crossed);
    }

    // Every crossing pair must keep one edge with at most k crossings;
    // adding e bumps each crossed edge, so their own pairs need rechecking.
    const auto acceptable = [&](const std::vector<int>& crossed) {
        const int own = static_cast<int>(crossed.size());
        std::vector<char> bumped(chords.size(), 0);
        for (int id : crossed) bumped[id] = 1;
        for (int id : crossed) {
            if (own > k && chords.count(id) + 1 > k) return false;
            for (int other : chords.crossing(chords.chords()[id])) {
                if (other == id) continue;
                const int cnt_id = chords.count(id) + 1;
                const int cnt_other = chords.count(other) + bumped[other];
                if (std::min(cnt_id, cnt_other) > k) return false;
            }
        }
        return true;
    };
    std::unordered_set<std::uint64_t> taken;
    for (const Edge& c : chords.chords()) taken.insert(edge_key(c));
    for (const Edge& e : chord_candidates(n, rng)) {
        if (taken.count(edge_key(e))) continue;
        const std::vector<int> crossed = chords.crossing(e);
        if (!acceptable(crossed)) continue;
        chords.add(e, crossed);
        taken.insert(edge_key(e));
    }

    RandomDrawing out{outer_cycle(n), 0};
    for (const Edge& e : chords.chords()) out.drawing.add_edge(e.first, e.second);
    out.achieved_lcr = crossing_profile(out.drawing).min_k_ok_for;
    return out;
}

}  // namespace okp
