#include "okp/tree_decomposition.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_set>
#include <utility>

#include "okp/errors.hpp"

namespace okp {

namespace {

[[noreturn]] void cert_fail(const std::string& what) {
    throw InternalCertificateError("certificate violated: " + what);
}

void require_cert(bool ok, const char* what) {
    if (!ok) cert_fail(what);
}

std::string triple_str(const std::array<Vertex, 3>& tri) {
    std::array<Vertex, 3> s = tri;
    std::sort(s.begin(), s.end());
    return std::to_string(s[0]) + "," + std::to_string(s[1]) + "," +
           std::to_string(s[2]);
}

std::array<Vertex, 3> sorted_tri(const TriFace& f) {
    std::array<Vertex, 3> s = f.tri;
    std::sort(s.begin(), s.end());
    return s;
}

// True iff x lies strictly on the side of the link where `face` is.
bool on_face_side(const Triangulation& t, int link_id, int face, Vertex x) {
    const InnerLink& l = t.links[link_id];
    if (l.lower_face == face) {
        return in_open_arc(t.n, l.oriented.first, l.oriented.second, x);
    }
    require_cert(l.upper_face == face, "link is not a side of the face");
    return in_open_arc(t.n, l.oriented.second, l.oriented.first, x);
}

Edge normalized_link(const Triangulation& t, int link_id) {
    const Link& l = t.links[link_id].oriented;
    return make_edge(l.first, l.second);
}

// Per-node classification of the edges piercing the node's side links,
// relative to the part-tree orientation.
struct NodeEdges {
    std::vector<Edge> parent_only;
    std::vector<std::pair<Edge, int>> shorts;   // (edge, child slot: 0 left, 1 right)
    std::vector<std::pair<Edge, int>> lineals;  // (edge, pierced child slot)
    std::vector<Edge> bents;
};

NodeEdges classify_node(const Triangulation& t, const PartFace& nd) {
    constexpr int kParent = 1, kLeft = 2, kRight = 4;
    std::map<Edge, int> mask;
    auto feed = [&](int link_id, int bit) {
        if (link_id < 0) return;
        for (const Edge& e : t.links[link_id].piercers) mask[e] |= bit;
    };
    feed(nd.parent_link, kParent);
    feed(nd.left_link, kLeft);
    feed(nd.right_link, kRight);

    NodeEdges out;
    for (const auto& [e, m] : mask) {
        switch (m) {
            case kParent: out.parent_only.push_back(e); break;
            case kParent | kLeft: out.lineals.emplace_back(e, 0); break;
            case kParent | kRight: out.lineals.emplace_back(e, 1); break;
            case kLeft: out.shorts.emplace_back(e, 0); break;
            case kRight: out.shorts.emplace_back(e, 1); break;
            case kLeft | kRight: out.bents.push_back(e); break;
            default:
                cert_fail("edge pierces all three sides of a face");
        }
    }
    return out;
}

}  // namespace

std::vector<std::pair<int, int>> weak_dual(const Triangulation& t) {
    std::vector<std::pair<int, int>> out;
    out.reserve(t.links.size());
    for (const InnerLink& l : t.links) {
        out.emplace_back(std::min(l.upper_face, l.lower_face),
                         std::max(l.upper_face, l.lower_face));
    }
    std::sort(out.begin(), out.end());
    return out;
}

PartSplit split_at_unpierced_links(const Triangulation& t) {
    const int faces = static_cast<int>(t.faces.size());
    // Dual adjacency through pierced links only.
    std::vector<std::vector<std::pair<int, int>>> adj(faces);  // (neighbor, link)
    PartSplit out;
    for (int id = 0; id < static_cast<int>(t.links.size()); ++id) {
        const InnerLink& l = t.links[id];
        if (l.pn() == 0) {
            out.unpierced_links.push_back(id);
            continue;
        }
        adj[l.upper_face].emplace_back(l.lower_face, id);
        adj[l.lower_face].emplace_back(l.upper_face, id);
    }

    out.part_of_face.assign(faces, -1);
    for (int start = 0; start < faces; ++start) {
        if (out.part_of_face[start] >= 0) continue;
        const int part_id = static_cast<int>(out.parts.size());
        // Collect the component.
        std::vector<int> comp{start};
        out.part_of_face[start] = part_id;
        for (size_t i = 0; i < comp.size(); ++i) {
            for (auto [nb, link] : adj[comp[i]]) {
                if (out.part_of_face[nb] < 0) {
                    out.part_of_face[nb] = part_id;
                    comp.push_back(nb);
                }
            }
        }
        // Root: a part-local leaf with the lexicographically smallest
        // sorted corner triple.
        int root = -1;
        for (int f : comp) {
            if (adj[f].size() > 1) continue;
            if (root < 0 || sorted_tri(t.faces[f]) < sorted_tri(t.faces[root])) {
                root = f;
            }
        }
        require_cert(root >= 0, "part of the dual tree has no leaf");

        TriangulationPart part;
        part.nodes.reserve(comp.size());
        // Preorder, left subtree first.
        struct Frame {
            int face, parent_pos, parent_link;
        };
        std::vector<Frame> stack{{root, -1, -1}};
        while (!stack.empty()) {
            Frame fr = stack.back();
            stack.pop_back();
            const int pos = static_cast<int>(part.nodes.size());
            PartFace nd;
            nd.face = fr.face;
            nd.parent = fr.parent_pos;
            nd.parent_link = fr.parent_link;
            // Children: part neighbors except the parent.
            std::vector<std::pair<int, int>> kids;  // (face, link)
            for (auto [nb, link] : adj[fr.face]) {
                if (link != fr.parent_link) kids.emplace_back(nb, link);
            }
            require_cert(kids.size() <= 2, "face has more than two part children");
            if (kids.size() == 2) {
                const int pn0 = t.links[kids[0].second].pn();
                const int pn1 = t.links[kids[1].second].pn();
                const bool swap_kids =
                    pn1 < pn0 || (pn1 == pn0 && normalized_link(t, kids[1].second) <
                                                    normalized_link(t, kids[0].second));
                if (swap_kids) std::swap(kids[0], kids[1]);
            }
            if (!kids.empty()) nd.left_link = kids[0].second;
            if (kids.size() == 2) nd.right_link = kids[1].second;
            part.nodes.push_back(nd);
            if (fr.parent_pos >= 0) {
                PartFace& p = part.nodes[fr.parent_pos];
                // The frame for the left child is pushed last, so it pops
                // first; record positions as the children are visited.
                if (p.left_link == fr.parent_link) {
                    p.left = pos;
                } else {
                    require_cert(p.right_link == fr.parent_link,
                                 "child link does not match its parent's slots");
                    p.right = pos;
                }
            }
            // Push right first so that the left subtree is visited first.
            if (kids.size() == 2) stack.push_back({kids[1].first, pos, kids[1].second});
            if (!kids.empty()) stack.push_back({kids[0].first, pos, kids[0].second});
        }
        require_cert(part.nodes.size() == comp.size(), "part traversal missed a face");
        out.parts.push_back(std::move(part));
    }
    return out;
}

std::vector<ClassifiedEdge> classify_pierced_edges(const Triangulation& t) {
    PartSplit ps = split_at_unpierced_links(t);
    std::vector<ClassifiedEdge> out;
    for (const TriangulationPart& part : ps.parts) {
        for (auto it = part.nodes.rbegin(); it != part.nodes.rend(); ++it) {
            NodeEdges ne = classify_node(t, *it);
            for (const Edge& e : ne.parent_only) {
                out.push_back({it->face, e, EdgeClassification::ParentOnly});
            }
            for (const auto& [e, slot] : ne.shorts) {
                (void)slot;
                out.push_back({it->face, e, EdgeClassification::Short});
            }
            for (const auto& [e, slot] : ne.lineals) {
                (void)slot;
                out.push_back({it->face, e, EdgeClassification::Lineal});
            }
            for (const Edge& e : ne.bents) {
                out.push_back({it->face, e, EdgeClassification::Bent});
            }
        }
    }
    return out;
}

namespace {

enum class BagKind { Face, Primary, Secondary };

struct Builder {
    const Triangulation& t;
    TreeDecomposition td;
    std::vector<int> bag_parent;       // bag-tree parent within the part
    std::vector<BagKind> bag_kind;
    std::vector<int> bag_face;         // owning face (copies: the face copied)
    std::vector<int> bag_child_face;   // primaries: face below; else -1

    // Per part-node bookkeeping, aligned with the part's `nodes`.
    std::vector<int> node_bag;
    std::vector<std::array<int, 2>> node_primary;
    std::vector<std::vector<int>> node_secondaries;

    std::vector<int> highest_bag;   // per vertex, stamped per part
    std::vector<int> highest_part;
    int current_part = -1;

    explicit Builder(const Triangulation& tri) : t(tri) {
        highest_bag.assign(t.n, -1);
        highest_part.assign(t.n, -1);
        td.n = t.n;
    }

    int new_bag(const std::array<Vertex, 3>& content, int parent, BagKind kind,
                int face, int child_face, std::string prov) {
        const int id = static_cast<int>(td.bags.size());
        std::vector<Vertex> c(content.begin(), content.end());
        std::sort(c.begin(), c.end());
        td.bags.push_back(std::move(c));
        td.provenance.push_back(std::move(prov));
        bag_parent.push_back(parent);
        bag_kind.push_back(kind);
        bag_face.push_back(face);
        bag_child_face.push_back(child_face);
        return id;
    }

    bool bag_contains(int bag, Vertex v) const {
        const auto& b = td.bags[bag];
        return std::binary_search(b.begin(), b.end(), v);
    }

    void bag_insert(int bag, Vertex v) {
        auto& b = td.bags[bag];
        auto it = std::lower_bound(b.begin(), b.end(), v);
        if (it == b.end() || *it != v) b.insert(it, v);
    }

    int highest(Vertex v) const {
        return highest_part[v] == current_part ? highest_bag[v] : -1;
    }

    void set_highest(Vertex v, int bag) {
        highest_bag[v] = bag;
        highest_part[v] = current_part;
    }

    // Inserts v into every bag strictly above its highest bag up to
    // `target` (inclusive), walking the bag tree's parent chain.
    void raise(Vertex v, int target) {
        if (bag_contains(target, v)) return;
        int cur = highest(v);
        require_cert(cur >= 0, "lifted vertex was never placed in this part");
        require_cert(bag_contains(cur, v), "highest-bag record does not contain its vertex");
        int steps = 0;
        const int limit = static_cast<int>(td.bags.size());
        while (cur != target) {
            cur = bag_parent[cur];
            require_cert(cur >= 0, "lift walked past the part root");
            require_cert(++steps <= limit, "lift walk did not terminate");
            if (cur != target) {
                require_cert(bag_kind[cur] != BagKind::Face,
                             "lift passed through an original face bag");
            }
            bag_insert(cur, v);
        }
        set_highest(v, target);
    }

    void emit_part(const TriangulationPart& part);
    void lift_part(const TriangulationPart& part);
    void check_bag_sizes() const;
};

void Builder::emit_part(const TriangulationPart& part) {
    const int base = static_cast<int>(node_bag.size());
    node_bag.resize(base + part.nodes.size(), -1);
    node_primary.resize(base + part.nodes.size(), {-1, -1});
    node_secondaries.resize(base + part.nodes.size());

    // Bent counts are needed before emission to size the secondary chains.
    std::vector<int> bent_count(part.nodes.size(), 0);
    for (size_t i = 0; i < part.nodes.size(); ++i) {
        bent_count[i] = static_cast<int>(classify_node(t, part.nodes[i]).bents.size());
    }

    struct Frame {
        int pos, parent_pos;  // positions within part.nodes
    };
    std::vector<Frame> stack{{0, -1}};
    while (!stack.empty()) {
        Frame fr = stack.back();
        stack.pop_back();
        const PartFace& nd = part.nodes[fr.pos];
        const TriFace& face = t.faces[nd.face];
        int attach = -1;
        if (fr.parent_pos >= 0) {
            const PartFace& pd = part.nodes[fr.parent_pos];
            const TriFace& pface = t.faces[pd.face];
            const bool is_left = pd.left == fr.pos;
            require_cert(is_left || pd.right == fr.pos,
                         "visited node is not a child of its parent");
            int above = node_bag[base + fr.parent_pos];
            if (is_left && pd.right >= 0) {
                const int l = bent_count[fr.parent_pos];
                for (int i = 1; i <= l; ++i) {
                    above = new_bag(pface.tri, above, BagKind::Secondary, pd.face, -1,
                                    "secondary:" + triple_str(pface.tri) + "#" +
                                        std::to_string(i));
                    node_secondaries[base + fr.parent_pos].push_back(above);
                }
            } else {
                require_cert(!is_left || bent_count[fr.parent_pos] == 0,
                             "bent edges at a face without two children");
            }
            const int primary =
                new_bag(pface.tri, above, BagKind::Primary, pd.face, nd.face,
                        "primary:" + triple_str(pface.tri) + "->" + triple_str(face.tri));
            node_primary[base + fr.parent_pos][is_left ? 0 : 1] = primary;
            attach = primary;
        }
        node_bag[base + fr.pos] =
            new_bag(face.tri, attach, BagKind::Face, nd.face, -1,
                    "face:" + triple_str(face.tri));
        if (nd.right >= 0) stack.push_back({nd.right, fr.pos});
        if (nd.left >= 0) stack.push_back({nd.left, fr.pos});
    }

    // First containing face bag in preorder, per vertex.
    for (size_t i = 0; i < part.nodes.size(); ++i) {
        for (Vertex v : t.faces[part.nodes[i].face].tri) {
            if (highest(v) < 0) set_highest(v, node_bag[base + i]);
        }
    }
}

void Builder::lift_part(const TriangulationPart& part) {
    const int base = static_cast<int>(node_bag.size()) -
                     static_cast<int>(part.nodes.size());
    for (int i = static_cast<int>(part.nodes.size()) - 1; i >= 0; --i) {
        const PartFace& nd = part.nodes[i];
        const TriFace& face = t.faces[nd.face];
        const int b_f = node_bag[base + i];
        NodeEdges ne = classify_node(t, nd);

        Vertex v3 = -1;
        if (nd.parent_link >= 0) {
            const Edge pl = normalized_link(t, nd.parent_link);
            for (Vertex v : face.tri) {
                if (v != pl.first && v != pl.second) v3 = v;
            }
            require_cert(v3 >= 0, "face has no corner off its parent link");
        }

        auto child_side_endpoint = [&](const Edge& e, int slot) {
            const int link = slot == 0 ? nd.left_link : nd.right_link;
            const int child_pos = slot == 0 ? nd.left : nd.right;
            require_cert(link >= 0 && child_pos >= 0, "pierced child slot is empty");
            const int child_face = part.nodes[child_pos].face;
            if (on_face_side(t, link, child_face, e.first)) return e.first;
            require_cert(on_face_side(t, link, child_face, e.second),
                         "piercing edge has no endpoint beyond the pierced link");
            return e.second;
        };

        for (const Edge& e : ne.parent_only) {
            const Vertex below = on_face_side(t, nd.parent_link, nd.face, e.first)
                                     ? e.first
                                     : e.second;
            require_cert(on_face_side(t, nd.parent_link, nd.face, below),
                         "parent-piercing edge has no endpoint on the face's side");
            require_cert(below == v3,
                         "edge ending inside the face misses the off-link corner");
        }
        for (const auto& [e, slot] : ne.shorts) {
            const int link = slot == 0 ? nd.left_link : nd.right_link;
            const Edge le = normalized_link(t, link);
            Vertex opposite = -1;
            for (Vertex v : face.tri) {
                if (v != le.first && v != le.second) opposite = v;
            }
            require_cert(e.first == opposite || e.second == opposite,
                         "short edge is not incident to the corner opposite its link");
            const Vertex other = e.first == opposite ? e.second : e.first;
            require_cert(other == child_side_endpoint(e, slot),
                         "short edge's far endpoint is not beyond the pierced link");
            raise(other, node_primary[base + i][slot]);
        }
        for (const auto& [e, slot] : ne.lineals) {
            raise(child_side_endpoint(e, slot), b_f);
        }
        if (!ne.bents.empty()) {
            require_cert(nd.left >= 0 && nd.right >= 0,
                         "bent edges at a face without two children");
            require_cert(nd.parent >= 0 && t.links[nd.parent_link].pn() >= 1,
                         "bent edges at a part root");
            require_cert(t.links[nd.left_link].pn() <= t.links[nd.right_link].pn(),
                         "left child link is not the lighter side");
            require_cert(2 * t.links[nd.left_link].pn() + 1 <= t.face_pn(nd.face),
                         "lighter child link exceeds half the face piercing");
            const int l = static_cast<int>(ne.bents.size());
            require_cert(static_cast<int>(node_secondaries[base + i].size()) == l,
                         "secondary chain length does not match the bent count");
            // Number the bent edges: descending preorder index of the
            // highest bag holding the left-subtree endpoint (constant in
            // practice), ties by ascending edge.
            std::vector<std::pair<Edge, Vertex>> us;  // (edge, left endpoint)
            for (const Edge& e : ne.bents) {
                const Vertex u = child_side_endpoint(e, 0);
                const Vertex w = e.first == u ? e.second : e.first;
                require_cert(w == child_side_endpoint(e, 1),
                             "bent edge does not reach beyond both child links");
                us.emplace_back(e, u);
            }
            std::vector<int> order(us.size());
            for (size_t j = 0; j < order.size(); ++j) order[j] = static_cast<int>(j);
            std::vector<int> key(us.size());
            for (size_t j = 0; j < us.size(); ++j) {
                key[j] = highest(us[j].second);
                require_cert(key[j] >= 0, "bent endpoint was never placed in this part");
            }
            std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
                if (key[x] != key[y]) return key[x] > key[y];
                return us[x].first < us[y].first;
            });
            std::vector<int> number(us.size());  // edge index -> i (1-based)
            for (size_t rank = 0; rank < order.size(); ++rank) {
                number[order[rank]] = static_cast<int>(rank) + 1;
            }
            for (size_t j = 0; j < us.size(); ++j) {
                const auto& [e, u] = us[j];
                const Vertex w = e.first == u ? e.second : e.first;
                const int idx = number[j];
                const int s_bag = node_secondaries[base + i][idx - 1];
                raise(u, s_bag);
                raise(w, b_f);
                for (int jj = 0; jj < idx; ++jj) {
                    bag_insert(node_secondaries[base + i][jj], w);
                }
            }
        }
    }
}

void Builder::check_bag_sizes() const {
    for (size_t b = 0; b < td.bags.size(); ++b) {
        const int size = static_cast<int>(td.bags[b].size());
        int budget = 0;
        switch (bag_kind[b]) {
            case BagKind::Face: budget = t.face_pn(bag_face[b]); break;
            case BagKind::Secondary: budget = t.face_pn(bag_face[b]) + 1; break;
            case BagKind::Primary: budget = t.face_pn(bag_child_face[b]) + 1; break;
        }
        if (2 * (size - 3) > budget) {
            cert_fail("bag " + std::to_string(b) + " (" + td.provenance[b] +
                      ") holds " + std::to_string(size) +
                      " vertices, beyond its piercing budget " + std::to_string(budget));
        }
        require_cert(2 * size <= t.triangle_pn + 7,
                     "a bag exceeds the global piercing bound");
    }
}

}  // namespace

TreeDecomposition build_tree_decomposition(const ConvexDrawing& d,
                                           const Triangulation& t) {
    if (d.n() != t.n) {
        throw InvalidInputError("triangulation is over " + std::to_string(t.n) +
                                " vertices but the drawing has " +
                                std::to_string(d.n()));
    }
    PartSplit ps = split_at_unpierced_links(t);
    Builder b(t);
    for (size_t p = 0; p < ps.parts.size(); ++p) {
        b.current_part = static_cast<int>(p);
        b.emit_part(ps.parts[p]);
        b.lift_part(ps.parts[p]);
    }

    // Intra-part tree edges from the bag-parent chains.
    for (size_t bag = 0; bag < b.td.bags.size(); ++bag) {
        if (b.bag_parent[bag] >= 0) {
            b.td.tree_edges.emplace_back(b.bag_parent[bag], static_cast<int>(bag));
        }
    }
    // Rejoin the parts across unpierced links: connect the smallest bag
    // of each side that contains both link endpoints.
    std::vector<std::pair<int, int>> part_range;  // bag id range per part... derived below
    {
        // Bags were emitted part by part; recover the ranges by face part ids.
        part_range.assign(ps.parts.size(), {INT32_MAX, -1});
        for (size_t bag = 0; bag < b.td.bags.size(); ++bag) {
            const int part = ps.part_of_face[b.bag_face[bag]];
            part_range[part].first = std::min(part_range[part].first,
                                              static_cast<int>(bag));
            part_range[part].second = std::max(part_range[part].second,
                                               static_cast<int>(bag));
        }
    }
    auto find_join_bag = [&](int part, Vertex p, Vertex q) {
        for (int bag = part_range[part].first; bag <= part_range[part].second; ++bag) {
            if (b.bag_contains(bag, p) && b.bag_contains(bag, q)) return bag;
        }
        cert_fail("no bag of a part contains both endpoints of a splitting link");
    };
    for (int link : ps.unpierced_links) {
        const InnerLink& l = t.links[link];
        const Edge e = make_edge(l.oriented.first, l.oriented.second);
        const int pu = ps.part_of_face[l.upper_face];
        const int pl = ps.part_of_face[l.lower_face];
        require_cert(pu != pl, "unpierced link does not separate parts");
        const int bu = find_join_bag(pu, e.first, e.second);
        const int bl = find_join_bag(pl, e.first, e.second);
        b.td.tree_edges.emplace_back(std::min(bu, bl), std::max(bu, bl));
    }
    for (auto& [x, y] : b.td.tree_edges) {
        if (x > y) std::swap(x, y);
    }
    std::sort(b.td.tree_edges.begin(), b.td.tree_edges.end());
    require_cert(b.td.tree_edges.size() + 1 == b.td.bags.size(),
                 "bag tree does not have exactly bags-1 edges");

    int max_size = 0;
    for (const auto& bag : b.td.bags) {
        max_size = std::max(max_size, static_cast<int>(bag.size()));
    }
    b.td.width = max_size - 1;
    b.check_bag_sizes();

    // Validate against the augmented drawing: a pipeline decomposition must
    // cover the outer cycle even when the input omits some of its edges.
    ValidationReport rep = validate_td(augment_outer_cycle(d), b.td);
    if (!rep.ok) {
        cert_fail("constructed decomposition failed validation: " + rep.issues.front());
    }
    return std::move(b.td);
}

ValidationReport validate_td(const ConvexDrawing& d, const TreeDecomposition& td) {
    ValidationReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.issues.push_back(std::move(msg));
    };
    const int n = d.n();
    if (td.n != n) {
        fail("decomposition covers " + std::to_string(td.n) +
             " vertices but the drawing has " + std::to_string(n));
    }
    const int nb = static_cast<int>(td.bags.size());
    if (nb == 0) {
        fail("decomposition has no bags");
        return rep;
    }

    std::vector<std::vector<Vertex>> bags = td.bags;
    int max_size = 0;
    std::vector<int> bag_count(n, 0);
    for (int i = 0; i < nb; ++i) {
        std::sort(bags[i].begin(), bags[i].end());
        bags[i].erase(std::unique(bags[i].begin(), bags[i].end()), bags[i].end());
        max_size = std::max(max_size, static_cast<int>(bags[i].size()));
        for (Vertex v : bags[i]) {
            if (v < 0 || v >= n) {
                fail("bag " + std::to_string(i) + " contains out-of-range vertex " +
                     std::to_string(v));
            } else {
                ++bag_count[v];
            }
        }
    }
    rep.width = max_size - 1;
    if (td.width != rep.width) {
        fail("stored width " + std::to_string(td.width) +
             " differs from computed width " + std::to_string(rep.width));
    }
    for (Vertex v = 0; v < n; ++v) {
        if (bag_count[v] == 0) {
            fail("vertex " + std::to_string(v) + " appears in no bag");
        }
    }

    // Tree structure.
    bool tree_ok = true;
    if (static_cast<int>(td.tree_edges.size()) != nb - 1) {
        fail("bag tree has " + std::to_string(td.tree_edges.size()) +
             " edges for " + std::to_string(nb) + " bags");
        tree_ok = false;
    }
    std::vector<std::vector<int>> adj(nb);
    for (const auto& [x, y] : td.tree_edges) {
        if (x < 0 || x >= nb || y < 0 || y >= nb || x == y) {
            fail("invalid bag tree edge (" + std::to_string(x) + "," +
                 std::to_string(y) + ")");
            tree_ok = false;
            continue;
        }
        adj[x].push_back(y);
        adj[y].push_back(x);
    }
    if (tree_ok) {
        std::vector<char> seen(nb, 0);
        std::vector<int> queue{0};
        seen[0] = 1;
        for (size_t i = 0; i < queue.size(); ++i) {
            for (int nxt : adj[queue[i]]) {
                if (!seen[nxt]) {
                    seen[nxt] = 1;
                    queue.push_back(nxt);
                }
            }
        }
        if (static_cast<int>(queue.size()) != nb) {
            fail("bag tree is disconnected");
            tree_ok = false;
        }
    }

    // Per-vertex subtree connectivity: within a tree, the bags holding v
    // form a subtree iff (#bags with v) - (#tree edges with v on both
    // ends) == 1.
    if (tree_ok) {
        std::vector<int> edge_count(n, 0);
        std::vector<Vertex> inter;
        for (const auto& [x, y] : td.tree_edges) {
            inter.clear();
            std::set_intersection(bags[x].begin(), bags[x].end(), bags[y].begin(),
                                  bags[y].end(), std::back_inserter(inter));
            for (Vertex v : inter) ++edge_count[v];
        }
        for (Vertex v = 0; v < n; ++v) {
            if (bag_count[v] > 0 && bag_count[v] - edge_count[v] != 1) {
                fail("bags containing vertex " + std::to_string(v) +
                     " do not form a connected subtree");
            }
        }
    }

    // Edge coverage: every drawing edge must land in some bag.
    const std::vector<Edge> need = d.edges();
    long long total_pairs = 0;
    for (const auto& bag : bags) {
        const long long s = static_cast<long long>(bag.size());
        total_pairs += s * (s - 1) / 2;
    }
    if (total_pairs <= 50'000'000LL) {
        std::unordered_set<std::uint64_t> covered;
        covered.reserve(static_cast<size_t>(total_pairs) * 2 + 16);
        for (const auto& bag : bags) {
            for (size_t i = 0; i < bag.size(); ++i) {
                for (size_t j = i + 1; j < bag.size(); ++j) {
                    covered.insert((static_cast<std::uint64_t>(bag[i]) << 32) |
                                   static_cast<std::uint32_t>(bag[j]));
                }
            }
        }
        for (const Edge& e : need) {
            if (!covered.count((static_cast<std::uint64_t>(e.first) << 32) |
                               static_cast<std::uint32_t>(e.second))) {
                fail("edge {" + std::to_string(e.first) + "," +
                     std::to_string(e.second) + "} is in no bag");
            }
        }
    } else {
        std::vector<std::vector<int>> bags_of(n);
        for (int i = 0; i < nb; ++i) {
            for (Vertex v : bags[i]) {
                if (v >= 0 && v < n) bags_of[v].push_back(i);
            }
        }
        for (const Edge& e : need) {
            const auto& bu = bags_of[e.first];
            const auto& bv = bags_of[e.second];
            std::vector<int> inter;
            std::set_intersection(bu.begin(), bu.end(), bv.begin(), bv.end(),
                                  std::back_inserter(inter));
            if (inter.empty()) {
                fail("edge {" + std::to_string(e.first) + "," +
                     std::to_string(e.second) + "} is in no bag");
            }
        }
    }
    return rep;
}

}  // namespace okp
