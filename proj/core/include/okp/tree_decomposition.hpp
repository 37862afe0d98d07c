#pragma once

#include <string>
#include <utility>
#include <vector>

#include "okp/drawing.hpp"
#include "okp/triangulation.hpp"

namespace okp {

// Weak dual of a triangulation: one node per face, one edge per inner
// link (between the two faces it bounds). Pairs are (i, j) with i < j,
// sorted; the result is a tree on n-2 nodes.
std::vector<std::pair<int, int>> weak_dual(const Triangulation& t);

// A maximal group of faces connected through pierced inner links,
// re-rooted at a deterministic leaf and laid out in preorder
// (nodes[0] is the root; left subtree before right subtree).
// All indices except `face` and the link ids refer to positions in
// `nodes`; -1 means absent. For a face with two children in the part,
// `left` is the child across the link with fewer piercers (ties by
// lexicographic link endpoints).
struct PartFace {
    int face = -1;
    int parent = -1;
    int parent_link = -1;
    int left = -1;
    int right = -1;
    int left_link = -1;
    int right_link = -1;
};

struct TriangulationPart {
    std::vector<PartFace> nodes;
};

// Splitting a triangulation at its unpierced inner links. Parts are
// ordered by their smallest face id. `unpierced_links` records where
// the parts have to be rejoined: for each such link, the two adjacent
// faces lie in different parts and both contain the link's endpoints.
struct PartSplit {
    std::vector<TriangulationPart> parts;
    std::vector<int> part_of_face;  // face id -> index into parts
    std::vector<int> unpierced_links;
};

PartSplit split_at_unpierced_links(const Triangulation& t);

// How an edge relates to the side links of a face, relative to the
// part-tree orientation:
//  - ParentOnly: pierces only the link toward the parent; its endpoint
//    on the face's side is the corner opposite that link (no lifting).
//  - Lineal: pierces the parent link and one child link (passes
//    through the face).
//  - Short: pierces exactly one child link; its other endpoint is the
//    face corner opposite that link.
//  - Bent: pierces both child links.
enum class EdgeClassification { ParentOnly, Lineal, Short, Bent };

struct ClassifiedEdge {
    int face = -1;
    Edge edge{};
    EdgeClassification kind = EdgeClassification::ParentOnly;
};

// Every (face, piercing edge) incidence of the triangulation, in the
// order the decomposition builder processes them.
std::vector<ClassifiedEdge> classify_pierced_edges(const Triangulation& t);

struct TreeDecomposition {
    int n = 0;
    std::vector<std::vector<Vertex>> bags;  // each sorted ascending
    std::vector<std::pair<int, int>> tree_edges;  // (i, j) with i < j, sorted
    int width = 0;
    // One tag per bag: "face:a,b,c", "primary:a,b,c->d,e,f" (copy of
    // face a,b,c placed above child face d,e,f), or "secondary:a,b,c#i".
    std::vector<std::string> provenance;
};

// Builds a tree decomposition of d from a triangulation of its outer
// cycle, of width at most floor((c+5)/2) where c is the triangle
// piercing number: the face bags of the weak dual, split at unpierced
// links, with one primary copy bag per tree edge and l secondary copy
// bags at faces with l bent edges, into which the piercing edges'
// endpoints are lifted bottom-up. Certified during construction
// (every bag stays within (c+7)/2) and checked by validate_td before
// returning; violations throw InternalCertificateError.
TreeDecomposition build_tree_decomposition(const ConvexDrawing& d,
                                           const Triangulation& t);

struct ValidationReport {
    bool ok = true;
    int width = -1;
    std::vector<std::string> issues;
};

// Checks vertex coverage, coverage of exactly the edges of d, per-vertex
// subtree connectivity, and that the bag graph is a tree. Pass an
// outer-cycle-augmented drawing to also require outer-cycle coverage.
// Pure; failures become report entries.
ValidationReport validate_td(const ConvexDrawing& d, const TreeDecomposition& td);

}  // namespace okp
