#pragma once

#include <vector>

#include "okp/tree_decomposition.hpp"
#include "okp/triangulation.hpp"

namespace okp {

// A separation (A, B) of the drawn graph: A ∪ B covers every vertex and no
// edge runs between A \ B and B \ A. The separator is A ∩ B.
struct Separation {
    std::vector<Vertex> a;  // sorted
    std::vector<Vertex> b;  // sorted
    int order = 0;          // |A ∩ B|
    double balance = 0.0;   // max(|A \ B|, |B \ A|) / n
};

// The face whose removal from the weak dual leaves components of at most
// half the faces each; ties go to the smallest sorted corner triple.
int centroid_triangle(const Triangulation& t);

// Balanced separation read off a triangulation: take the largest of the
// three vertex regions around the centroid triangle as A \ B and cut along
// that region's bounding link, adding the far endpoints of its piercers to
// the separator. Both shores keep at most 2n/3 private vertices and the
// separator has at most (max piercing) + 2 vertices.
Separation build_separation(const ConvexDrawing& d, const Triangulation& t);

// Checks coverage, that no edge of d runs between the two private shores,
// and the stored order and balance. Pass an outer-cycle-augmented drawing
// to also forbid cuts through the outer cycle. The report's width field is
// unused and stays -1.
ValidationReport validate_separation(const ConvexDrawing& d, const Separation& s);

}  // namespace okp
