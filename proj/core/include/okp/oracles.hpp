#pragma once

#include <string>
#include <vector>

#include "okp/drawing.hpp"

namespace okp {

// Result of an exact brute-force computation. The witness is re-verified
// independently before being returned, so a returned result is certified.
struct OracleResult {
    int value = 0;
    std::vector<std::vector<int>> witness;
    std::string method;
};

// Exact treewidth by dynamic programming over vertex subsets. The witness
// is a single row: an elimination order realizing the value.
// Throws OracleCapError when d has more than `cap` vertices.
OracleResult brute_treewidth(const ConvexDrawing& d, int cap = 14);

// Minimum order of a balanced separation (A, B): A ∪ B = V, no edge between
// A \ B and B \ A, and both |A \ B| and |B \ A| at most 2n/3. Separator
// candidates are enumerated exhaustively. The witness rows are A and B.
OracleResult brute_min_balanced_separation(const ConvexDrawing& d, int cap = 14);

// Exact convex local crossing number: the minimum over all cyclic vertex
// orders of the maximum number of crossings on a single edge. The witness
// is a single row mapping circle positions to vertices.
OracleResult brute_convex_lcr(const ConvexDrawing& d, int cap = 12);

}  // namespace okp
