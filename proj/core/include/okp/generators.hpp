#pragma once

#include <cstdint>

#include "okp/drawing.hpp"

namespace okp {

// The m x n stacked prism: an m-row, n-column grid whose columns wrap
// around (row m-1 connects back to row 0), drawn on the convex cycle that
// snakes through the rows: row r occupies positions r*n .. r*n + n - 1,
// reversed on odd rows. In this layout no row edge is ever crossed and
// every column edge is crossed at most 2n - 2 times. Requires even m >= 2
// and n >= 1; duplicate edges in degenerate sizes are suppressed.
ConvexDrawing stacked_prism(int m, int n);

struct RandomDrawing {
    ConvexDrawing drawing;
    int achieved_lcr = 0;  // realized bound: max (or min-pair) crossing count
};

// Outer cycle plus a random maximal set of chords greedily accepted while
// every edge keeps at most k crossings. Deterministic for a fixed seed.
RandomDrawing random_outer_k_planar(int n, int k, std::uint64_t seed);

// Outer cycle plus a planted heavy chord crossed k+1 times (so the result
// is not outer k-planar) and random chords accepted while every crossing
// pair keeps an edge with at most k crossings. Requires k >= 1 and
// n >= 2k + 4. Deterministic for a fixed seed.
RandomDrawing random_outer_min_k_planar(int n, int k, std::uint64_t seed);

}  // namespace okp
