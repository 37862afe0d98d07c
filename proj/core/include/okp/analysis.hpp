#pragma once

#include "okp/drawing.hpp"
#include "okp/json_io.hpp"

namespace okp {

struct AnalysisOptions {
    int k = -1;              // -1: use the smallest k the drawing admits
    bool min_k_mode = false; // analyze under the min-k-planar regime
    bool checked = false;    // re-derive piercer lists by brute scans
};

// Full pipeline on one drawing: crossing profile, every applicable
// triangulation with its piercing statistics, a certified tree
// decomposition, a balanced separation, and the structural bounds implied
// by k. Inapplicable parts (e.g. a tree decomposition when the drawing is
// not outer k-planar for the requested k) come out as JSON null.
json run_analysis(const ConvexDrawing& d, const AnalysisOptions& opt = {});

}  // namespace okp
