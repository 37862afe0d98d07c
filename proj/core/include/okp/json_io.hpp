#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "okp/drawing.hpp"
#include "okp/oracles.hpp"
#include "okp/separation.hpp"
#include "okp/tree_decomposition.hpp"
#include "okp/triangulation.hpp"

namespace okp {

using json = nlohmann::ordered_json;

// Parse helpers; malformed input raises InvalidInputError.
json parse_json_text(const std::string& text);
json parse_json_file(const std::string& path);

// {"n": ..., "edges": [[a, b], ...]}
json to_json(const ConvexDrawing& d);
ConvexDrawing drawing_from_json(const json& j);

// {"n", "inner_links": [{"link": [u,v], "piercers": [[a,b], ...]}, ...],
//  "edge_pn", "triangle_pn", "trace": [{"link", "case", "split",
//  "new_links", "piercing"}, ...]}
json to_json(const Triangulation& t);

// Rebuilds the triangulation from the stored links against d (the trace is
// not replayed) and checks the stored piercing numbers.
Triangulation triangulation_from_json(const ConvexDrawing& d, const json& j);

// {"bags": [[...], ...], "tree": [[i, j], ...], "width", "provenance"}
json to_json(const TreeDecomposition& td);
TreeDecomposition td_from_json(const json& j);

// {"A": [...], "B": [...], "order", "balance"}
json to_json(const Separation& s);
Separation separation_from_json(const json& j);

// {"value", "witness", "method"}
json to_json(const OracleResult& r);

}  // namespace okp
