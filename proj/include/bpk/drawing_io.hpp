#pragma once

#include <string>

#include "bpk/drawing.hpp"
#include "bpk/graph_io.hpp"

namespace bpk {

std::string rational_to_string(const mpq_class& q);
// Accepts "p", "p/q" or a JSON integer. Throws InvalidInput.
mpq_class rational_from_json(const Json& j);

// {vertices, edges:[{id,u,v,crossings}], crossings:[{id,ea,pa,eb,pb}],
//  geometry?:{coords, polylines}, circular?:[order]}
Json drawing_to_json(const TopologicalDrawing& d);
// Throws InvalidInput on malformed or inconsistent input.
TopologicalDrawing drawing_from_json(const Json& j);

// Edge colouring sidecar {"<edge id>": colour}.
Json colouring_to_json(const std::vector<int>& colour);
std::vector<int> colouring_from_json(const Json& j, int num_edges);

}  // namespace bpk
