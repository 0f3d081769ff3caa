#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "bpk/graph.hpp"

namespace bpk {

using Json = nlohmann::ordered_json;

// {"n": n, "edges": [[u, v], ...]} in edge-id order.
Json graph_to_json(const Graph& g);
// Throws InvalidInput on malformed input.
Graph graph_from_json(const Json& j);

// Optional per-vertex labels; empty means the ids.
void write_dot(std::ostream& out, const Graph& g,
               const std::vector<std::string>& labels = {});
void write_graphml(std::ostream& out, const Graph& g);

}  // namespace bpk
