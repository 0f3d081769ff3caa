#pragma once

#include "bpk/graph.hpp"

namespace bpk {

// G ⊠ H with vertex (a, x) numbered a * |V(H)| + x.
Graph strong_product(const Graph& a, const Graph& b);

// G^t: same vertices, uv an edge iff 0 < dist(u, v) <= t.
Graph graph_power(const Graph& g, int t);

}  // namespace bpk
