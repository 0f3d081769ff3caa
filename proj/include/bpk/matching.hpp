#pragma once

#include <span>
#include <vector>

#include "bpk/graph.hpp"

namespace bpk {

struct MatchingResult {
  int size = 0;
  std::vector<EdgeId> witness;  // sorted edge ids
};

struct VertexCoverResult {
  int size = 0;
  std::vector<Vertex> witness;  // sorted vertices
};

// Maximum matching inside the edge subset `edges` of `g`, by Edmonds' blossom
// algorithm on the subgraph the edges induce.
MatchingResult max_matching(const Graph& g, std::span<const EdgeId> edges);
MatchingResult max_matching(const Graph& g);

// Exact minimum vertex cover of `edges`, by a bounded search tree that
// branches on a maximum-degree vertex.
VertexCoverResult min_vertex_cover(const Graph& g, std::span<const EdgeId> edges);
VertexCoverResult min_vertex_cover(const Graph& g);

bool is_matching(const Graph& g, std::span<const EdgeId> edges);
bool is_vertex_cover(const Graph& g, std::span<const EdgeId> edges,
                     std::span<const Vertex> cover);

}  // namespace bpk
