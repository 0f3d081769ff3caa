#pragma once

#include <span>
#include <vector>

#include "bpk/graph.hpp"
#include "bpk/report.hpp"

namespace bpk {

struct DegeneracyDecomposition {
  // Every vertex has at most `degeneracy` neighbours earlier in `order`.
  std::vector<Vertex> order;
  int degeneracy = 0;
  // Partition of E(g) into at most `degeneracy` forests: each vertex sends its
  // back-edges to distinct forests.
  std::vector<std::vector<EdgeId>> forests;
};

DegeneracyDecomposition degeneracy_decomposition(const Graph& g);

// A star-forest with a fixed centre per edge (the centre of the edge's star).
struct StarForest {
  std::vector<EdgeId> edges;
  std::vector<Vertex> centre;  // aligned with edges
};

// Canonical centres: the degree >= 2 vertex of a component, the lowest id for a
// single-edge component. Throws NotStarForest if some component is no star.
StarForest make_star_forest(const Graph& g, std::span<const EdgeId> edges);

// Every component is a star and each edge's recorded centre is its star's
// centre.
Report validate_star_forest(const Graph& g, const StarForest& sf);

// Splits a forest into two star-forests by rooting each tree at its lowest
// vertex: edges below even-depth parents go to the first part, the rest to the
// second. Throws NotAForest.
std::pair<StarForest, StarForest> star_forest_split(const Graph& g,
                                                    std::span<const EdgeId> forest);

}  // namespace bpk
