#pragma once

#include <string>
#include <vector>

#include "bpk/drawing.hpp"
#include "bpk/forests.hpp"
#include "bpk/report.hpp"

namespace bpk {

// Ordered edge colouring with colours 1..c; the numeric order matters
// downstream.
struct TransparentColouring {
  std::vector<int> colour;  // per edge
  int c = 0;
};

// Colour count is the maximum colour used. Throws InvalidInput on a colour < 1
// or a size mismatch.
TransparentColouring make_colouring(const TopologicalDrawing& d, std::vector<int> colour);

// Lists every crossing whose two edges share a colour.
Report verify_transparent(const TopologicalDrawing& d, const std::vector<int>& colour);

// Greedy colouring of g along its degeneracy order; colours 1..
std::vector<int> greedy_colouring(const Graph& g);

// Greedy colouring of the crossing graph; at most degeneracy(X_G)+1 colours.
TransparentColouring greedy_transparent(const TopologicalDrawing& d);

// Per-vertex colourings of the edges at each vertex so that same-coloured edges
// at a vertex never cross.
struct FanColouring {
  std::vector<int> at_u, at_v;  // colour of edge e at its lower / higher endpoint
  int s = 0;
  int at(const Graph& g, EdgeId e, Vertex v) const {
    return g.edge(e).u == v ? at_u[e] : at_v[e];
  }
};
FanColouring fan_colouring(const TopologicalDrawing& d);

// Star components of a star-forest and which of them cross.
struct StarComponentGraph {
  Graph h;                          // one vertex per star component
  std::vector<int> component;       // aligned with the star-forest's edges
  std::vector<Vertex> centres;      // per component
};
// Throws NotStarForest when sf is not a star-forest with valid centres, and
// AdjacentCrossing when two of its edges sharing a vertex cross.
StarComponentGraph star_component_crossing_graph(const TopologicalDrawing& d,
                                                 const StarForest& sf);

// Colours sf's star components greedily on their crossing graph; result is
// aligned with sf.edges.
std::vector<int> starforest_transparent(const TopologicalDrawing& d, const StarForest& sf);

// Refinement of a colouring into star-forests: class (colour[e], sub[e]) is a
// star-forest in which dominant[e] is the centre of e's star.
struct StarForestCover {
  int s = 0;
  std::vector<int> sub;
  std::vector<Vertex> dominant;
};

Report validate_cover(const Graph& g, const std::vector<int>& colour,
                      const StarForestCover& cover);

// Per colour class: degeneracy forests, each split into two star-forests.
StarForestCover build_star_forest_cover(const Graph& g, const std::vector<int>& colour);

struct ProductColouring {
  TransparentColouring colouring;
  StarForestCover cover;  // s = 1: every colour class is one star-forest
  int fan_s = 0;
  int forests = 0;
  int groups = 0;  // non-empty star-forests after splitting by fan colour
};

// Fan colouring, degeneracy forests split into star-forests and refined by the
// fan colour at the centre, then each star-forest coloured on its component
// crossing graph. Colours list the star-forest groups in descending index
// order, each group's component colours ascending.
ProductColouring product_transparent(const TopologicalDrawing& d);

struct DensityResult {
  int k = 0;
  long edges = 0;
  long vertices = 0;
  std::string bound;  // d_{2k} * |V| as an exact rational
  bool pass = false;
};
// d_j := 3(j+1)^{j+1} / j^j, with d_0 = 3. Checks |E| <= d_{2k}|V| exactly
// for k = matching_planarity(d).
DensityResult density_check(const TopologicalDrawing& d);
std::string density_constant(int j);

// Star-forests of d in which no two edges of one star cross: degeneracy
// forests split in two, each refined by the fan colour at the centre.
std::vector<StarForest> fan_refined_star_forests(const TopologicalDrawing& d);

struct FreenessResult {
  int components = 0;
  int k = 0;
  int clique = 0;
  int clique_limit = 0;    // 12k^2 + 3k + 1
  int biclique = 0;        // largest m with K_{m,m} in H_G
  int biclique_limit = 0;  // 16k^2 + 3k (no K_{limit+1, limit+1})
  bool pass = false;
};
// Exact clique and balanced-biclique search on H_G of the sub-drawing formed
// by sf's edges. Throws CapExceeded above `cap` components.
FreenessResult star_freeness(const TopologicalDrawing& d, const StarForest& sf, int cap = 15);

}  // namespace bpk
