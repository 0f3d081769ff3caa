#pragma once

#include "bpk/drawing.hpp"

namespace bpk {

// X_G: one vertex per edge of the drawing, adjacent when they cross.
Graph crossing_graph(const TopologicalDrawing& d);

// max over edges e of the matching number of the edges crossing e.
int matching_planarity(const TopologicalDrawing& d);
// max over edges e of the vertex cover number of the edges crossing e.
int cover_planarity(const TopologicalDrawing& d);

struct FanResult {
  int largest = 0;  // largest set of pairwise crossing edges at one vertex
  int t = 1;        // smallest fan size that does not occur
  Vertex vertex = -1;
  std::vector<EdgeId> witness;
};
FanResult max_crossing_fan(const TopologicalDrawing& d);

// Maximum clique of g by Bron-Kerbosch with pivoting; sorted vertices.
std::vector<Vertex> max_clique(const Graph& g);

struct DrawingProfile {
  bool simple = true;
  int crossings = 0;
  int max_crossings_per_edge = 0;
  int per_pair_max = 0;
  int min_k_planar = 0;
  int matching_k = 0;
  int cover_k = 0;
  int largest_fan = 0;
  int fan_t = 1;
};
DrawingProfile drawing_profile(const TopologicalDrawing& d);

// Boyer-Myrvold planarity test.
bool is_planar(const Graph& g);

}  // namespace bpk
