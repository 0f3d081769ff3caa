#pragma once

#include <vector>

#include "bpk/drawing.hpp"
#include "bpk/graph_io.hpp"
#include "bpk/report.hpp"

namespace bpk {

// G' with dummy vertex n + i for crossing i. When a non-simple drawing yields
// parallel edges in G' they are stored once.
struct Planarisation {
  Graph g;
  int n_original = 0;
  std::vector<std::vector<Vertex>> paths;  // L_e, from the lower-id endpoint

  bool is_dummy(Vertex x) const { return x >= n_original; }
  int crossing_of(Vertex x) const { return x - n_original; }
};

Planarisation planarise(const TopologicalDrawing& d);

// Subpath L_e[begin..end] between consecutive split points of e.
struct Fragment {
  int begin = 0;
  int end = 0;
};

// Interior L_e[begin..end] of fragment `fragment` of `edge`.
struct Section {
  EdgeId edge = 0;
  int fragment = 0;
  int begin = 0;
  int end = 0;
};

struct LevelsAndFragments {
  std::vector<int> level;                        // per vertex of G'
  std::vector<std::vector<Fragment>> fragments;  // per edge
};

// Originals get level 0, dummies the smaller colour of their two edges.
// Fragments of e split L_e at dummies of level below colour[e]. Throws
// NotTransparent when some crossing is monochromatic.
LevelsAndFragments levels_and_fragments(const TopologicalDrawing& d, const Planarisation& p,
                                        const std::vector<int>& colour);

// Interiors of fragments with at least three vertices, ordered by (edge, position).
std::vector<Section> sections(const Planarisation& p, const LevelsAndFragments& lf);

struct ColouredPlanarisation {
  Planarisation planar;
  std::vector<int> colour;
  int c = 0;
  LevelsAndFragments lf;
  std::vector<Section> sections;  // section i is vertex n + i of G^phi

  Graph g;                                 // G^phi
  std::vector<Vertex> psi;                 // V(G') -> V(G^phi)
  std::vector<int> level;                  // per vertex of G^phi
  std::vector<std::vector<Vertex>> walks;  // W_e

  int n_original() const { return planar.n_original; }
  bool is_original(Vertex x) const { return x < planar.n_original; }
  // Edge whose section x is; -1 for originals.
  EdgeId owner(Vertex x) const {
    return is_original(x) ? -1 : sections[x - planar.n_original].edge;
  }
};

// Contracts every section of G' to a single vertex. Throws NotTransparent.
ColouredPlanarisation coloured_planarisation(const TopologicalDrawing& d,
                                             const std::vector<int>& colour);

// psi is the identity on originals, section preimages partition the dummies,
// levels agree with preimages, and G^phi is exactly the contraction of G'.
Report validate_coloured_planarisation(const TopologicalDrawing& d,
                                       const ColouredPlanarisation& cp);

// The seven structural statements about walks, checked exhaustively:
//   walk.interior      W_uv minus {u, v} holds no original vertex
//   walk.level         every level on W_e is at most colour(e)
//   walk.length        W_e has at most 2(t+1) steps, t = lower-colour crossings of e
//   vertex.owner       each non-original x lies on exactly one W_e with colour(e) = level(x)
//   vertex.crossing    for colour(g) > level(x): x on W_g iff g crosses x's fragment
//   walk.consecutive   no two consecutive vertices of W_e have level colour(e)
//   vertex.distance    every vertex is within c-1 of an original vertex
Report verify_walk_properties(const TopologicalDrawing& d, const ColouredPlanarisation& cp);

// Number of crossings of e with edges of smaller colour.
int lower_crossings(const TopologicalDrawing& d, const std::vector<int>& colour, EdgeId e);

// max over (edge e of colour i, fragment of e, colour j > i) of the matching
// number of colour-j edges crossing the fragment.
int measure_m(const TopologicalDrawing& d, const ColouredPlanarisation& cp);
// max over e of the vertex cover number of smaller-colour edges crossing e.
int measure_k_lower(const TopologicalDrawing& d, const std::vector<int>& colour);

// {psi, levels, walks} sidecar.
Json coloured_planarisation_to_json(const ColouredPlanarisation& cp);
// Vertex labels "id:level" for DOT export.
std::vector<std::string> level_labels(const ColouredPlanarisation& cp);

}  // namespace bpk
