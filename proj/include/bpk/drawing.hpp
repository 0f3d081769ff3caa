#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "bpk/graph.hpp"
#include "bpk/report.hpp"

namespace bpk {

// One crossing point of two edges. pos_a is the 0-based index of this crossing
// along edge_a, walking from edge_a's lower-id endpoint; likewise pos_b.
struct Crossing {
  int id = 0;
  EdgeId edge_a = 0;
  int pos_a = 0;
  EdgeId edge_b = 0;
  int pos_b = 0;
};

struct Point {
  mpq_class x, y;
  friend bool operator==(const Point&, const Point&) = default;
};

// Vertex coordinates and, per edge, the interior bend points listed from the
// lower-id endpoint.
struct Geometry {
  std::vector<Point> coords;
  std::vector<std::vector<Point>> bends;
};

// Checks ids are dense, positions are consistent and every edge's positions
// form 0..len-1.
Report validate_crossings(const Graph& base, const std::vector<Crossing>& crossings);

// Combinatorial drawing: a graph plus per-edge ordered crossing sequences.
class TopologicalDrawing {
 public:
  TopologicalDrawing() = default;
  // Throws InvalidInput when validate_crossings fails.
  TopologicalDrawing(Graph base, std::vector<Crossing> crossings);

  // Crossing i joins pairs[i]; sequences[e] lists the crossing ids along e.
  static TopologicalDrawing from_sequences(
      Graph base, const std::vector<std::pair<EdgeId, EdgeId>>& pairs,
      const std::vector<std::vector<int>>& sequences);

  const Graph& base() const { return base_; }
  int num_crossings() const { return static_cast<int>(crossings_.size()); }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const Crossing& crossing(int id) const { return crossings_[id]; }
  const std::vector<int>& sequence(EdgeId e) const { return sequences_[e]; }
  EdgeId partner(int crossing, EdgeId e) const {
    const Crossing& c = crossings_[crossing];
    return c.edge_a == e ? c.edge_b : c.edge_a;
  }
  // Distinct edges crossing e, sorted.
  std::vector<EdgeId> crossers(EdgeId e) const;

  const std::optional<Geometry>& geometry() const { return geometry_; }
  void set_geometry(Geometry g) { geometry_ = std::move(g); }
  // Cyclic vertex order for drawings with all vertices on a circle.
  const std::optional<std::vector<Vertex>>& circular_order() const { return circular_; }
  void set_circular_order(std::vector<Vertex> order) { circular_ = std::move(order); }

 private:
  Graph base_;
  std::vector<Crossing> crossings_;
  std::vector<std::vector<int>> sequences_;
  std::optional<Geometry> geometry_;
  std::optional<std::vector<Vertex>> circular_;
};

// Straight/polyline drawing from exact coordinates. Throws DegeneratePosition
// (naming the offending ids) on touching curves, a vertex inside an edge,
// overlapping or zero-length segments, self-intersecting edges, coincident
// vertices or three curves through one point; InvalidInput on size mismatch.
TopologicalDrawing from_polylines(const Graph& base, Geometry geometry);

struct CircularSpec {
  int n = 0;
  std::vector<std::pair<int, int>> chords;
};

// Vertex i sits at the rational circle point with tangent half-angle i.
// Throws DuplicateChord, or InvalidInput for bad indices or loops.
TopologicalDrawing circular_drawing(const CircularSpec& spec);

// True when chord {a,b} and {c,d} have strictly interleaving endpoints in the
// cyclic order given by `position`.
bool chords_interleave(const std::vector<int>& position, Vertex a, Vertex b,
                       Vertex c, Vertex d);

}  // namespace bpk

namespace bpk {

// Restriction of d to `edges` (kept in the given order, renumbered 0..k-1) on
// the same vertex set. `edge_map`, when given, receives the source edge ids.
TopologicalDrawing sub_drawing(const TopologicalDrawing& d, std::span<const EdgeId> edges,
                               std::vector<EdgeId>* edge_map = nullptr);

}  // namespace bpk
