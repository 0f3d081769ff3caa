#pragma once

#include <vector>

#include "bpk/graph.hpp"
#include "bpk/report.hpp"

namespace bpk {

// Branch set of each vertex of the guest graph, as host vertex ids.
struct MinorModel {
  std::vector<std::vector<Vertex>> branch_sets;
};

// Checks the model axioms: non-empty connected branch sets, pairwise disjoint,
// and every guest edge realised by a host edge between the two branch sets.
Report validate_model(const Graph& guest, const Graph& host, const MinorModel& mu);

struct WeakRadius {
  int radius = 0;
  Vertex origin = -1;
};

// min over v in V(h) of max over a in s of dist_h(v, a); lowest origin on ties.
// Throws Unreachable when no vertex reaches all of s, InvalidInput on empty s.
WeakRadius weak_radius(const Graph& h, std::span<const Vertex> s);

}  // namespace bpk
