#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bpk/graph.hpp"
#include "bpk/report.hpp"

namespace bpk {

inline constexpr int kDefaultTreewidthCap = 20;

// Reads BPK_CAP_TW from the environment, falling back to the default.
int treewidth_cap_from_env();

struct TreeDecomposition {
  Graph tree;                              // nodes are bag indices
  std::vector<std::vector<Vertex>> bags;   // each bag sorted

  int width() const;
};

// Checks the three tree-decomposition axioms: the tree is a tree, every edge
// is inside some bag, and every vertex occupies a non-empty connected subtree.
Report validate_tree_decomposition(const Graph& g, const TreeDecomposition& td);

// Decomposition induced by eliminating vertices in `order` (a permutation of
// V(g)). Its width equals the elimination width of the order.
TreeDecomposition decomposition_from_order(const Graph& g,
                                           std::span<const Vertex> order);
int elimination_width(const Graph& g, std::span<const Vertex> order);

struct TreewidthResult {
  int width = -1;
  std::vector<Vertex> order;
  TreeDecomposition cert;
};

// Exact treewidth by dynamic programming over vertex subsets (the set of
// vertices eliminated first). Throws CapExceeded when |V| > cap.
TreewidthResult exact_treewidth(const Graph& g, int cap = kDefaultTreewidthCap);

// Greedy min-fill elimination. Gives an upper bound only.
TreewidthResult min_fill_decomposition(const Graph& g);

// Minor-min-width lower bound: repeatedly contract a minimum-degree vertex into
// its lowest-degree neighbour; the largest minimum degree seen bounds tw.
int minor_min_width(const Graph& g);

// Exact DP when |V| <= cap, else min-fill. `exact` is also set when the
// min-fill width meets minor_min_width.
TreewidthResult best_decomposition(const Graph& g, int cap, bool* exact);

// Lifts each bag B of a decomposition of g to B x {0..c-1} in g ⊠ K_c (vertex
// (x, i) has id x*c + i).
TreeDecomposition lift_decomposition(const TreeDecomposition& td, int c);

// PACE .td text format: "s td <#bags> <width+1> <n>", "b <id> v..." lines and
// tree edges, all 1-based.
void write_pace(std::ostream& out, const TreeDecomposition& td, int n);
TreeDecomposition read_pace(std::istream& in, int* n = nullptr);

}  // namespace bpk
