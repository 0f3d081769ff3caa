#pragma once

#include <vector>

#include "bpk/graph.hpp"
#include "bpk/treewidth.hpp"

namespace bpk {

class RootedTree {
 public:
  // Throws InvalidInput unless `tree` is a tree containing `root`.
  RootedTree(Graph tree, Vertex root);

  const Graph& tree() const { return tree_; }
  Vertex root() const { return root_; }
  Vertex parent(Vertex v) const { return parent_[v]; }  // -1 at the root
  int depth(Vertex v) const { return depth_[v]; }
  int height() const;
  // Minimum eccentricity over all nodes.
  int radius() const;

  // Every node is its own ancestor.
  bool is_ancestor(Vertex a, Vertex x) const;
  bool is_strict_ancestor(Vertex a, Vertex x) const { return a != x && is_ancestor(a, x); }

 private:
  Graph tree_;
  Vertex root_;
  std::vector<Vertex> parent_;
  std::vector<int> depth_;
  std::vector<int> pre_, post_;
};

// B(v) = {v} ∪ {strict ancestors w of v adjacent in h to a descendant of v},
// over the tree's own shape. Throws NotInClosure when some edge of h joins
// two nodes neither of which is an ancestor of the other.
TreeDecomposition closure_decomposition(const RootedTree& t, const Graph& h);

// The closure of t: all ancestor/descendant pairs.
Graph tree_closure(const RootedTree& t);

}  // namespace bpk
