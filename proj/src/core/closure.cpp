#include "bpk/closure.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "bpk/error.hpp"

namespace bpk {

RootedTree::RootedTree(Graph tree, Vertex root) : tree_(std::move(tree)), root_(root) {
  const int n = tree_.num_vertices();
  if (root < 0 || root >= n) throw Error(ErrorKind::InvalidInput, "root out of range");
  if (tree_.num_edges() != n - 1 || !is_connected(tree_))
    throw Error(ErrorKind::InvalidInput, "rooted tree input is not a tree");
  parent_.assign(n, -1);
  depth_.assign(n, -1);
  pre_.assign(n, 0);
  post_.assign(n, 0);
  depth_[root] = 0;
  int clock = 0;
  // Iterative DFS for entry/exit times.
  std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
  pre_[root] = clock++;
  while (!stack.empty()) {
    auto& [v, i] = stack.back();
    const auto& nb = tree_.neighbours(v);
    if (i < nb.size()) {
      Vertex w = nb[i++];
      if (w == parent_[v]) continue;
      parent_[w] = v;
      depth_[w] = depth_[v] + 1;
      pre_[w] = clock++;
      stack.push_back({w, 0});
    } else {
      post_[v] = clock++;
      stack.pop_back();
    }
  }
}

int RootedTree::height() const {
  return depth_.empty() ? 0 : *std::max_element(depth_.begin(), depth_.end());
}

int RootedTree::radius() const {
  int best = -1;
  for (Vertex v = 0; v < tree_.num_vertices(); ++v) {
    auto dist = bfs_distances(tree_, v);
    int ecc = *std::max_element(dist.begin(), dist.end());
    if (best < 0 || ecc < best) best = ecc;
  }
  return std::max(best, 0);
}

bool RootedTree::is_ancestor(Vertex a, Vertex x) const {
  return pre_[a] <= pre_[x] && post_[x] <= post_[a];
}

TreeDecomposition closure_decomposition(const RootedTree& t, const Graph& h) {
  const int n = t.tree().num_vertices();
  if (h.num_vertices() != n)
    throw Error(ErrorKind::NotInClosure, "graph and tree differ in vertex count");
  std::vector<std::set<Vertex>> bags(n);
  for (Vertex v = 0; v < n; ++v) bags[v].insert(v);
  for (const Edge& e : h.edges()) {
    Vertex w = e.u, x = e.v;
    if (t.is_strict_ancestor(x, w)) std::swap(w, x);
    if (!t.is_strict_ancestor(w, x))
      throw Error(ErrorKind::NotInClosure, "edge " + std::to_string(e.u) + "-" +
                                               std::to_string(e.v) +
                                               " is not an ancestor pair");
    // w joins the bag of every node on the vertical path from x up to, but
    // excluding, w.
    for (Vertex y = x; y != w; y = t.parent(y)) bags[y].insert(w);
  }
  TreeDecomposition td;
  td.tree = t.tree();
  for (auto& b : bags) td.bags.emplace_back(b.begin(), b.end());
  return td;
}

Graph tree_closure(const RootedTree& t) {
  const int n = t.tree().num_vertices();
  Graph g(n);
  for (Vertex x = 0; x < n; ++x)
    for (Vertex a = t.parent(x); a >= 0; a = t.parent(a)) g.add_edge(a, x);
  return g;
}

}  // namespace bpk
