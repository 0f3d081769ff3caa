#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace bpk {

using Vertex = int;
using EdgeId = int;

struct Edge {
  Vertex u;  // u < v
  Vertex v;
};

// Simple undirected graph on vertices 0..n-1. Edge ids are assigned densely in
// insertion order; each edge is stored with its lower endpoint first.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  // Throws InvalidInput on loops, parallel edges or out-of-range endpoints.
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int add_vertex();
  // Throws InvalidInput on loops, parallel edges or bad endpoints.
  EdgeId add_edge(Vertex a, Vertex b);
  // Adds the edge unless it exists or is a loop; returns its id or nullopt for
  // a loop.
  std::optional<EdgeId> add_edge_if_absent(Vertex a, Vertex b);

  int num_vertices() const { return static_cast<int>(nbrs_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::vector<Vertex>& neighbours(Vertex v) const { return nbrs_[v]; }
  // Edge ids aligned with neighbours(v).
  const std::vector<EdgeId>& incident_edges(Vertex v) const { return inc_[v]; }
  int degree(Vertex v) const { return static_cast<int>(nbrs_[v].size()); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;
  bool adjacent(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }

  Vertex other_end(EdgeId e, Vertex v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }

  std::vector<std::pair<int, int>> edge_pairs() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> nbrs_;
  std::vector<std::vector<EdgeId>> inc_;
  std::vector<Edge> edges_;
};

// Breadth-first distances from `source`; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);
// Multi-source variant.
std::vector<int> bfs_distances(const Graph& g, std::span<const Vertex> sources);

// Connected component index per vertex, components numbered by lowest vertex.
std::vector<int> connected_components(const Graph& g, int* count = nullptr);
bool is_connected(const Graph& g);

// Subgraph on the same vertex set keeping only `edges`. The returned map gives,
// for every edge of the subgraph, the id of the source edge.
Graph edge_subgraph(const Graph& g, std::span<const EdgeId> edges,
                    std::vector<EdgeId>* edge_map = nullptr);

// Induced subgraph on `vertices` (relabelled 0..k-1 in the given order).
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// True if the edge set contains no cycle.
bool is_acyclic(const Graph& g, std::span<const EdgeId> edges);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph grid_graph(int rows, int cols);
Graph complete_bipartite(int a, int b);
Graph star_graph(int leaves);

}  // namespace bpk
