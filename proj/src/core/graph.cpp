#include "bpk/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "bpk/error.hpp"

namespace bpk {

Graph::Graph(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "negative vertex count");
  nbrs_.resize(n);
  inc_.resize(n);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (const auto& [a, b] : edges) g.add_edge(a, b);
  return g;
}

int Graph::add_vertex() {
  nbrs_.emplace_back();
  inc_.emplace_back();
  return num_vertices() - 1;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= num_vertices())
    throw Error(ErrorKind::InvalidInput,
                "vertex " + std::to_string(v) + " out of range");
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= num_vertices() || b >= num_vertices())
    return std::nullopt;
  const auto& nb = nbrs_[a];
  auto it = std::lower_bound(nb.begin(), nb.end(), b);
  if (it == nb.end() || *it != b) return std::nullopt;
  return inc_[a][it - nb.begin()];
}

EdgeId Graph::add_edge(Vertex a, Vertex b) {
  check_vertex(a);
  check_vertex(b);
  if (a == b)
    throw Error(ErrorKind::InvalidInput, "loop at vertex " + std::to_string(a));
  if (find_edge(a, b))
    throw Error(ErrorKind::InvalidInput, "parallel edge " + std::to_string(a) +
                                             "-" + std::to_string(b));
  const EdgeId id = num_edges();
  edges_.push_back({std::min(a, b), std::max(a, b)});
  auto insert = [&](Vertex x, Vertex y) {
    auto& nb = nbrs_[x];
    auto pos = std::lower_bound(nb.begin(), nb.end(), y) - nb.begin();
    nb.insert(nb.begin() + pos, y);
    inc_[x].insert(inc_[x].begin() + pos, id);
  };
  insert(a, b);
  insert(b, a);
  return id;
}

std::optional<EdgeId> Graph::add_edge_if_absent(Vertex a, Vertex b) {
  if (a == b) return std::nullopt;
  if (auto e = find_edge(a, b)) return e;
  return add_edge(a, b);
}

std::vector<std::pair<int, int>> Graph::edge_pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.emplace_back(e.u, e.v);
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices()) return false;
  return a.nbrs_ == b.nbrs_;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  const Vertex s[] = {source};
  return bfs_distances(g, std::span<const Vertex>(s));
}

std::vector<int> bfs_distances(const Graph& g, std::span<const Vertex> sources) {
  std::vector<int> dist(g.num_vertices(), -1);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbours(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> connected_components(const Graph& g, int* count) {
  std::vector<int> comp(g.num_vertices(), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbours(v)) {
        if (comp[w] < 0) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

bool is_connected(const Graph& g) {
  int count = 0;
  connected_components(g, &count);
  return count <= 1;
}

Graph edge_subgraph(const Graph& g, std::span<const EdgeId> edges,
                    std::vector<EdgeId>* edge_map) {
  Graph sub(g.num_vertices());
  if (edge_map) edge_map->clear();
  for (EdgeId e : edges) {
    const Edge& ed = g.edge(e);
    sub.add_edge(ed.u, ed.v);
    if (edge_map) edge_map->push_back(e);
  }
  return sub;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> index(g.num_vertices(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = int(i);
  Graph sub(static_cast<int>(vertices.size()));
  for (const Edge& e : g.edges())
    if (index[e.u] >= 0 && index[e.v] >= 0) sub.add_edge(index[e.u], index[e.v]);
  return sub;
}

namespace {

struct DisjointSets {
  explicit DisjointSets(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<int> parent;
};

}  // namespace

bool is_acyclic(const Graph& g, std::span<const EdgeId> edges) {
  DisjointSets ds(g.num_vertices());
  for (EdgeId e : edges)
    if (!ds.unite(g.edge(e).u, g.edge(e).v)) return false;
  return true;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int a = 0; a + 1 < n; ++a) g.add_edge(a, a + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph grid_graph(int rows, int cols) {
  Graph g(rows * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(r * cols + c, r * cols + c + 1);
      if (r + 1 < rows) g.add_edge(r * cols + c, (r + 1) * cols + c);
    }
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int x = 0; x < a; ++x)
    for (int y = 0; y < b; ++y) g.add_edge(x, a + y);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

}  // namespace bpk
