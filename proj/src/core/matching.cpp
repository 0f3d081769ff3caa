#include "bpk/matching.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace bpk {

namespace {

// Compact adjacency over the endpoints touched by an edge subset.
struct LocalGraph {
  std::vector<Vertex> vertices;           // local -> global
  std::vector<std::vector<int>> adj;      // local adjacency
  std::vector<std::vector<EdgeId>> eids;  // aligned edge ids

  LocalGraph(const Graph& g, std::span<const EdgeId> edges) {
    std::vector<int> index(g.num_vertices(), -1);
    for (EdgeId e : edges) {
      for (Vertex x : {g.edge(e).u, g.edge(e).v}) {
        if (index[x] < 0) {
          index[x] = static_cast<int>(vertices.size());
          vertices.push_back(x);
        }
      }
    }
    adj.resize(vertices.size());
    eids.resize(vertices.size());
    for (EdgeId e : edges) {
      int a = index[g.edge(e).u], b = index[g.edge(e).v];
      adj[a].push_back(b);
      eids[a].push_back(e);
      adj[b].push_back(a);
      eids[b].push_back(e);
    }
  }
  int size() const { return static_cast<int>(vertices.size()); }
};

class Blossom {
 public:
  explicit Blossom(const LocalGraph& lg)
      : g_(lg), n_(lg.size()), match_(n_, -1), parent_(n_), base_(n_),
        used_(n_), blossom_(n_) {}

  std::vector<int> run() {
    // Greedy start keeps the augmenting phase short.
    for (int v = 0; v < n_; ++v) {
      if (match_[v] >= 0) continue;
      for (int w : g_.adj[v]) {
        if (match_[w] < 0) {
          match_[v] = w;
          match_[w] = v;
          break;
        }
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (match_[v] >= 0) continue;
      int end = find_path(v);
      while (end >= 0) {
        int pv = parent_[end], ppv = match_[pv];
        match_[end] = pv;
        match_[pv] = end;
        end = ppv;
      }
    }
    return match_;
  }

 private:
  int lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] < 0) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int to : g_.adj[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
          int cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] < 0) {
          parent_[to] = v;
          if (match_[to] < 0) return to;
          used_[match_[to]] = 1;
          queue.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  const LocalGraph& g_;
  int n_;
  std::vector<int> match_, parent_, base_;
  std::vector<char> used_, blossom_;
};

std::vector<EdgeId> all_edges(const Graph& g) {
  std::vector<EdgeId> out(g.num_edges());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

// Bounded search tree for vertex cover on a local graph. Returns true if a
// cover of size <= budget exists and fills `chosen`.
class CoverSearch {
 public:
  explicit CoverSearch(const LocalGraph& lg) : g_(lg), n_(lg.size()) {}

  bool solve(int budget, std::vector<int>& chosen) {
    std::vector<char> removed(n_, 0);
    chosen.clear();
    return search(removed, budget, chosen);
  }

 private:
  int live_degree(const std::vector<char>& removed, int v) const {
    int d = 0;
    for (int w : g_.adj[v])
      if (!removed[w]) ++d;
    return d;
  }

  bool search(std::vector<char>& removed, int budget, std::vector<int>& chosen) {
    // Degree-one rule: taking the neighbour of a pendant vertex is safe.
    for (;;) {
      bool changed = false;
      for (int v = 0; v < n_; ++v) {
        if (removed[v] || live_degree(removed, v) != 1) continue;
        int w = -1;
        for (int x : g_.adj[v])
          if (!removed[x]) w = x;
        if (budget == 0) return false;
        take(removed, chosen, w);
        --budget;
        changed = true;
      }
      if (!changed) break;
    }
    int best = -1, best_deg = 0, edges2 = 0;
    for (int v = 0; v < n_; ++v) {
      if (removed[v]) continue;
      int d = live_degree(removed, v);
      edges2 += d;
      if (d > best_deg) {
        best_deg = d;
        best = v;
      }
    }
    if (best < 0) return true;
    if (budget == 0) return false;
    // Each chosen vertex covers at most best_deg edges.
    if (static_cast<long>(budget) * best_deg < edges2 / 2) return false;

    const std::size_t mark = chosen.size();
    std::vector<char> saved = removed;
    take(removed, chosen, best);
    if (search(removed, budget - 1, chosen)) return true;
    removed = saved;
    chosen.resize(mark);

    std::vector<int> nbrs;
    for (int w : g_.adj[best])
      if (!removed[w]) nbrs.push_back(w);
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    if (static_cast<int>(nbrs.size()) <= budget) {
      for (int w : nbrs) take(removed, chosen, w);
      removed[best] = 1;
      if (search(removed, budget - static_cast<int>(nbrs.size()), chosen))
        return true;
    }
    removed = saved;
    chosen.resize(mark);
    return false;
  }

  static void take(std::vector<char>& removed, std::vector<int>& chosen, int v) {
    removed[v] = 1;
    chosen.push_back(v);
  }

  const LocalGraph& g_;
  int n_;
};

}  // namespace

MatchingResult max_matching(const Graph& g, std::span<const EdgeId> edges) {
  LocalGraph lg(g, edges);
  Blossom solver(lg);
  std::vector<int> mate = solver.run();
  MatchingResult result;
  for (int v = 0; v < lg.size(); ++v) {
    int w = mate[v];
    if (w < 0 || v > w) continue;
    for (std::size_t i = 0; i < lg.adj[v].size(); ++i) {
      if (lg.adj[v][i] == w) {
        result.witness.push_back(lg.eids[v][i]);
        break;
      }
    }
  }
  std::sort(result.witness.begin(), result.witness.end());
  result.size = static_cast<int>(result.witness.size());
  return result;
}

MatchingResult max_matching(const Graph& g) {
  auto e = all_edges(g);
  return max_matching(g, e);
}

VertexCoverResult min_vertex_cover(const Graph& g, std::span<const EdgeId> edges) {
  VertexCoverResult result;
  if (edges.empty()) return result;
  LocalGraph lg(g, edges);
  const int lower = max_matching(g, edges).size;
  CoverSearch search(lg);
  std::vector<int> chosen;
  for (int budget = lower;; ++budget) {
    if (search.solve(budget, chosen)) break;
  }
  for (int v : chosen) result.witness.push_back(lg.vertices[v]);
  std::sort(result.witness.begin(), result.witness.end());
  result.size = static_cast<int>(result.witness.size());
  return result;
}

VertexCoverResult min_vertex_cover(const Graph& g) {
  auto e = all_edges(g);
  return min_vertex_cover(g, e);
}

bool is_matching(const Graph& g, std::span<const EdgeId> edges) {
  std::vector<char> used(g.num_vertices(), 0);
  for (EdgeId e : edges) {
    const Edge& ed = g.edge(e);
    if (used[ed.u] || used[ed.v]) return false;
    used[ed.u] = used[ed.v] = 1;
  }
  return true;
}

bool is_vertex_cover(const Graph& g, std::span<const EdgeId> edges,
                     std::span<const Vertex> cover) {
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : cover) in[v] = 1;
  for (EdgeId e : edges)
    if (!in[g.edge(e).u] && !in[g.edge(e).v]) return false;
  return true;
}

}  // namespace bpk
