#include "bpk/forests.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "bpk/error.hpp"

namespace bpk {

DegeneracyDecomposition degeneracy_decomposition(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<Vertex> removal;
  removal.reserve(n);
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
    removed[best] = 1;
    removal.push_back(best);
    for (Vertex w : g.neighbours(best))
      if (!removed[w]) --deg[w];
  }
  DegeneracyDecomposition out;
  out.order.assign(removal.rbegin(), removal.rend());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[out.order[i]] = i;
  for (Vertex v : out.order) {
    int slot = 0;
    const auto& nb = g.neighbours(v);
    const auto& inc = g.incident_edges(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (pos[nb[i]] >= pos[v]) continue;
      if (static_cast<int>(out.forests.size()) <= slot) out.forests.emplace_back();
      out.forests[slot++].push_back(inc[i]);
    }
    out.degeneracy = std::max(out.degeneracy, slot);
  }
  for (auto& f : out.forests) std::sort(f.begin(), f.end());
  return out;
}

namespace {

struct Components {
  std::vector<int> root;  // per vertex
  explicit Components(int n) : root(n) { std::iota(root.begin(), root.end(), 0); }
  int find(int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) root[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

StarForest make_star_forest(const Graph& g, std::span<const EdgeId> edges) {
  Components comp(g.num_vertices());
  std::map<Vertex, int> degree;
  for (EdgeId e : edges) {
    comp.unite(g.edge(e).u, g.edge(e).v);
    ++degree[g.edge(e).u];
    ++degree[g.edge(e).v];
  }
  std::map<int, std::vector<EdgeId>> by_comp;
  for (EdgeId e : edges) by_comp[comp.find(g.edge(e).u)].push_back(e);
  std::map<int, Vertex> centre_of;
  for (const auto& [c, es] : by_comp) {
    if (es.size() == 1) {
      centre_of[c] = g.edge(es[0]).u;
      continue;
    }
    Vertex centre = -1;
    for (EdgeId e : es)
      for (Vertex x : {g.edge(e).u, g.edge(e).v})
        if (degree[x] >= 2) {
          if (centre >= 0 && centre != x)
            throw Error(ErrorKind::NotStarForest,
                        "component containing edge " + std::to_string(es[0]) +
                            " is not a star");
          centre = x;
        }
    if (centre < 0 || degree[centre] != static_cast<int>(es.size()))
      throw Error(ErrorKind::NotStarForest, "component containing edge " +
                                                std::to_string(es[0]) +
                                                " is not a star");
    centre_of[c] = centre;
  }
  StarForest sf;
  sf.edges.assign(edges.begin(), edges.end());
  std::sort(sf.edges.begin(), sf.edges.end());
  for (EdgeId e : sf.edges) sf.centre.push_back(centre_of[comp.find(g.edge(e).u)]);
  return sf;
}

Report validate_star_forest(const Graph& g, const StarForest& sf) {
  Report report;
  if (sf.edges.size() != sf.centre.size()) {
    report.add("star.centre_count", "edges and centres differ in length");
    return report;
  }
  StarForest canonical;
  try {
    canonical = make_star_forest(g, sf.edges);
  } catch (const Error& err) {
    report.add("star.not_star_forest", err.what());
    return report;
  }
  std::map<EdgeId, Vertex> want;
  for (std::size_t i = 0; i < canonical.edges.size(); ++i)
    want[canonical.edges[i]] = canonical.centre[i];
  // Any endpoint may serve as centre of a single-edge star.
  std::map<Vertex, int> deg;
  for (EdgeId e : sf.edges) {
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  for (std::size_t i = 0; i < sf.edges.size(); ++i) {
    EdgeId e = sf.edges[i];
    Vertex c = sf.centre[i];
    const Edge& ed = g.edge(e);
    if (c != ed.u && c != ed.v) {
      report.add("star.centre_not_endpoint", "edge " + std::to_string(e));
      continue;
    }
    bool single = deg[ed.u] == 1 && deg[ed.v] == 1;
    if (!single && want[e] != c)
      report.add("star.wrong_centre", "edge " + std::to_string(e));
  }
  return report;
}

std::pair<StarForest, StarForest> star_forest_split(const Graph& g,
                                                    std::span<const EdgeId> forest) {
  if (!is_acyclic(g, forest))
    throw Error(ErrorKind::NotAForest, "edge set contains a cycle");
  const int n = g.num_vertices();
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> adj(n);
  for (EdgeId e : forest) {
    adj[g.edge(e).u].push_back({g.edge(e).v, e});
    adj[g.edge(e).v].push_back({g.edge(e).u, e});
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  std::vector<int> depth(n, -1);
  std::vector<EdgeId> first, second;
  for (Vertex root = 0; root < n; ++root) {
    if (depth[root] >= 0 || adj[root].empty()) continue;
    depth[root] = 0;
    std::vector<Vertex> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex p = queue[head];
      for (const auto& [c, e] : adj[p]) {
        if (depth[c] >= 0) continue;
        depth[c] = depth[p] + 1;
        (depth[p] % 2 == 0 ? first : second).push_back(e);
        queue.push_back(c);
      }
    }
  }
  return {make_star_forest(g, first), make_star_forest(g, second)};
}

}  // namespace bpk
