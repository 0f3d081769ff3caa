#include "bpk/recognition.hpp"

#include <algorithm>
#include <map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "bpk/matching.hpp"

namespace bpk {

Graph crossing_graph(const TopologicalDrawing& d) {
  Graph x(d.base().num_edges());
  for (const Crossing& c : d.crossings()) x.add_edge_if_absent(c.edge_a, c.edge_b);
  return x;
}

int matching_planarity(const TopologicalDrawing& d) {
  int k = 0;
  for (EdgeId e = 0; e < d.base().num_edges(); ++e) {
    auto cr = d.crossers(e);
    if (static_cast<int>(cr.size()) > k) k = std::max(k, max_matching(d.base(), cr).size);
  }
  return k;
}

int cover_planarity(const TopologicalDrawing& d) {
  int k = 0;
  for (EdgeId e = 0; e < d.base().num_edges(); ++e) {
    auto cr = d.crossers(e);
    if (static_cast<int>(cr.size()) > k) k = std::max(k, min_vertex_cover(d.base(), cr).size);
  }
  return k;
}

namespace {

struct CliqueSearch {
  const Graph& g;
  std::vector<Vertex> best, current;

  void expand(std::vector<Vertex> p, std::vector<Vertex> x) {
    if (p.empty() && x.empty()) {
      if (current.size() > best.size()) best = current;
      return;
    }
    if (current.size() + p.size() <= best.size()) return;
    // Pivot with the most neighbours in p.
    Vertex pivot = -1;
    int most = -1;
    for (const auto* set : {&p, &x})
      for (Vertex u : *set) {
        int cnt = 0;
        for (Vertex w : p) cnt += g.adjacent(u, w);
        if (cnt > most) {
          most = cnt;
          pivot = u;
        }
      }
    std::vector<Vertex> candidates;
    for (Vertex v : p)
      if (!g.adjacent(pivot, v)) candidates.push_back(v);
    for (Vertex v : candidates) {
      std::vector<Vertex> np, nx;
      for (Vertex w : p)
        if (g.adjacent(v, w)) np.push_back(w);
      for (Vertex w : x)
        if (g.adjacent(v, w)) nx.push_back(w);
      current.push_back(v);
      expand(std::move(np), std::move(nx));
      current.pop_back();
      std::erase(p, v);
      x.push_back(v);
    }
  }
};

}  // namespace

std::vector<Vertex> max_clique(const Graph& g) {
  CliqueSearch s{g, {}, {}};
  std::vector<Vertex> all(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) all[v] = v;
  s.expand(all, {});
  std::sort(s.best.begin(), s.best.end());
  return s.best;
}

FanResult max_crossing_fan(const TopologicalDrawing& d) {
  const Graph& g = d.base();
  Graph x = crossing_graph(d);
  FanResult res;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto& inc = g.incident_edges(v);
    if (static_cast<int>(inc.size()) <= res.largest) continue;
    std::vector<EdgeId> sorted(inc.begin(), inc.end());
    std::sort(sorted.begin(), sorted.end());
    Graph local = induced_subgraph(x, sorted);
    auto clique = max_clique(local);
    if (static_cast<int>(clique.size()) > res.largest) {
      res.largest = static_cast<int>(clique.size());
      res.vertex = v;
      res.witness.clear();
      for (Vertex i : clique) res.witness.push_back(sorted[i]);
    }
  }
  res.t = res.largest + 1;
  return res;
}

DrawingProfile drawing_profile(const TopologicalDrawing& d) {
  const Graph& g = d.base();
  DrawingProfile p;
  p.crossings = d.num_crossings();
  std::map<std::pair<EdgeId, EdgeId>, int> per_pair;
  for (const Crossing& c : d.crossings()) {
    int& cnt = per_pair[{std::min(c.edge_a, c.edge_b), std::max(c.edge_a, c.edge_b)}];
    ++cnt;
    p.per_pair_max = std::max(p.per_pair_max, cnt);
    const Edge &a = g.edge(c.edge_a), &b = g.edge(c.edge_b);
    if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) p.simple = false;
  }
  if (p.per_pair_max > 1) p.simple = false;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    p.max_crossings_per_edge =
        std::max(p.max_crossings_per_edge, static_cast<int>(d.sequence(e).size()));
  for (const auto& [pair, cnt] : per_pair) {
    int lo = static_cast<int>(std::min(d.sequence(pair.first).size(),
                                       d.sequence(pair.second).size()));
    p.min_k_planar = std::max(p.min_k_planar, lo);
  }
  p.matching_k = matching_planarity(d);
  p.cover_k = cover_planarity(d);
  auto fan = max_crossing_fan(d);
  p.largest_fan = fan.largest;
  p.fan_t = fan.t;
  return p;
}

bool is_planar(const Graph& g) {
  using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BG bg(g.num_vertices());
  for (const Edge& e : g.edges()) boost::add_edge(e.u, e.v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace bpk
