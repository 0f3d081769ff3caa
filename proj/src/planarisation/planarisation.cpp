#include "bpk/planarisation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "bpk/error.hpp"
#include "bpk/matching.hpp"

namespace bpk {

Planarisation planarise(const TopologicalDrawing& d) {
  const Graph& base = d.base();
  Planarisation p;
  p.n_original = base.num_vertices();
  p.g = Graph(base.num_vertices() + d.num_crossings());
  p.paths.resize(base.num_edges());
  for (EdgeId e = 0; e < base.num_edges(); ++e) {
    auto& path = p.paths[e];
    path.push_back(base.edge(e).u);
    for (int id : d.sequence(e)) path.push_back(p.n_original + id);
    path.push_back(base.edge(e).v);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) p.g.add_edge_if_absent(path[i], path[i + 1]);
  }
  return p;
}

LevelsAndFragments levels_and_fragments(const TopologicalDrawing& d, const Planarisation& p,
                                        const std::vector<int>& colour) {
  LevelsAndFragments out;
  out.level.assign(p.g.num_vertices(), 0);
  for (const Crossing& c : d.crossings()) {
    if (colour[c.edge_a] == colour[c.edge_b])
      throw Error(ErrorKind::NotTransparent, "crossing " + std::to_string(c.id) + " of edges " +
                                                 std::to_string(c.edge_a) + "," +
                                                 std::to_string(c.edge_b) + " is monochromatic");
    out.level[p.n_original + c.id] = std::min(colour[c.edge_a], colour[c.edge_b]);
  }
  out.fragments.resize(p.paths.size());
  for (std::size_t e = 0; e < p.paths.size(); ++e) {
    const auto& path = p.paths[e];
    const int last = static_cast<int>(path.size()) - 1;
    int start = 0;
    for (int i = 1; i < last; ++i)
      if (out.level[path[i]] < colour[e]) {
        out.fragments[e].push_back({start, i});
        start = i;
      }
    out.fragments[e].push_back({start, last});
  }
  return out;
}

std::vector<Section> sections(const Planarisation& p, const LevelsAndFragments& lf) {
  std::vector<Section> out;
  for (std::size_t e = 0; e < p.paths.size(); ++e)
    for (std::size_t f = 0; f < lf.fragments[e].size(); ++f) {
      const Fragment& fr = lf.fragments[e][f];
      if (fr.end - fr.begin >= 2)
        out.push_back({static_cast<EdgeId>(e), static_cast<int>(f), fr.begin + 1, fr.end - 1});
    }
  return out;
}

ColouredPlanarisation coloured_planarisation(const TopologicalDrawing& d,
                                             const std::vector<int>& colour) {
  if (colour.size() != static_cast<std::size_t>(d.base().num_edges()))
    throw Error(ErrorKind::InvalidInput, "colouring has " + std::to_string(colour.size()) +
                                             " entries for " +
                                             std::to_string(d.base().num_edges()) + " edges");
  for (int col : colour)
    if (col < 1) throw Error(ErrorKind::InvalidInput, "colours start at 1");
  ColouredPlanarisation cp;
  cp.planar = planarise(d);
  cp.colour = colour;
  for (int c : colour) cp.c = std::max(cp.c, c);
  cp.lf = levels_and_fragments(d, cp.planar, colour);
  cp.sections = sections(cp.planar, cp.lf);

  const int n = cp.planar.n_original;
  const int np = cp.planar.g.num_vertices();
  cp.psi.assign(np, -1);
  for (Vertex v = 0; v < n; ++v) cp.psi[v] = v;
  for (std::size_t s = 0; s < cp.sections.size(); ++s) {
    const Section& sec = cp.sections[s];
    const auto& path = cp.planar.paths[sec.edge];
    for (int i = sec.begin; i <= sec.end; ++i) {
      if (cp.psi[path[i]] >= 0)
        throw std::logic_error("dummy " + std::to_string(path[i]) + " lies in two sections");
      cp.psi[path[i]] = n + static_cast<Vertex>(s);
    }
  }
  for (Vertex x = 0; x < np; ++x)
    if (cp.psi[x] < 0) throw std::logic_error("dummy " + std::to_string(x) + " in no section");

  cp.g = Graph(n + static_cast<int>(cp.sections.size()));
  for (const Edge& e : cp.planar.g.edges())
    if (cp.psi[e.u] != cp.psi[e.v]) cp.g.add_edge_if_absent(cp.psi[e.u], cp.psi[e.v]);
  cp.level.assign(cp.g.num_vertices(), 0);
  for (std::size_t s = 0; s < cp.sections.size(); ++s)
    cp.level[n + s] = colour[cp.sections[s].edge];
  cp.walks.resize(cp.planar.paths.size());
  for (std::size_t e = 0; e < cp.planar.paths.size(); ++e)
    for (Vertex x : cp.planar.paths[e]) {
      Vertex y = cp.psi[x];
      if (cp.walks[e].empty() || cp.walks[e].back() != y) cp.walks[e].push_back(y);
    }
  return cp;
}

Report validate_coloured_planarisation(const TopologicalDrawing& d,
                                       const ColouredPlanarisation& cp) {
  Report rep;
  const int n = cp.n_original();
  const int np = cp.planar.g.num_vertices();
  if (np != n + d.num_crossings()) rep.add("structure.dummy_count", std::to_string(np));
  if (cp.g.num_vertices() != n + static_cast<int>(cp.sections.size()))
    rep.add("structure.vertex_count", std::to_string(cp.g.num_vertices()));
  for (Vertex v = 0; v < n; ++v)
    if (cp.psi[v] != v) rep.add("structure.psi_original", "vertex " + std::to_string(v));
  std::vector<std::vector<Vertex>> pre(cp.g.num_vertices());
  for (Vertex x = 0; x < np; ++x) pre[cp.psi[x]].push_back(x);
  for (std::size_t s = 0; s < cp.sections.size(); ++s) {
    const Section& sec = cp.sections[s];
    const auto& path = cp.planar.paths[sec.edge];
    std::vector<Vertex> want(path.begin() + sec.begin, path.begin() + sec.end + 1);
    std::sort(want.begin(), want.end());
    const Vertex x = n + static_cast<Vertex>(s);
    if (pre[x] != want) rep.add("structure.preimage", "vertex " + std::to_string(x));
    for (Vertex y : want)
      if (cp.lf.level[y] != cp.level[x])
        rep.add("structure.level", "dummy " + std::to_string(y) + " in vertex " +
                                       std::to_string(x));
    if (cp.level[x] != cp.colour[sec.edge])
      rep.add("structure.level", "vertex " + std::to_string(x));
  }
  // G^phi must be the quotient graph of G'.
  std::set<std::pair<Vertex, Vertex>> quotient;
  for (const Edge& e : cp.planar.g.edges()) {
    Vertex a = cp.psi[e.u], b = cp.psi[e.v];
    if (a != b) quotient.insert({std::min(a, b), std::max(a, b)});
  }
  std::set<std::pair<Vertex, Vertex>> have;
  for (const Edge& e : cp.g.edges()) have.insert({e.u, e.v});
  if (quotient != have) rep.add("structure.quotient", "edge sets differ");
  return rep;
}

int lower_crossings(const TopologicalDrawing& d, const std::vector<int>& colour, EdgeId e) {
  int t = 0;
  for (int id : d.sequence(e)) t += colour[d.partner(id, e)] < colour[e];
  return t;
}

Report verify_walk_properties(const TopologicalDrawing& d, const ColouredPlanarisation& cp) {
  Report rep;
  const Graph& base = d.base();
  const int n = cp.n_original();
  const int nv = cp.g.num_vertices();
  const auto& colour = cp.colour;
  auto walk_name = [](EdgeId e) { return "edge " + std::to_string(e); };

  std::vector<std::vector<char>> on_walk(base.num_edges());
  for (EdgeId e = 0; e < base.num_edges(); ++e) {
    const auto& w = cp.walks[e];
    const Edge& ed = base.edge(e);
    on_walk[e].assign(nv, 0);
    for (Vertex x : w) on_walk[e][x] = 1;
    if (w.front() != ed.u || w.back() != ed.v)
      rep.add("walk.interior", walk_name(e) + " has wrong ends");
    for (Vertex x : w) {
      if (cp.is_original(x) && x != ed.u && x != ed.v)
        rep.add("walk.interior", walk_name(e) + " visits original " + std::to_string(x));
      if (cp.level[x] > colour[e])
        rep.add("walk.level", walk_name(e) + " vertex " + std::to_string(x) + " level " +
                                  std::to_string(cp.level[x]));
    }
    const int t = lower_crossings(d, colour, e);
    const int length = static_cast<int>(w.size()) - 1;
    if (length > 2 * (t + 1))
      rep.add("walk.length", walk_name(e) + " length " + std::to_string(length) + " t " +
                                 std::to_string(t));
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (cp.level[w[i]] == colour[e] && cp.level[w[i + 1]] == colour[e])
        rep.add("walk.consecutive", walk_name(e) + " vertices " + std::to_string(w[i]) + "," +
                                        std::to_string(w[i + 1]));
  }

  for (Vertex x = n; x < nv; ++x) {
    int owners = 0;
    EdgeId owner = -1;
    for (EdgeId e = 0; e < base.num_edges(); ++e)
      if (colour[e] == cp.level[x] && on_walk[e][x]) {
        ++owners;
        owner = e;
      }
    if (owners != 1) {
      rep.add("vertex.owner", "vertex " + std::to_string(x) + " has " +
                                  std::to_string(owners) + " owners");
      continue;
    }
    // L_owner must contain the whole preimage.
    const Section& sec = cp.sections[x - n];
    std::set<Vertex> path(cp.planar.paths[owner].begin(), cp.planar.paths[owner].end());
    const auto& sp = cp.planar.paths[sec.edge];
    for (int i = sec.begin; i <= sec.end; ++i)
      if (!path.count(sp[i])) {
        rep.add("vertex.owner", "vertex " + std::to_string(x) + " preimage leaves L_" +
                                    std::to_string(owner));
        break;
      }
    // Edges crossing the owner's fragment at x: partners at dummies inside it.
    const Fragment& fr = cp.lf.fragments[owner][sec.fragment];
    std::set<EdgeId> crossing_fragment;
    for (int i = fr.begin + 1; i < fr.end; ++i) {
      Vertex dummy = cp.planar.paths[owner][i];
      crossing_fragment.insert(d.partner(cp.planar.crossing_of(dummy), owner));
    }
    const auto crossers = d.crossers(owner);
    for (EdgeId g = 0; g < base.num_edges(); ++g) {
      if (colour[g] <= cp.level[x]) continue;
      const bool on = on_walk[g][x];
      if (on != (crossing_fragment.count(g) > 0))
        rep.add("vertex.crossing", "vertex " + std::to_string(x) + " edge " +
                                       std::to_string(g));
      if (on && !std::binary_search(crossers.begin(), crossers.end(), g))
        rep.add("vertex.crossing", "vertex " + std::to_string(x) + " edge " +
                                       std::to_string(g) + " does not cross its owner");
    }
  }

  std::vector<Vertex> originals(n);
  for (Vertex v = 0; v < n; ++v) originals[v] = v;
  auto dist = bfs_distances(cp.g, originals);
  for (Vertex x = n; x < nv; ++x)
    if (dist[x] < 0 || dist[x] > cp.c - 1)
      rep.add("vertex.distance", "vertex " + std::to_string(x) + " at distance " +
                                     std::to_string(dist[x]));
  return rep;
}

int measure_m(const TopologicalDrawing& d, const ColouredPlanarisation& cp) {
  const Graph& base = d.base();
  int m = 0;
  for (EdgeId e = 0; e < base.num_edges(); ++e) {
    const auto& path = cp.planar.paths[e];
    for (const Fragment& fr : cp.lf.fragments[e]) {
      // Higher-colour crossers of this fragment, grouped by colour.
      std::map<int, std::vector<EdgeId>> by_colour;
      for (int i = fr.begin + 1; i < fr.end; ++i) {
        EdgeId g = d.partner(cp.planar.crossing_of(path[i]), e);
        if (cp.colour[g] > cp.colour[e]) by_colour[cp.colour[g]].push_back(g);
      }
      for (auto& [col, es] : by_colour) {
        std::sort(es.begin(), es.end());
        es.erase(std::unique(es.begin(), es.end()), es.end());
        if (static_cast<int>(es.size()) > m) m = std::max(m, max_matching(base, es).size);
      }
    }
  }
  return m;
}

int measure_k_lower(const TopologicalDrawing& d, const std::vector<int>& colour) {
  int k = 0;
  for (EdgeId e = 0; e < d.base().num_edges(); ++e) {
    std::vector<EdgeId> lower;
    for (EdgeId g : d.crossers(e))
      if (colour[g] < colour[e]) lower.push_back(g);
    if (static_cast<int>(lower.size()) > k)
      k = std::max(k, min_vertex_cover(d.base(), lower).size);
  }
  return k;
}

Json coloured_planarisation_to_json(const ColouredPlanarisation& cp) {
  Json sections = Json::array();
  for (const Section& s : cp.sections)
    sections.push_back({{"edge", s.edge}, {"fragment", s.fragment}, {"begin", s.begin},
                        {"end", s.end}});
  return Json{{"psi", cp.psi},       {"levels", cp.level},       {"walks", cp.walks},
              {"sections", sections}, {"colours", cp.c},         {"n_original", cp.n_original()}};
}

std::vector<std::string> level_labels(const ColouredPlanarisation& cp) {
  std::vector<std::string> out;
  for (Vertex x = 0; x < cp.g.num_vertices(); ++x)
    out.push_back(std::to_string(x) + ":" + std::to_string(cp.level[x]));
  return out;
}

}  // namespace bpk
