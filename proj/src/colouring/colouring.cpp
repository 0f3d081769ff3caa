#include "bpk/colouring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "bpk/error.hpp"
#include "bpk/recognition.hpp"

namespace bpk {

TransparentColouring make_colouring(const TopologicalDrawing& d, std::vector<int> colour) {
  if (static_cast<int>(colour.size()) != d.base().num_edges())
    throw Error(ErrorKind::InvalidInput, "one colour per edge required");
  TransparentColouring out;
  for (int c : colour) {
    if (c < 1) throw Error(ErrorKind::InvalidInput, "colours start at 1");
    out.c = std::max(out.c, c);
  }
  out.colour = std::move(colour);
  return out;
}

Report verify_transparent(const TopologicalDrawing& d, const std::vector<int>& colour) {
  Report rep;
  if (static_cast<int>(colour.size()) != d.base().num_edges()) {
    rep.add("colour.size", std::to_string(colour.size()) + " colours for " +
                               std::to_string(d.base().num_edges()) + " edges");
    return rep;
  }
  for (EdgeId e = 0; e < d.base().num_edges(); ++e)
    if (colour[e] < 1) rep.add("colour.range", "edge " + std::to_string(e));
  for (const Crossing& c : d.crossings())
    if (colour[c.edge_a] == colour[c.edge_b])
      rep.add("colour.monochromatic", "crossing " + std::to_string(c.id) + " edges " +
                                          std::to_string(c.edge_a) + "," +
                                          std::to_string(c.edge_b) + " colour " +
                                          std::to_string(colour[c.edge_a]));
  return rep;
}

std::vector<int> greedy_colouring(const Graph& g) {
  auto dec = degeneracy_decomposition(g);
  std::vector<int> colour(g.num_vertices(), 0);
  std::vector<int> mark(g.num_vertices() + 2, -1);
  for (Vertex v : dec.order) {
    for (Vertex w : g.neighbours(v))
      if (colour[w] > 0) mark[colour[w]] = v;
    int c = 1;
    while (mark[c] == v) ++c;
    colour[v] = c;
  }
  return colour;
}

TransparentColouring greedy_transparent(const TopologicalDrawing& d) {
  return make_colouring(d, greedy_colouring(crossing_graph(d)));
}

FanColouring fan_colouring(const TopologicalDrawing& d) {
  const Graph& g = d.base();
  Graph x = crossing_graph(d);
  FanColouring out;
  out.at_u.assign(g.num_edges(), 0);
  out.at_v.assign(g.num_edges(), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::vector<EdgeId> inc(g.incident_edges(v).begin(), g.incident_edges(v).end());
    std::sort(inc.begin(), inc.end());
    auto local = greedy_colouring(induced_subgraph(x, inc));
    for (std::size_t i = 0; i < inc.size(); ++i) {
      (g.edge(inc[i]).u == v ? out.at_u : out.at_v)[inc[i]] = local[i];
      out.s = std::max(out.s, local[i]);
    }
  }
  return out;
}

StarComponentGraph star_component_crossing_graph(const TopologicalDrawing& d,
                                                 const StarForest& sf) {
  const Graph& g = d.base();
  Report rep = validate_star_forest(g, sf);
  if (!rep.ok())
    throw Error(ErrorKind::NotStarForest,
                rep.violations[0].code + ": " + rep.violations[0].detail);
  StarComponentGraph out;
  // Components keyed by centre, numbered by first appearance.
  std::map<Vertex, int> by_centre;
  std::vector<int> slot(g.num_edges(), -1);
  for (std::size_t i = 0; i < sf.edges.size(); ++i) {
    auto [it, fresh] = by_centre.try_emplace(sf.centre[i], static_cast<int>(out.centres.size()));
    if (fresh) out.centres.push_back(sf.centre[i]);
    out.component.push_back(it->second);
    slot[sf.edges[i]] = static_cast<int>(i);
  }
  out.h = Graph(static_cast<int>(out.centres.size()));
  for (const Crossing& c : d.crossings()) {
    int a = slot[c.edge_a], b = slot[c.edge_b];
    if (a < 0 || b < 0) continue;
    const Edge &ea = g.edge(c.edge_a), &eb = g.edge(c.edge_b);
    if (ea.u == eb.u || ea.u == eb.v || ea.v == eb.u || ea.v == eb.v)
      throw Error(ErrorKind::AdjacentCrossing, "edges " + std::to_string(c.edge_a) + " and " +
                                                   std::to_string(c.edge_b) +
                                                   " share a vertex and cross");
    out.h.add_edge_if_absent(out.component[a], out.component[b]);
  }
  return out;
}

std::vector<int> starforest_transparent(const TopologicalDrawing& d, const StarForest& sf) {
  auto hg = star_component_crossing_graph(d, sf);
  auto comp_colour = greedy_colouring(hg.h);
  std::vector<int> out(sf.edges.size());
  for (std::size_t i = 0; i < sf.edges.size(); ++i) out[i] = comp_colour[hg.component[i]];
  return out;
}

Report validate_cover(const Graph& g, const std::vector<int>& colour,
                      const StarForestCover& cover) {
  Report rep;
  const int m = g.num_edges();
  if (static_cast<int>(colour.size()) != m || static_cast<int>(cover.sub.size()) != m ||
      static_cast<int>(cover.dominant.size()) != m) {
    rep.add("cover.size", "cover does not match the edge count");
    return rep;
  }
  std::map<std::pair<int, int>, StarForest> classes;
  for (EdgeId e = 0; e < m; ++e) {
    if (cover.sub[e] < 1 || cover.sub[e] > cover.s) {
      rep.add("cover.sub_range", "edge " + std::to_string(e));
      continue;
    }
    if (cover.dominant[e] != g.edge(e).u && cover.dominant[e] != g.edge(e).v) {
      rep.add("cover.dominant", "edge " + std::to_string(e));
      continue;
    }
    auto& sf = classes[{colour[e], cover.sub[e]}];
    sf.edges.push_back(e);
    sf.centre.push_back(cover.dominant[e]);
  }
  for (const auto& [key, sf] : classes) {
    Report r = validate_star_forest(g, sf);
    for (const auto& v : r.violations)
      rep.add("cover." + v.code, "class (" + std::to_string(key.first) + "," +
                                     std::to_string(key.second) + ") " + v.detail);
  }
  return rep;
}

StarForestCover build_star_forest_cover(const Graph& g, const std::vector<int>& colour) {
  const int m = g.num_edges();
  StarForestCover out;
  out.sub.assign(m, 0);
  out.dominant.assign(m, -1);
  std::map<int, std::vector<EdgeId>> classes;
  for (EdgeId e = 0; e < m; ++e) classes[colour[e]].push_back(e);
  for (const auto& [c, edges] : classes) {
    std::vector<EdgeId> map;
    Graph sub = edge_subgraph(g, edges, &map);
    auto dec = degeneracy_decomposition(sub);
    int next = 0;
    for (const auto& forest : dec.forests) {
      auto halves = star_forest_split(sub, forest);
      for (const StarForest* sf : {&halves.first, &halves.second}) {
        if (sf->edges.empty()) continue;
        ++next;
        for (std::size_t i = 0; i < sf->edges.size(); ++i) {
          EdgeId e = map[sf->edges[i]];
          out.sub[e] = next;
          out.dominant[e] = sf->centre[i];
        }
      }
    }
    out.s = std::max(out.s, next);
  }
  return out;
}

ProductColouring product_transparent(const TopologicalDrawing& d) {
  const Graph& g = d.base();
  const int m = g.num_edges();
  ProductColouring out;
  FanColouring fan = fan_colouring(d);
  out.fan_s = fan.s;
  auto dec = degeneracy_decomposition(g);
  out.forests = static_cast<int>(dec.forests.size());

  // Star-forest groups keyed by (forest, half, fan colour at the centre).
  std::map<std::tuple<int, int, int>, StarForest> groups;
  for (int f = 0; f < out.forests; ++f) {
    auto halves = star_forest_split(g, dec.forests[f]);
    int half = 0;
    for (const StarForest* sf : {&halves.first, &halves.second}) {
      for (std::size_t i = 0; i < sf->edges.size(); ++i) {
        EdgeId e = sf->edges[i];
        auto& grp = groups[{f, half, fan.at(g, e, sf->centre[i])}];
        grp.edges.push_back(e);
        grp.centre.push_back(sf->centre[i]);
      }
      ++half;
    }
  }
  out.groups = static_cast<int>(groups.size());

  // Product colour classes, descending group index then ascending component
  // colour.
  std::vector<std::vector<EdgeId>> classes;
  std::vector<Vertex> centre(m, -1);
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
    const StarForest& sf = it->second;
    auto comp = starforest_transparent(d, sf);
    int c = *std::max_element(comp.begin(), comp.end());
    std::size_t base = classes.size();
    classes.resize(base + c);
    for (std::size_t i = 0; i < sf.edges.size(); ++i) {
      classes[base + comp[i] - 1].push_back(sf.edges[i]);
      centre[sf.edges[i]] = sf.centre[i];
    }
  }

  // First-fit merge of classes that never cross each other; each merged
  // colour keeps its classes apart as separate star-forests.
  Graph x = crossing_graph(d);
  std::vector<int> colour(m, 0), sub(m, 0);
  std::vector<std::vector<char>> blocked;  // per merged colour, per edge of X_G
  std::vector<int> members;
  for (const auto& cls : classes) {
    int target = -1;
    for (int c = 0; c < static_cast<int>(blocked.size()) && target < 0; ++c) {
      bool ok = true;
      for (EdgeId e : cls)
        if (blocked[c][e]) {
          ok = false;
          break;
        }
      if (ok) target = c;
    }
    if (target < 0) {
      target = static_cast<int>(blocked.size());
      blocked.emplace_back(m, 0);
      members.push_back(0);
    }
    ++members[target];
    for (EdgeId e : cls) {
      colour[e] = target + 1;
      sub[e] = members[target];
      for (Vertex f : x.neighbours(e)) blocked[target][f] = 1;
    }
  }
  out.colouring = make_colouring(d, colour);
  out.cover.s = members.empty() ? 0 : *std::max_element(members.begin(), members.end());
  out.cover.sub = std::move(sub);
  out.cover.dominant = std::move(centre);
  return out;
}

std::string density_constant(int j) {
  mpz_class num, den;
  mpz_ui_pow_ui(num.get_mpz_t(), j + 1, j + 1);
  mpz_ui_pow_ui(den.get_mpz_t(), j, j);  // 0^0 = 1
  mpq_class q(3 * num, den);
  q.canonicalize();
  return q.get_str();
}

DensityResult density_check(const TopologicalDrawing& d) {
  DensityResult out;
  out.k = matching_planarity(d);
  out.edges = d.base().num_edges();
  out.vertices = d.base().num_vertices();
  mpq_class bound(density_constant(2 * out.k));
  bound *= out.vertices;
  out.bound = bound.get_str();
  out.pass = mpq_class(out.edges) <= bound;
  return out;
}

FreenessResult star_freeness(const TopologicalDrawing& d, const StarForest& sf, int cap) {
  FreenessResult out;
  auto hg = star_component_crossing_graph(d, sf);
  const int n = hg.h.num_vertices();
  out.components = n;
  if (n > cap)
    throw Error(ErrorKind::CapExceeded, std::to_string(n) + " star components exceed cap " +
                                            std::to_string(cap));
  out.k = matching_planarity(sub_drawing(d, sf.edges));
  out.clique = static_cast<int>(max_clique(hg.h).size());
  out.clique_limit = 12 * out.k * out.k + 3 * out.k + 1;
  std::vector<std::uint32_t> nbr(n, 0);
  for (const Edge& e : hg.h.edges()) {
    nbr[e.u] |= 1u << e.v;
    nbr[e.v] |= 1u << e.u;
  }
  for (std::uint32_t a = 1; a < (1u << n); ++a) {
    std::uint32_t common = (1u << n) - 1;
    for (int i = 0; i < n; ++i)
      if (a >> i & 1) common &= nbr[i];
    out.biclique = std::max(out.biclique,
                            std::min(__builtin_popcount(a), __builtin_popcount(common)));
  }
  out.biclique_limit = 16 * out.k * out.k + 3 * out.k;
  out.pass = out.clique <= out.clique_limit && out.biclique <= out.biclique_limit;
  return out;
}

std::vector<StarForest> fan_refined_star_forests(const TopologicalDrawing& d) {
  const Graph& g = d.base();
  auto fans = fan_colouring(d);
  std::vector<StarForest> out;
  for (const auto& forest : degeneracy_decomposition(g).forests) {
    auto halves = star_forest_split(g, forest);
    for (const StarForest* sf : {&halves.first, &halves.second}) {
      std::map<int, StarForest> parts;
      for (std::size_t i = 0; i < sf->edges.size(); ++i) {
        auto& p = parts[fans.at(g, sf->edges[i], sf->centre[i])];
        p.edges.push_back(sf->edges[i]);
        p.centre.push_back(sf->centre[i]);
      }
      for (auto& [col, p] : parts)
        if (!p.edges.empty()) out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace bpk
