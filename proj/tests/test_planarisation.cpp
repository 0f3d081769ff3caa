#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "bpk/colouring.hpp"
#include "bpk/error.hpp"
#include "bpk/families.hpp"
#include "bpk/planarisation.hpp"

using namespace bpk;

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void join(int a, int b) { parent[find(a)] = find(b); }
};

// Contracts G' by merging consecutive dummies on L_e whose levels both equal
// colour(e), then checks the result against cp up to the vertex naming.
bool contraction_matches(const TopologicalDrawing& d, const std::vector<int>& colour,
                         const ColouredPlanarisation& cp) {
  const Graph& g = d.base();
  const int n = g.num_vertices();
  const int np = n + d.num_crossings();
  std::vector<int> level(np, 0);
  for (const Crossing& c : d.crossings())
    level[n + c.id] = std::min(colour[c.edge_a], colour[c.edge_b]);
  std::vector<std::vector<int>> paths(g.num_edges());
  UnionFind uf(np);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    paths[e].push_back(g.edge(e).u);
    for (int id : d.sequence(e)) paths[e].push_back(n + id);
    paths[e].push_back(g.edge(e).v);
    for (std::size_t i = 0; i + 1 < paths[e].size(); ++i) {
      int a = paths[e][i], b = paths[e][i + 1];
      if (a >= n && b >= n && level[a] == colour[e] && level[b] == colour[e]) uf.join(a, b);
    }
  }
  // Class -> cp vertex must be a bijection.
  std::map<int, Vertex> to_cp;
  std::set<Vertex> used;
  for (int x = 0; x < np; ++x) {
    auto [it, fresh] = to_cp.emplace(uf.find(x), cp.psi[x]);
    if (!fresh && it->second != cp.psi[x]) return false;
    if (fresh && !used.insert(cp.psi[x]).second) return false;
  }
  if (static_cast<int>(used.size()) != cp.g.num_vertices()) return false;
  std::set<std::pair<Vertex, Vertex>> want;
  for (const auto& p : paths)
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      Vertex a = to_cp[uf.find(p[i])], b = to_cp[uf.find(p[i + 1])];
      if (a != b) want.insert({std::min(a, b), std::max(a, b)});
    }
  std::set<std::pair<Vertex, Vertex>> have;
  for (const Edge& e : cp.g.edges()) have.insert({e.u, e.v});
  return want == have;
}

std::vector<TopologicalDrawing> sample_drawings() {
  std::vector<TopologicalDrawing> out{crossing_stars(4), k3n(5), k_2k2_n(2, 3), grid_apex(3),
                                      circular_complete_bipartite(2, 5)};
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    out.push_back(random_circular(9, 0.45, seed));
    out.push_back(random_segments(10, 16, seed));
    out.push_back(random_polylines(8, 12, 2, seed));
  }
  return out;
}

}  // namespace

TEST_CASE("planarisation paths and dummies") {
  auto d = crossing_stars(2);
  auto p = planarise(d);
  CHECK(p.n_original == 6);
  CHECK(p.g.num_vertices() == 10);
  // Each of the 4 edges is cut into 3 pieces.
  CHECK(p.g.num_edges() == 12);
  for (EdgeId e = 0; e < d.base().num_edges(); ++e) {
    CHECK(p.paths[e].size() == d.sequence(e).size() + 2);
    CHECK(p.paths[e].front() == d.base().edge(e).u);
  }
}

TEST_CASE("crossing stars coloured planarisation by hand") {
  auto d = crossing_stars(2);
  auto inst = gen_family("crossing_stars", [] {
    FamilyParams p;
    p.n = 2;
    return p;
  }());
  auto cp = coloured_planarisation(inst.drawing, inst.colouring);
  CHECK(cp.c == 2);
  // Each colour-1 edge keeps its two dummies in one section.
  CHECK(cp.sections.size() == 2);
  CHECK(cp.g.num_vertices() == 8);
  for (EdgeId e = 0; e < inst.drawing.base().num_edges(); ++e) {
    if (inst.colouring[e] == 1) {
      CHECK(cp.lf.fragments[e].size() == 1);
      CHECK(cp.walks[e].size() == 3);
    } else {
      CHECK(cp.lf.fragments[e].size() == 3);
      CHECK(cp.walks[e].size() == 4);
    }
  }
  CHECK(measure_m(inst.drawing, cp) == 1);
  CHECK(measure_k_lower(inst.drawing, inst.colouring) == 1);
  CHECK(verify_walk_properties(inst.drawing, cp).ok());
  CHECK(validate_coloured_planarisation(inst.drawing, cp).ok());
  CHECK(d.num_crossings() == 4);
}

TEST_CASE("monochromatic crossing is rejected") {
  auto d = crossing_stars(2);
  std::vector<int> one(d.base().num_edges(), 1);
  CHECK_THROWS_AS(coloured_planarisation(d, one), Error);
  try {
    coloured_planarisation(d, one);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotTransparent);
  }
}

TEST_CASE("planar drawing contracts to itself") {
  auto d = circular_complete_bipartite(1, 6);
  std::vector<int> one(d.base().num_edges(), 1);
  auto cp = coloured_planarisation(d, one);
  CHECK(cp.g.num_vertices() == d.base().num_vertices());
  CHECK(cp.g.num_edges() == d.base().num_edges());
  CHECK(verify_walk_properties(d, cp).ok());
}

TEST_CASE("contraction and walk statements on samples") {
  int checked = 0;
  for (const auto& d : sample_drawings()) {
    std::vector<std::vector<int>> colourings{greedy_transparent(d).colour,
                                             product_transparent(d).colouring.colour};
    for (const auto& colour : colourings) {
      auto cp = coloured_planarisation(d, colour);
      CHECK(contraction_matches(d, colour, cp));
      CHECK(validate_coloured_planarisation(d, cp).ok());
      auto rep = verify_walk_properties(d, cp);
      CHECK_MESSAGE(rep.ok(), (rep.ok() ? "" : rep.violations[0].code + " " +
                                                   rep.violations[0].detail));
      // Every dummy is in exactly the section of its lower-coloured edge.
      for (const Crossing& c : d.crossings()) {
        Vertex x = cp.psi[cp.n_original() + c.id];
        EdgeId lower = colour[c.edge_a] < colour[c.edge_b] ? c.edge_a : c.edge_b;
        CHECK(cp.owner(x) == lower);
      }
      ++checked;
    }
  }
  CHECK(checked == 70);
}

TEST_CASE("walk statements detect corruption") {
  auto inst = gen_family("crossing_stars", FamilyParams{});
  auto cp = coloured_planarisation(inst.drawing, inst.colouring);
  REQUIRE(verify_walk_properties(inst.drawing, cp).ok());

  auto bad = cp;
  EdgeId high = 0;
  while (inst.colouring[high] != 2) ++high;
  // Routing a walk through a foreign original vertex.
  bad.walks[high].insert(bad.walks[high].begin() + 1, bad.walks[high].back() == 0 ? 1 : 0);
  CHECK(verify_walk_properties(inst.drawing, bad).has("walk.interior"));

  bad = cp;
  bad.level[cp.n_original()] = 5;
  CHECK(verify_walk_properties(inst.drawing, bad).has("walk.level"));

  bad = cp;
  auto& w = bad.walks[high];
  w.insert(w.begin() + 1, 12, w[1]);
  CHECK(verify_walk_properties(inst.drawing, bad).has("walk.length"));
  CHECK(verify_walk_properties(inst.drawing, bad).has("walk.consecutive") == false);

  bad = cp;
  // Dropping a section from the walk of a higher edge that crosses it.
  auto& w2 = bad.walks[high];
  w2.erase(w2.begin() + 1);
  CHECK(verify_walk_properties(inst.drawing, bad).has("vertex.crossing"));

  bad = cp;
  EdgeId low = 0;
  while (inst.colouring[low] != 1) ++low;
  bad.walks[low].clear();
  bad.walks[low] = {inst.drawing.base().edge(low).u, inst.drawing.base().edge(low).v};
  CHECK(verify_walk_properties(inst.drawing, bad).has("vertex.owner"));

  bad = cp;
  bad.c = 1;
  CHECK(verify_walk_properties(inst.drawing, bad).has("vertex.distance"));
}

TEST_CASE("sidecar json and labels") {
  auto inst = gen_family("k3n", FamilyParams{});
  auto cp = coloured_planarisation(inst.drawing, inst.colouring);
  auto j = coloured_planarisation_to_json(cp);
  CHECK(j["psi"].size() == cp.psi.size());
  CHECK(j["levels"].size() == static_cast<std::size_t>(cp.g.num_vertices()));
  CHECK(level_labels(cp)[0] == "0:0");
}
