#include <doctest.h>

#include "bpk/colouring.hpp"
#include "bpk/error.hpp"
#include "bpk/families.hpp"
#include "bpk/recognition.hpp"

using namespace bpk;

namespace {

std::vector<TopologicalDrawing> sample_drawings() {
  std::vector<TopologicalDrawing> out{crossing_stars(4), k3n(5), k_2k2_n(1, 4), grid_apex(3),
                                      circular_complete_bipartite(2, 5)};
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    out.push_back(random_circular(9, 0.45, seed));
    out.push_back(random_segments(10, 16, seed));
    out.push_back(random_polylines(8, 12, 1, seed));
  }
  return out;
}

Point P(long x, long y) { return {mpq_class(x), mpq_class(y)}; }

}  // namespace

TEST_CASE("greedy transparent colouring") {
  auto planar = circular_complete_bipartite(1, 5);
  CHECK(greedy_transparent(planar).c == 1);
  CHECK(greedy_transparent(crossing_stars(5)).c == 2);
  for (const auto& d : sample_drawings()) {
    auto col = greedy_transparent(d);
    CHECK(verify_transparent(d, col.colour).ok());
    CHECK(col.c <= degeneracy_decomposition(crossing_graph(d)).degeneracy + 1);
    auto prof = drawing_profile(d);
    CHECK(col.c <= prof.max_crossings_per_edge + 1);
  }
}

TEST_CASE("verify_transparent names monochromatic crossings") {
  auto d = crossing_stars(2);
  std::vector<int> one(d.base().num_edges(), 1);
  auto rep = verify_transparent(d, one);
  CHECK(rep.violations.size() == 4);
  CHECK(rep.has("colour.monochromatic"));
  CHECK_THROWS_AS(make_colouring(d, {1}), Error);
}

TEST_CASE("fan colouring") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto d = random_segments(10, 18, seed);
    CHECK(fan_colouring(d).s <= 1);
  }
  // Three edges at vertex 0 bent so that they pairwise cross.
  Graph g = Graph::from_edges(4, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}});
  Geometry geo;
  geo.coords = {P(0, 0), P(10, 0), P(10, 6), P(10, 12)};
  geo.bends = {{P(3, 14)}, {}, {P(7, 3)}};
  auto d = from_polylines(g, geo);
  CHECK(max_crossing_fan(d).largest == 3);
  CHECK(fan_colouring(d).s >= 3);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto p = random_polylines(7, 12, 2, seed);
    CHECK(fan_colouring(p).s >= max_crossing_fan(p).largest);
  }
}

TEST_CASE("star component crossing graph") {
  auto d = crossing_stars(3);
  const Graph& g = d.base();
  std::vector<EdgeId> all(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) all[e] = e;
  auto sf = make_star_forest(g, all);
  auto hg = star_component_crossing_graph(d, sf);
  CHECK(hg.h.num_vertices() == 2);
  CHECK(hg.h.num_edges() == 1);
  auto col = starforest_transparent(d, sf);
  CHECK(verify_transparent(sub_drawing(d, sf.edges), col).ok());

  std::vector<EdgeId> one_star;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (g.edge(e).u == 0) one_star.push_back(e);
  auto single = make_star_forest(g, one_star);
  auto c1 = starforest_transparent(d, single);
  CHECK(*std::max_element(c1.begin(), c1.end()) == 1);

  StarForest broken = sf;
  broken.centre[0] = g.edge(broken.edges[0]).v;
  CHECK_THROWS_AS(star_component_crossing_graph(d, broken), Error);
}

TEST_CASE("adjacent crossings are rejected in star-forests") {
  Graph g = Graph::from_edges(3, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
  Geometry geo;
  geo.coords = {P(0, 0), P(10, 0), P(10, 5)};
  geo.bends = {{P(5, 8)}, {}};
  auto d = from_polylines(g, geo);
  REQUIRE(d.num_crossings() == 1);
  std::vector<EdgeId> both{0, 1};
  auto sf = make_star_forest(g, both);
  try {
    star_component_crossing_graph(d, sf);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AdjacentCrossing);
  }
}

TEST_CASE("product colouring") {
  auto planar = circular_complete_bipartite(1, 6);
  CHECK(product_transparent(planar).colouring.c == 1);
  for (const auto& d : sample_drawings()) {
    auto pc = product_transparent(d);
    CHECK(verify_transparent(d, pc.colouring.colour).ok());
    CHECK(validate_cover(d.base(), pc.colouring.colour, pc.cover).ok());
    // Within a refined class no two edges at a common vertex cross.
    const Graph& g = d.base();
    for (const Crossing& c : d.crossings()) {
      bool same = pc.colouring.colour[c.edge_a] == pc.colouring.colour[c.edge_b] &&
                  pc.cover.sub[c.edge_a] == pc.cover.sub[c.edge_b];
      CHECK_FALSE(same);
    }
    (void)g;
  }
}

TEST_CASE("star-forest cover of a greedy colouring") {
  for (const auto& d : sample_drawings()) {
    auto col = greedy_transparent(d);
    auto cover = build_star_forest_cover(d.base(), col.colour);
    CHECK(validate_cover(d.base(), col.colour, cover).ok());
    CHECK(cover.s <= 10);
  }
  auto d = crossing_stars(2);
  std::vector<int> col{1, 1, 2, 2};
  auto cover = build_star_forest_cover(d.base(), col);
  cover.dominant[0] = cover.dominant[0] == 0 ? 1 : 0;
  CHECK_FALSE(validate_cover(d.base(), col, cover).ok());
}

TEST_CASE("density") {
  CHECK(density_constant(0) == "3");
  CHECK(density_constant(1) == "12");
  CHECK(density_constant(2) == "81/4");
  for (const auto& d : sample_drawings()) CHECK(density_check(d).pass);
}

TEST_CASE("free-ness of star component graphs") {
  auto d = crossing_stars(4);
  const Graph& g = d.base();
  std::vector<EdgeId> all(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) all[e] = e;
  auto res = star_freeness(d, make_star_forest(g, all));
  CHECK(res.k == 1);
  CHECK(res.clique == 2);
  CHECK(res.biclique == 1);
  CHECK(res.clique_limit == 16);
  CHECK(res.pass);
}

TEST_CASE("fan-refined star forests partition the edges") {
  for (const auto& d : sample_drawings()) {
    auto forests = fan_refined_star_forests(d);
    std::vector<int> seen(d.base().num_edges(), 0);
    for (const auto& sf : forests) {
      CHECK(validate_star_forest(d.base(), sf).ok());
      for (EdgeId e : sf.edges) ++seen[e];
      // No two edges of one star cross.
      CHECK_NOTHROW(star_component_crossing_graph(d, sf));
    }
    for (int s : seen) CHECK(s == 1);
  }
}
