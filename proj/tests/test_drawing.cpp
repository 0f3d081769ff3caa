#include <doctest.h>

#include <random>

#include "bpk/drawing_io.hpp"
#include "bpk/error.hpp"
#include "bpk/families.hpp"
#include "bpk/matching.hpp"
#include "bpk/recognition.hpp"
#include "oracles.hpp"

using namespace bpk;

namespace {

Point P(long x, long y) { return {mpq_class(x), mpq_class(y)}; }

Geometry straight(int m, std::vector<Point> coords) {
  Geometry g;
  g.coords = std::move(coords);
  g.bends.assign(m, {});
  return g;
}

Graph pairs(int n, std::vector<std::pair<int, int>> es) {
  return Graph::from_edges(n, es);
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("straight segments") {
  Graph g = pairs(4, {{0, 1}, {2, 3}});
  auto apart = from_polylines(g, straight(2, {P(0, 0), P(1, 0), P(0, 1), P(1, 1)}));
  CHECK(apart.num_crossings() == 0);
  auto x = from_polylines(g, straight(2, {P(0, 0), P(2, 2), P(0, 2), P(2, 0)}));
  CHECK(x.num_crossings() == 1);
  CHECK(x.crossing(0).pos_a == 0);
  CHECK(x.crossing(0).pos_b == 0);
}

TEST_CASE("degenerate positions are rejected") {
  Graph g = pairs(4, {{0, 1}, {2, 3}});
  auto degenerate = [&](std::vector<Point> pts) {
    return kind_of([&] { from_polylines(g, straight(2, pts)); });
  };
  // T-junction: vertex 2 on edge 0-1.
  CHECK(degenerate({P(0, 0), P(2, 0), P(1, 0), P(1, 1)}) == ErrorKind::DegeneratePosition);
  // Collinear overlap.
  CHECK(degenerate({P(0, 0), P(2, 0), P(1, 0), P(3, 0)}) == ErrorKind::DegeneratePosition);
  // Coincident vertices.
  CHECK(degenerate({P(0, 0), P(2, 0), P(0, 0), P(3, 3)}) == ErrorKind::DegeneratePosition);

  // Three segments through one point.
  Graph three = pairs(6, {{0, 1}, {2, 3}, {4, 5}});
  CHECK(kind_of([&] {
          from_polylines(three, straight(3, {P(-1, 0), P(1, 0), P(0, -1), P(0, 1), P(-1, -1),
                                             P(1, 1)}));
        }) == ErrorKind::DegeneratePosition);

  // Bend touching another edge.
  Geometry bend = straight(2, {P(0, 0), P(4, 0), P(0, 2), P(4, 2)});
  bend.bends[1] = {P(2, 0)};
  CHECK(kind_of([&] { from_polylines(g, bend); }) == ErrorKind::DegeneratePosition);

  // Self-crossing polyline.
  Graph one = pairs(2, {{0, 1}});
  Geometry loop;
  loop.coords = {P(0, 0), P(4, 0)};
  loop.bends = {{P(2, 2), P(3, -1), P(1, -1), P(2, 3)}};
  CHECK(kind_of([&] { from_polylines(one, loop); }) == ErrorKind::DegeneratePosition);

  // Zero-length segment.
  Geometry zero = straight(1, {P(0, 0), P(4, 0)});
  zero.bends[0] = {P(1, 1), P(1, 1)};
  CHECK(kind_of([&] { from_polylines(one, zero); }) == ErrorKind::DegeneratePosition);

  // Shared endpoints are fine.
  Graph path = pairs(3, {{0, 1}, {1, 2}});
  CHECK(from_polylines(path, straight(2, {P(0, 0), P(1, 0), P(2, 0)})).num_crossings() == 0);
}

TEST_CASE("polylines may cross twice and are ordered along the edge") {
  Graph g = pairs(4, {{0, 1}, {2, 3}});
  Geometry geo = straight(2, {P(0, 0), P(6, 0), P(1, -1), P(5, -1)});
  geo.bends[1] = {P(2, 2), P(4, 2)};
  auto d = from_polylines(g, geo);
  CHECK(d.num_crossings() == 2);
  // Along edge 0 (left to right) the crossing near x=1.5 comes first.
  CHECK(d.sequence(0).size() == 2);
  CHECK(d.sequence(1).size() == 2);
  auto prof = drawing_profile(d);
  CHECK_FALSE(prof.simple);
  CHECK(prof.per_pair_max == 2);
}

TEST_CASE("random segments agree with the orientation oracle") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto d = random_segments(9, 14, seed);
    std::vector<oracle::IPoint> at;
    for (const auto& p : d.geometry()->coords)
      at.push_back({p.x.get_num().get_si(), p.y.get_num().get_si()});
    CHECK(oracle::drawing_pairs(d) == oracle::segment_crossings(d.base(), at));
    CHECK(drawing_profile(d).per_pair_max <= 1);
  }
}

TEST_CASE("circular drawings follow chord interleaving") {
  CircularSpec four{4, {{0, 2}, {1, 3}}};
  CHECK(circular_drawing(four).num_crossings() == 1);
  CircularSpec dup{4, {{0, 2}, {2, 0}}};
  CHECK(kind_of([&] { circular_drawing(dup); }) == ErrorKind::DuplicateChord);

  auto k25 = circular_complete_bipartite(2, 5);
  const Graph& g = k25.base();
  // a = 0, v_1..v_5 = 1..5, b = 6.
  auto av5 = *g.find_edge(0, 5);
  std::vector<EdgeId> expect;
  for (int i = 1; i <= 4; ++i) expect.push_back(*g.find_edge(i, 6));
  std::sort(expect.begin(), expect.end());
  CHECK(k25.crossers(av5) == expect);

  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto d = random_circular(9, 0.4, seed);
    CHECK(oracle::drawing_pairs(d) == oracle::interleaving_pairs(d.base()));
  }
}

TEST_CASE("crossing graph of crossing stars is K_{n,n}") {
  for (int n = 2; n <= 5; ++n) {
    auto d = crossing_stars(n);
    Graph x = crossing_graph(d);
    CHECK(x.num_edges() == n * n);
    for (const Edge& e : x.edges()) {
      const Edge &a = d.base().edge(e.u), &b = d.base().edge(e.v);
      CHECK(a.u != b.u);
    }
    CHECK(matching_planarity(d) == 1);
    auto prof = drawing_profile(d);
    CHECK(prof.max_crossings_per_edge == n);
    CHECK(prof.simple);
  }
}

TEST_CASE("K_{3,n} and K_{2k+2,n} families") {
  for (int n = 3; n <= 8; ++n) {
    auto d = k3n(n);
    CHECK(matching_planarity(d) == 1);
    CHECK(cover_planarity(d) == 1);
    CHECK(drawing_profile(d).max_crossings_per_edge == n - 1);
  }
  for (int k = 0; k <= 2; ++k) {
    auto d = k_2k2_n(k, k + 3);
    CHECK(cover_planarity(d) == k);
    CHECK(matching_planarity(d) == k);
  }
}

TEST_CASE("planar drawings report zero crossing parameters") {
  auto d = circular_complete_bipartite(1, 6);
  auto p = drawing_profile(d);
  CHECK(p.crossings == 0);
  CHECK(p.matching_k == 0);
  CHECK(p.cover_k == 0);
  CHECK(p.min_k_planar == 0);
  CHECK(p.largest_fan == 1);
  CHECK(p.fan_t == 2);
  CHECK(is_planar(d.base()));
  CHECK_FALSE(is_planar(complete_graph(5)));
}

TEST_CASE("crossing fans against exhaustive search") {
  int nonsimple = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto d = random_polylines(7, 12, 2, seed);
    auto fan = max_crossing_fan(d);
    CHECK(fan.largest == oracle::brute_force_fan(d));
    CHECK(fan.t == fan.largest + 1);
    nonsimple += !drawing_profile(d).simple;
    auto p = drawing_profile(d);
    CHECK(p.matching_k <= p.cover_k);
    CHECK(p.cover_k <= 2 * p.matching_k);
    CHECK(p.matching_k <= p.max_crossings_per_edge);
  }
  CHECK(nonsimple > 0);
}

TEST_CASE("drawing json round trip") {
  for (auto d : {crossing_stars(3), random_circular(7, 0.5, 3), random_polylines(6, 8, 1, 2)}) {
    Json j = drawing_to_json(d);
    auto back = drawing_from_json(Json::parse(j.dump()));
    CHECK(drawing_to_json(back) == j);
  }
  Json bad = drawing_to_json(crossing_stars(2));
  bad["crossings"][0]["pa"] = 5;
  CHECK_THROWS_AS(drawing_from_json(bad), Error);
  Json circ = drawing_to_json(random_circular(6, 0.6, 1));
  std::swap(circ["circular"][0], circ["circular"][3]);
  CHECK_THROWS_AS(drawing_from_json(circ), Error);

  auto col = colouring_from_json(Json::parse(R"({"0":1,"1":2})"), 2);
  CHECK(col == std::vector<int>{1, 2});
  CHECK_THROWS_AS(colouring_from_json(Json::parse(R"({"0":1})"), 2), Error);
  CHECK_THROWS_AS(colouring_from_json(Json::parse(R"({"x":1,"1":1})"), 2), Error);
}

TEST_CASE("family generation is deterministic and checked") {
  FamilyParams p;
  p.n = 8;
  p.m = 12;
  p.seed = 42;
  CHECK(drawing_to_json(gen_family("random_segments", p).drawing) ==
        drawing_to_json(gen_family("random_segments", p).drawing));
  CHECK_THROWS_AS(gen_family("nope", p), Error);
  for (int n = 2; n <= 4; ++n) {
    p.n = n;
    auto inst = gen_family("grid_apex", p);
    CHECK(inst.drawing.base().num_vertices() == n * n + 1);
    CHECK(inst.colouring.size() == static_cast<std::size_t>(inst.drawing.base().num_edges()));
  }
  for (const auto& name : family_names()) {
    FamilyParams q;
    q.n = 5;
    q.m = 7;
    CHECK_NOTHROW(gen_family(name, q));
  }
}
