#include "bpk/families.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "bpk/error.hpp"
#include "bpk/recognition.hpp"

namespace bpk {

std::uint64_t Rng::below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

bool Rng::chance(double p) {
  const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
  return u < p;
}

namespace {

Point pt(long x, long y) { return {mpq_class(x), mpq_class(y)}; }

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::BadParams, what);
}

Geometry straight(const Graph& g, std::vector<Point> coords) {
  Geometry geo;
  geo.coords = std::move(coords);
  geo.bends.assign(g.num_edges(), {});
  return geo;
}

// Internal consistency: a family that misses its documented profile is a bug.
void ensure(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("family invariant failed: " + what);
}

bool transparent(const TopologicalDrawing& d, const std::vector<int>& colour) {
  for (const Crossing& c : d.crossings())
    if (colour[c.edge_a] == colour[c.edge_b]) return false;
  return true;
}

}  // namespace

TopologicalDrawing crossing_stars(int n) {
  require(n >= 1, "crossing_stars needs n >= 1");
  Graph g(2 * n + 2);
  std::vector<Point> coords(2 * n + 2);
  coords[0] = pt(-100, 0);
  coords[n + 1] = pt(0, -100);
  for (int i = 1; i <= n; ++i) {
    g.add_edge(0, i);
    coords[i] = pt(100, i);
  }
  for (int j = 1; j <= n; ++j) {
    g.add_edge(n + 1, n + 1 + j);
    coords[n + 1 + j] = pt(j, 100);
  }
  return from_polylines(g, straight(g, std::move(coords)));
}

TopologicalDrawing k3n(int n) {
  require(n >= 1, "k3n needs n >= 1");
  const int a = n, b = n + 1, c = n + 2;
  Graph g(n + 3);
  std::vector<Point> coords(n + 3);
  for (int i = 0; i < n; ++i) coords[i] = pt(i + 1, 0);
  coords[a] = pt(0, n + 1);
  coords[b] = pt(0, -(n + 1));
  coords[c] = pt(n + 1, 1);
  for (int hub : {a, b, c})
    for (int i = 0; i < n; ++i) g.add_edge(i, hub);
  return from_polylines(g, straight(g, std::move(coords)));
}

TopologicalDrawing k_2k2_n(int k, int n) {
  require(k >= 0 && n >= 1, "k_2k2_n needs k >= 0 and n >= 1");
  const int hubs = 2 * k + 2;
  Graph g(n + hubs);
  for (int h = 0; h < hubs; ++h)
    for (int i = 0; i < n; ++i) g.add_edge(i, n + h);
  // Hub heights are searched until no three edges share a point.
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<Point> coords(n + hubs);
    for (int i = 0; i < n; ++i) coords[i] = pt(i + 1, 0);
    for (int q = 0; q <= k; ++q) {
      mpq_class h = mpq_class(n + 1 + 2 * q) + mpq_class(q * q + 1, attempt + 3);
      h.canonicalize();
      coords[n + q] = {0, h};
      coords[n + k + 1 + q] = {0, -h};
    }
    try {
      return from_polylines(g, straight(g, std::move(coords)));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegeneratePosition) throw;
    }
  }
  throw Error(ErrorKind::DegeneratePosition, "no general-position hub heights found");
}

TopologicalDrawing circular_complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "circular_complete_bipartite needs a, b >= 1");
  CircularSpec spec{a + b, {}};
  // Position 0 is A_0, 1..b are B, b+1.. are the remaining A vertices.
  std::vector<int> side_a{0};
  for (int i = 1; i < a; ++i) side_a.push_back(b + i);
  for (int x : side_a)
    for (int y = 1; y <= b; ++y) spec.chords.push_back({std::min(x, y), std::max(x, y)});
  return circular_drawing(spec);
}

TopologicalDrawing grid_apex(int n) {
  require(n >= 1, "grid_apex needs n >= 1");
  Graph g = grid_graph(n, n);
  const int apex = g.add_vertex();
  for (Vertex v = 0; v < n * n; ++v) g.add_edge(v, apex);
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<Point> coords(n * n + 1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) coords[i * n + j] = pt(j, i);
    mpq_class x = mpq_class(n - 1, 2) + mpq_class(1, 2 * n + 3 + attempt);
    mpq_class y = -1 - mpq_class(attempt, 7);
    x.canonicalize();
    y.canonicalize();
    coords[apex] = {x, y};
    try {
      return from_polylines(g, straight(g, std::move(coords)));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegeneratePosition) throw;
    }
  }
  throw Error(ErrorKind::DegeneratePosition, "no general-position apex found");
}

TopologicalDrawing random_circular(int n, double p, std::uint64_t seed) {
  require(n >= 0 && p >= 0 && p <= 1, "random_circular needs n >= 0, 0 <= p <= 1");
  Rng rng(seed);
  CircularSpec spec{n, {}};
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rng.chance(p)) spec.chords.push_back({a, b});
  return circular_drawing(spec);
}

namespace {

Graph random_edges(int n, int m, Rng& rng) {
  Graph g(n);
  while (g.num_edges() < m) {
    Vertex a = static_cast<Vertex>(rng.below(n)), b = static_cast<Vertex>(rng.below(n));
    if (a != b && !g.adjacent(a, b)) g.add_edge(a, b);
  }
  return g;
}

Point random_point(Rng& rng, long range) {
  return pt(static_cast<long>(rng.below(range)), static_cast<long>(rng.below(range)));
}

}  // namespace

TopologicalDrawing random_polylines(int n, int m, int bends, std::uint64_t seed) {
  require(n >= 2 && m >= 0 && static_cast<long>(m) <= static_cast<long>(n) * (n - 1) / 2,
          "random drawing needs n >= 2 and 0 <= m <= n(n-1)/2");
  require(bends >= 0 && bends <= 8, "bends must be in 0..8");
  Rng rng(seed);
  Graph g = random_edges(n, m, rng);
  const long range = 1000;
  // Redraw the geometry until it is in general position.
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Geometry geo;
    for (int v = 0; v < n; ++v) geo.coords.push_back(random_point(rng, range));
    geo.bends.resize(m);
    for (EdgeId e = 0; e < m; ++e)
      for (int i = 0; i < bends; ++i) geo.bends[e].push_back(random_point(rng, range));
    try {
      return from_polylines(g, std::move(geo));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegeneratePosition) throw;
    }
  }
  throw Error(ErrorKind::DegeneratePosition, "no general-position drawing found");
}

TopologicalDrawing random_segments(int n, int m, std::uint64_t seed) {
  return random_polylines(n, m, 0, seed);
}

std::vector<std::string> family_names() {
  return {"crossing_stars", "k3n",        "k_2k2_n",        "circular_complete_bipartite",
          "grid_apex",      "random_circular", "random_segments", "random_polylines"};
}

FamilyInstance gen_family(const std::string& name, const FamilyParams& p) {
  FamilyInstance out;
  auto colour_by = [&](auto&& f) {
    const Graph& g = out.drawing.base();
    out.colouring.resize(g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) out.colouring[e] = f(g.edge(e));
    ensure(transparent(out.drawing, out.colouring), name + " colouring");
  };
  if (name == "crossing_stars") {
    require(p.n <= 200, "crossing_stars needs n <= 200");
    out.drawing = crossing_stars(p.n);
    colour_by([&](const Edge& e) { return e.u == 0 ? 1 : 2; });
    ensure(out.drawing.num_crossings() == p.n * p.n, "crossing_stars crossing count");
    ensure(matching_planarity(out.drawing) == 1, "crossing_stars matching number");
  } else if (name == "k3n") {
    require(p.n <= 200, "k3n needs n <= 200");
    out.drawing = k3n(p.n);
    const int c = p.n + 2;
    colour_by([&](const Edge& e) { return e.v == c ? 2 : 1; });
    const int expect = p.n >= 2 ? 1 : 0;
    ensure(out.drawing.num_crossings() == p.n * (p.n - 1) / 2, "k3n crossing count");
    ensure(matching_planarity(out.drawing) == expect, "k3n matching number");
    ensure(cover_planarity(out.drawing) == expect, "k3n cover number");
  } else if (name == "k_2k2_n") {
    require(p.k <= 6 && p.n <= 60, "k_2k2_n needs k <= 6, n <= 60");
    out.drawing = k_2k2_n(p.k, p.n);
    colour_by([&](const Edge& e) { return (e.v - p.n) % (p.k + 1) + 1; });
    ensure(cover_planarity(out.drawing) <= p.k, "k_2k2_n cover number");
  } else if (name == "circular_complete_bipartite") {
    require(p.a <= 20 && p.b <= 40, "circular_complete_bipartite needs a <= 20, b <= 40");
    out.drawing = circular_complete_bipartite(p.a, p.b);
    const int b = p.b;
    // Edges get the index of their A endpoint; edges sharing it never cross.
    colour_by([&](const Edge& e) { return e.u == 0 ? 1 : e.v - b + 1; });
  } else if (name == "grid_apex") {
    require(p.n <= 12, "grid_apex needs n <= 12");
    out.drawing = grid_apex(p.n);
    const int apex = p.n * p.n;
    colour_by([&](const Edge& e) { return e.v == apex ? 2 : 1; });
  } else if (name == "random_circular") {
    require(p.n <= 200, "random_circular needs n <= 200");
    out.drawing = random_circular(p.n, p.p, p.seed);
  } else if (name == "random_segments") {
    require(p.n <= 400, "random_segments needs n <= 400");
    out.drawing = random_segments(p.n, p.m, p.seed);
  } else if (name == "random_polylines") {
    require(p.n <= 400, "random_polylines needs n <= 400");
    out.drawing = random_polylines(p.n, p.m, p.bends, p.seed);
  } else {
    throw Error(ErrorKind::BadParams, "unknown family " + name);
  }
  return out;
}

}  // namespace bpk
