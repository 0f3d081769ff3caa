#include <algorithm>
#include <map>
#include <string>

#include "bpk/drawing.hpp"
#include "bpk/error.hpp"

namespace bpk {
namespace {

int sign(const mpq_class& q) { return sgn(q); }

// Sign of the cross product (b - a) x (c - a).
int orient(const Point& a, const Point& b, const Point& c) {
  return sign((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

// p is on the closed segment [a, b], assuming orient(a, b, p) == 0.
bool within(const Point& a, const Point& b, const Point& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  return orient(a, b, p) == 0 && within(a, b, p);
}

struct Segment {
  EdgeId edge;
  int index;
  Point p, q;
};

std::string seg_name(const Segment& s) {
  return "edge " + std::to_string(s.edge) + " segment " + std::to_string(s.index);
}

[[noreturn]] void degenerate(const std::string& what) {
  throw Error(ErrorKind::DegeneratePosition, what);
}

struct Hit {
  EdgeId edge_a, edge_b;
  int seg_a, seg_b;
  mpq_class t_a, t_b;  // parameters along each segment
  Point at;
};

}  // namespace

TopologicalDrawing from_polylines(const Graph& base, Geometry geometry) {
  const int n = base.num_vertices();
  const int m = base.num_edges();
  if (static_cast<int>(geometry.coords.size()) != n)
    throw Error(ErrorKind::InvalidInput, "one coordinate per vertex required");
  if (static_cast<int>(geometry.bends.size()) != m)
    throw Error(ErrorKind::InvalidInput, "one bend list per edge required");

  {
    std::vector<Vertex> byPos(n);
    for (Vertex v = 0; v < n; ++v) byPos[v] = v;
    auto lessPt = [&](Vertex a, Vertex b) {
      const Point &p = geometry.coords[a], &q = geometry.coords[b];
      return p.x != q.x ? p.x < q.x : p.y < q.y;
    };
    std::sort(byPos.begin(), byPos.end(), lessPt);
    for (int i = 1; i < n; ++i)
      if (geometry.coords[byPos[i]] == geometry.coords[byPos[i - 1]])
        degenerate("vertices " + std::to_string(std::min(byPos[i], byPos[i - 1])) + " and " +
                   std::to_string(std::max(byPos[i], byPos[i - 1])) + " coincide");
  }

  std::vector<Segment> segs;
  std::vector<int> last_index(m);
  for (EdgeId e = 0; e < m; ++e) {
    std::vector<Point> pts{geometry.coords[base.edge(e).u]};
    pts.insert(pts.end(), geometry.bends[e].begin(), geometry.bends[e].end());
    pts.push_back(geometry.coords[base.edge(e).v]);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      if (pts[i] == pts[i + 1])
        degenerate("edge " + std::to_string(e) + " segment " + std::to_string(i) +
                   " has zero length");
      segs.push_back({e, static_cast<int>(i), pts[i], pts[i + 1]});
    }
    last_index[e] = static_cast<int>(pts.size()) - 2;
  }

  // A vertex may only lie on its own edges, at their ends.
  for (Vertex w = 0; w < n; ++w) {
    const Point& pw = geometry.coords[w];
    for (const Segment& s : segs) {
      if (!on_segment(s.p, s.q, pw)) continue;
      const Edge& e = base.edge(s.edge);
      bool at_end = (w == e.u && s.index == 0 && s.p == pw) ||
                    (w == e.v && s.index == last_index[s.edge] && s.q == pw);
      if (!at_end)
        degenerate("vertex " + std::to_string(w) + " lies on edge " + std::to_string(s.edge));
    }
  }

  std::vector<Hit> hits;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const Segment& a = segs[i];
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const Segment& b = segs[j];
      // Bounding boxes first.
      if (std::max(a.p.x, a.q.x) < std::min(b.p.x, b.q.x) ||
          std::max(b.p.x, b.q.x) < std::min(a.p.x, a.q.x) ||
          std::max(a.p.y, a.q.y) < std::min(b.p.y, b.q.y) ||
          std::max(b.p.y, b.q.y) < std::min(a.p.y, a.q.y))
        continue;
      const int o1 = orient(a.p, a.q, b.p), o2 = orient(a.p, a.q, b.q);
      const int o3 = orient(b.p, b.q, a.p), o4 = orient(b.p, b.q, a.q);
      const bool same_edge = a.edge == b.edge;

      if (o1 * o2 < 0 && o3 * o4 < 0) {
        if (same_edge) degenerate("edge " + std::to_string(a.edge) + " crosses itself");
        const mpq_class dx1 = a.q.x - a.p.x, dy1 = a.q.y - a.p.y;
        const mpq_class dx2 = b.q.x - b.p.x, dy2 = b.q.y - b.p.y;
        const mpq_class den = dx1 * dy2 - dy1 * dx2;
        const mpq_class rx = b.p.x - a.p.x, ry = b.p.y - a.p.y;
        mpq_class ta = (rx * dy2 - ry * dx2) / den;
        mpq_class tb = (rx * dy1 - ry * dx1) / den;
        Point at{a.p.x + ta * dx1, a.p.y + ta * dy1};
        hits.push_back({a.edge, b.edge, a.index, b.index, ta, tb, at});
        continue;
      }

      // Touching or collinear contact.
      if (o1 == 0 && o2 == 0) {
        // Collinear: overlap along the line.
        std::vector<Point> shared;
        for (const Point* p : {&b.p, &b.q})
          if (within(a.p, a.q, *p)) shared.push_back(*p);
        for (const Point* p : {&a.p, &a.q})
          if (within(b.p, b.q, *p)) shared.push_back(*p);
        if (shared.empty()) continue;
        bool single = std::all_of(shared.begin(), shared.end(),
                                  [&](const Point& p) { return p == shared[0]; });
        if (!single) degenerate(seg_name(a) + " overlaps " + seg_name(b));
      }
      // Find the contact point, if any.
      std::optional<Point> touch;
      if (o1 == 0 && within(a.p, a.q, b.p)) touch = b.p;
      else if (o2 == 0 && within(a.p, a.q, b.q)) touch = b.q;
      else if (o3 == 0 && within(b.p, b.q, a.p)) touch = a.p;
      else if (o4 == 0 && within(b.p, b.q, a.q)) touch = a.q;
      if (!touch) continue;

      if (same_edge) {
        if (b.index == a.index + 1 && *touch == a.q) continue;
        degenerate("edge " + std::to_string(a.edge) + " touches itself");
      }
      // Allowed only at a vertex shared by both edges.
      const Edge &ea = base.edge(a.edge), &eb = base.edge(b.edge);
      bool ok = false;
      for (Vertex v : {ea.u, ea.v})
        if ((v == eb.u || v == eb.v) && geometry.coords[v] == *touch) ok = true;
      if (!ok) degenerate(seg_name(a) + " touches " + seg_name(b));
    }
  }

  // Three curves through one point show up as repeated crossing points.
  {
    std::vector<int> idx(hits.size());
    for (std::size_t i = 0; i < hits.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      const Point &p = hits[a].at, &q = hits[b].at;
      return p.x != q.x ? p.x < q.x : p.y < q.y;
    });
    for (std::size_t i = 1; i < idx.size(); ++i)
      if (hits[idx[i]].at == hits[idx[i - 1]].at) {
        const Hit &h = hits[idx[i]], &g = hits[idx[i - 1]];
        degenerate("edges " + std::to_string(g.edge_a) + ", " + std::to_string(g.edge_b) +
                   ", " + std::to_string(h.edge_a) + ", " + std::to_string(h.edge_b) +
                   " meet at one point");
      }
  }

  // Order crossings along each edge by (segment index, parameter).
  struct Along {
    int seg;
    mpq_class t;
    int hit;
  };
  std::vector<std::vector<Along>> along(m);
  for (std::size_t i = 0; i < hits.size(); ++i) {
    along[hits[i].edge_a].push_back({hits[i].seg_a, hits[i].t_a, static_cast<int>(i)});
    along[hits[i].edge_b].push_back({hits[i].seg_b, hits[i].t_b, static_cast<int>(i)});
  }
  std::vector<int> pos_a(hits.size()), pos_b(hits.size());
  for (EdgeId e = 0; e < m; ++e) {
    auto& list = along[e];
    std::sort(list.begin(), list.end(), [](const Along& x, const Along& y) {
      return x.seg != y.seg ? x.seg < y.seg : x.t < y.t;
    });
    for (std::size_t p = 0; p < list.size(); ++p) {
      const Hit& h = hits[list[p].hit];
      (h.edge_a == e ? pos_a : pos_b)[list[p].hit] = static_cast<int>(p);
    }
  }

  // Canonical ids: by (lower edge, position along it).
  std::vector<Crossing> cs;
  for (std::size_t i = 0; i < hits.size(); ++i) {
    Crossing c{0, hits[i].edge_a, pos_a[i], hits[i].edge_b, pos_b[i]};
    if (c.edge_a > c.edge_b) {
      std::swap(c.edge_a, c.edge_b);
      std::swap(c.pos_a, c.pos_b);
    }
    cs.push_back(c);
  }
  std::sort(cs.begin(), cs.end(), [](const Crossing& x, const Crossing& y) {
    return x.edge_a != y.edge_a ? x.edge_a < y.edge_a : x.pos_a < y.pos_a;
  });
  for (std::size_t i = 0; i < cs.size(); ++i) cs[i].id = static_cast<int>(i);

  TopologicalDrawing d(base, std::move(cs));
  d.set_geometry(std::move(geometry));
  return d;
}

bool chords_interleave(const std::vector<int>& position, Vertex a, Vertex b, Vertex c,
                       Vertex d) {
  int pa = position[a], pb = position[b], pc = position[c], pd = position[d];
  if (pa > pb) std::swap(pa, pb);
  auto inside = [&](int p) { return pa < p && p < pb; };
  auto outside = [&](int p) { return p < pa || p > pb; };
  return (inside(pc) && outside(pd)) || (outside(pc) && inside(pd));
}

TopologicalDrawing circular_drawing(const CircularSpec& spec) {
  if (spec.n < 0) throw Error(ErrorKind::InvalidInput, "negative circle size");
  Graph g(spec.n);
  for (const auto& [a, b] : spec.chords) {
    if (a < 0 || b < 0 || a >= spec.n || b >= spec.n || a == b)
      throw Error(ErrorKind::InvalidInput,
                  "bad chord " + std::to_string(a) + "-" + std::to_string(b));
    if (g.adjacent(a, b))
      throw Error(ErrorKind::DuplicateChord,
                  "chord " + std::to_string(a) + "-" + std::to_string(b) + " repeated");
    g.add_edge(a, b);
  }
  // Parameters stay increasing, so the cyclic order and the crossing pairs
  // never change; a retry only moves points to escape a triple intersection.
  for (int attempt = 0; attempt < 64; ++attempt) {
    Geometry geo;
    geo.bends.assign(g.num_edges(), {});
    for (int i = 0; i < spec.n; ++i) {
      mpq_class t(i);
      if (attempt > 0) t += mpq_class((i * (2 * attempt + 1)) % 17 + 1, 3 * 17 + attempt);
      t.canonicalize();
      mpq_class den = 1 + t * t;
      geo.coords.push_back({(1 - t * t) / den, 2 * t / den});
    }
    try {
      TopologicalDrawing d = from_polylines(g, std::move(geo));
      std::vector<Vertex> order(spec.n);
      for (int i = 0; i < spec.n; ++i) order[i] = i;
      d.set_circular_order(std::move(order));
      return d;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegeneratePosition) throw;
    }
  }
  throw Error(ErrorKind::DegeneratePosition, "no general-position circle placement found");
}

}  // namespace bpk
