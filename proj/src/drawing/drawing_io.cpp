#include "bpk/drawing_io.hpp"

#include <algorithm>
#include <string>

#include "bpk/error.hpp"

namespace bpk {

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

mpq_class rational_from_json(const Json& j) {
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  if (!j.is_string()) throw Error(ErrorKind::InvalidInput, "rational must be a string");
  const std::string s = j.get<std::string>();
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0)
    throw Error(ErrorKind::InvalidInput, "bad rational '" + s + "'");
  if (q.get_den() == 0) throw Error(ErrorKind::InvalidInput, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

namespace {

Json point_json(const Point& p) {
  return Json::array({rational_to_string(p.x), rational_to_string(p.y)});
}

Point point_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(ErrorKind::InvalidInput, "point must be [x, y]");
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

}  // namespace

Json drawing_to_json(const TopologicalDrawing& d) {
  const Graph& g = d.base();
  Json vertices = Json::array();
  for (Vertex v = 0; v < g.num_vertices(); ++v) vertices.push_back(v);
  Json edges = Json::array();
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    edges.push_back({{"id", e}, {"u", g.edge(e).u}, {"v", g.edge(e).v},
                     {"crossings", d.sequence(e)}});
  Json crossings = Json::array();
  for (const Crossing& c : d.crossings())
    crossings.push_back(
        {{"id", c.id}, {"ea", c.edge_a}, {"pa", c.pos_a}, {"eb", c.edge_b}, {"pb", c.pos_b}});
  Json out{{"vertices", vertices}, {"edges", edges}, {"crossings", crossings}};
  if (d.geometry()) {
    Json coords = Json::array(), polylines = Json::array();
    for (const Point& p : d.geometry()->coords) coords.push_back(point_json(p));
    for (const auto& bends : d.geometry()->bends) {
      Json line = Json::array();
      for (const Point& p : bends) line.push_back(point_json(p));
      polylines.push_back(line);
    }
    out["geometry"] = {{"coords", coords}, {"polylines", polylines}};
  }
  if (d.circular_order()) out["circular"] = *d.circular_order();
  return out;
}

TopologicalDrawing drawing_from_json(const Json& j) {
  try {
    const auto& vs = j.at("vertices");
    const int n = static_cast<int>(vs.size());
    for (int i = 0; i < n; ++i)
      if (vs[i].get<int>() != i)
        throw Error(ErrorKind::InvalidInput, "vertex ids must be 0..n-1 in order");
    Graph g(n);
    const auto& es = j.at("edges");
    std::vector<std::vector<int>> seqs;
    for (std::size_t i = 0; i < es.size(); ++i) {
      const auto& e = es[i];
      if (e.at("id").get<int>() != static_cast<int>(i))
        throw Error(ErrorKind::InvalidInput, "edge ids must be 0..m-1 in order");
      Vertex u = e.at("u").get<int>(), v = e.at("v").get<int>();
      if (u > v) std::swap(u, v);
      g.add_edge(u, v);
      seqs.push_back(e.value("crossings", std::vector<int>{}));
    }
    std::vector<Crossing> cs;
    for (const auto& c : j.value("crossings", Json::array()))
      cs.push_back({c.at("id").get<int>(), c.at("ea").get<int>(), c.at("pa").get<int>(),
                    c.at("eb").get<int>(), c.at("pb").get<int>()});
    TopologicalDrawing d(g, cs);
    for (EdgeId e = 0; e < g.num_edges(); ++e)
      if (seqs[e] != d.sequence(e))
        throw Error(ErrorKind::InvalidInput,
                    "edge " + std::to_string(e) + " sequence disagrees with crossing records");
    if (j.contains("geometry")) {
      Geometry geo;
      for (const auto& p : j["geometry"].at("coords")) geo.coords.push_back(point_from(p));
      for (const auto& line : j["geometry"].at("polylines")) {
        geo.bends.emplace_back();
        for (const auto& p : line) geo.bends.back().push_back(point_from(p));
      }
      // Geometry must reproduce the recorded crossings exactly.
      TopologicalDrawing check = from_polylines(g, geo);
      if (drawing_to_json(check).at("crossings") != drawing_to_json(d).at("crossings"))
        throw Error(ErrorKind::InvalidInput, "geometry disagrees with crossing records");
      d.set_geometry(std::move(geo));
    }
    if (j.contains("circular")) {
      auto order = j["circular"].get<std::vector<int>>();
      std::vector<int> pos(n, -1);
      if (static_cast<int>(order.size()) != n)
        throw Error(ErrorKind::InvalidInput, "circular order must list every vertex");
      for (int i = 0; i < n; ++i) {
        if (order[i] < 0 || order[i] >= n || pos[order[i]] >= 0)
          throw Error(ErrorKind::InvalidInput, "circular order is not a permutation");
        pos[order[i]] = i;
      }
      // A circular drawing has each interleaving pair crossing exactly once.
      Graph x(g.num_edges());
      for (const Crossing& c : d.crossings())
        if (!x.add_edge_if_absent(c.edge_a, c.edge_b))
          throw Error(ErrorKind::InvalidInput, "circular drawing edges cross twice");
      for (EdgeId a = 0; a < g.num_edges(); ++a)
        for (EdgeId b = a + 1; b < g.num_edges(); ++b) {
          const Edge &ea = g.edge(a), &eb = g.edge(b);
          if (chords_interleave(pos, ea.u, ea.v, eb.u, eb.v) != x.adjacent(a, b))
            throw Error(ErrorKind::InvalidInput, "edges " + std::to_string(a) + " and " +
                                                     std::to_string(b) +
                                                     " contradict the circular order");
        }
      d.set_circular_order(std::move(order));
    }
    return d;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::InvalidInput, std::string("drawing json: ") + ex.what());
  }
}

Json colouring_to_json(const std::vector<int>& colour) {
  Json out = Json::object();
  for (std::size_t e = 0; e < colour.size(); ++e) out[std::to_string(e)] = colour[e];
  return out;
}

std::vector<int> colouring_from_json(const Json& j, int num_edges) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "colouring must be an object");
  std::vector<int> colour(num_edges, 0);
  try {
    for (const auto& [key, value] : j.items()) {
      std::size_t used = 0;
      int e = std::stoi(key, &used);
      if (used != key.size() || e < 0 || e >= num_edges)
        throw Error(ErrorKind::InvalidInput, "bad edge id '" + key + "' in colouring");
      int c = value.get<int>();
      if (c < 1) throw Error(ErrorKind::InvalidInput, "colours start at 1");
      colour[e] = c;
    }
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::InvalidInput, "bad edge id in colouring");
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::InvalidInput, std::string("colouring json: ") + ex.what());
  }
  for (EdgeId e = 0; e < num_edges; ++e)
    if (colour[e] == 0)
      throw Error(ErrorKind::InvalidInput, "edge " + std::to_string(e) + " has no colour");
  return colour;
}

}  // namespace bpk
