#include "bpk/graph_io.hpp"

#include <ostream>

#include "bpk/error.hpp"

namespace bpk {

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return Json{{"n", g.num_vertices()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    if (n < 0) throw Error(ErrorKind::InvalidInput, "negative vertex count");
    Graph g(n);
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw Error(ErrorKind::InvalidInput, "edge must be a pair");
      g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::InvalidInput, std::string("graph json: ") + ex.what());
  }
}

void write_dot(std::ostream& out, const Graph& g,
               const std::vector<std::string>& labels) {
  out << "graph G {\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out << "  " << v;
    if (v < static_cast<int>(labels.size())) out << " [label=\"" << labels[v] << "\"]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
}

void write_graphml(std::ostream& out, const Graph& g) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
         "  <graph id=\"G\" edgedefault=\"undirected\">\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    out << "    <node id=\"n" << v << "\"/>\n";
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    out << "    <edge id=\"e" << e << "\" source=\"n" << g.edge(e).u
        << "\" target=\"n" << g.edge(e).v << "\"/>\n";
  out << "  </graph>\n</graphml>\n";
}

}  // namespace bpk
