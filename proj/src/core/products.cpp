#include "bpk/products.hpp"

#include "bpk/error.hpp"

namespace bpk {

Graph strong_product(const Graph& a, const Graph& b) {
  const int nb = b.num_vertices();
  Graph out(a.num_vertices() * nb);
  auto id = [nb](Vertex x, Vertex y) { return x * nb + y; };
  for (Vertex x = 0; x < a.num_vertices(); ++x)
    for (const Edge& e : b.edges()) out.add_edge(id(x, e.u), id(x, e.v));
  for (const Edge& e : a.edges()) {
    for (Vertex y = 0; y < nb; ++y) out.add_edge(id(e.u, y), id(e.v, y));
    for (const Edge& f : b.edges()) {
      out.add_edge(id(e.u, f.u), id(e.v, f.v));
      out.add_edge(id(e.u, f.v), id(e.v, f.u));
    }
  }
  return out;
}

Graph graph_power(const Graph& g, int t) {
  if (t < 1) throw Error(ErrorKind::BadParams, "graph power needs t >= 1");
  Graph out(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto dist = bfs_distances(g, v);
    for (Vertex w = v + 1; w < g.num_vertices(); ++w)
      if (dist[w] > 0 && dist[w] <= t) out.add_edge(v, w);
  }
  return out;
}

}  // namespace bpk
