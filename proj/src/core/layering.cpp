#include "bpk/layering.hpp"

#include <algorithm>
#include <string>

#include "bpk/error.hpp"

namespace bpk {

std::vector<int> Layering::index(int n) const {
  std::vector<int> idx(n, -1);
  for (std::size_t i = 0; i < layers.size(); ++i)
    for (Vertex v : layers[i])
      if (v >= 0 && v < n) idx[v] = static_cast<int>(i);
  return idx;
}

Report validate_layering(const Graph& g, const Layering& layering) {
  Report report;
  const int n = g.num_vertices();
  std::vector<int> idx(n, -1);
  for (std::size_t i = 0; i < layering.layers.size(); ++i) {
    for (Vertex v : layering.layers[i]) {
      if (v < 0 || v >= n) {
        report.add("layer.vertex_range", "layer " + std::to_string(i) +
                                             " holds " + std::to_string(v));
        continue;
      }
      if (idx[v] >= 0)
        report.add("layer.overlap", "vertex " + std::to_string(v) + " in layers " +
                                        std::to_string(idx[v]) + " and " +
                                        std::to_string(i));
      idx[v] = static_cast<int>(i);
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (idx[v] < 0) report.add("layer.uncovered", "vertex " + std::to_string(v));
  if (!report.ok()) return report;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (std::abs(idx[ed.u] - idx[ed.v]) > 1)
      report.add("layer.long_edge", "edge " + std::to_string(e) + " spans layers " +
                                        std::to_string(idx[ed.u]) + " and " +
                                        std::to_string(idx[ed.v]));
  }
  return report;
}

namespace {

Layering layers_from_distances(const std::vector<int>& dist) {
  Layering out;
  for (Vertex v = 0; v < static_cast<int>(dist.size()); ++v) {
    if (dist[v] < 0) continue;
    if (static_cast<int>(out.layers.size()) <= dist[v]) out.layers.resize(dist[v] + 1);
    out.layers[dist[v]].push_back(v);
  }
  return out;
}

}  // namespace

Layering bfs_layering(const Graph& g, Vertex root) {
  if (root < 0 || root >= g.num_vertices())
    throw Error(ErrorKind::InvalidInput, "root out of range");
  auto dist = bfs_distances(g, root);
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (dist[v] < 0)
      throw Error(ErrorKind::Disconnected,
                  "vertex " + std::to_string(v) + " unreachable from root");
  return layers_from_distances(dist);
}

Layering componentwise_bfs_layering(const Graph& g) {
  int count = 0;
  auto comp = connected_components(g, &count);
  std::vector<Vertex> roots(count, -1);
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (roots[comp[v]] < 0) roots[comp[v]] = v;
  return layers_from_distances(bfs_distances(g, roots));
}

int measure_layered_width(int n, const TreeDecomposition& td,
                          const Layering& layering) {
  auto idx = layering.index(n);
  int width = 0;
  std::vector<int> count(layering.layers.size(), 0);
  for (const auto& bag : td.bags) {
    for (Vertex v : bag)
      if (v >= 0 && v < n && idx[v] >= 0) width = std::max(width, ++count[idx[v]]);
    for (Vertex v : bag)
      if (v >= 0 && v < n && idx[v] >= 0) count[idx[v]] = 0;
  }
  return width;
}

LayeredDecomposition make_layered(const Graph& g, TreeDecomposition td,
                                  Layering layering) {
  LayeredDecomposition ld{std::move(td), std::move(layering), 0};
  ld.layered_width = measure_layered_width(g.num_vertices(), ld.decomposition,
                                           ld.layering);
  return ld;
}

Report validate_layered_decomposition(const Graph& g,
                                      const LayeredDecomposition& ld) {
  Report report = validate_tree_decomposition(g, ld.decomposition);
  report.merge(validate_layering(g, ld.layering));
  if (report.ok()) {
    int measured = measure_layered_width(g.num_vertices(), ld.decomposition, ld.layering);
    if (measured != ld.layered_width)
      report.add("layered.width_mismatch", "stored " + std::to_string(ld.layered_width) +
                                               " measured " + std::to_string(measured));
  }
  return report;
}

}  // namespace bpk
