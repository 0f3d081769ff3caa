#pragma once

#include <vector>

#include "bpk/graph.hpp"
#include "bpk/report.hpp"
#include "bpk/treewidth.hpp"

namespace bpk {

struct Layering {
  std::vector<std::vector<Vertex>> layers;

  // Layer index per vertex, -1 if the vertex is in no layer.
  std::vector<int> index(int n) const;
};

// Layers partition V(g) and every edge joins equal or consecutive layers.
Report validate_layering(const Graph& g, const Layering& layering);

// Layer i holds the vertices at distance i from root. Throws Disconnected.
Layering bfs_layering(const Graph& g, Vertex root);

// BFS from the lowest vertex of every component; layer i merges the distance-i
// vertices of all components.
Layering componentwise_bfs_layering(const Graph& g);

struct LayeredDecomposition {
  TreeDecomposition decomposition;
  Layering layering;
  int layered_width = 0;
};

// max over (bag, layer) of |bag ∩ layer|.
int measure_layered_width(int n, const TreeDecomposition& td,
                          const Layering& layering);

LayeredDecomposition make_layered(const Graph& g, TreeDecomposition td,
                                  Layering layering);

// Both certificates valid and the stored width equals the measured one.
Report validate_layered_decomposition(const Graph& g,
                                      const LayeredDecomposition& ld);

}  // namespace bpk
