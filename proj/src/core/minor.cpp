#include "bpk/minor.hpp"

#include <algorithm>
#include <string>

#include "bpk/error.hpp"

namespace bpk {

Report validate_model(const Graph& guest, const Graph& host, const MinorModel& mu) {
  Report rep;
  const int n = guest.num_vertices();
  const int hn = host.num_vertices();
  if (static_cast<int>(mu.branch_sets.size()) != n) {
    rep.add("model.size", "branch sets " + std::to_string(mu.branch_sets.size()) +
                              " for " + std::to_string(n) + " vertices");
    return rep;
  }
  std::vector<int> owner(hn, -1);
  bool range_ok = true;
  for (Vertex v = 0; v < n; ++v) {
    const auto& bs = mu.branch_sets[v];
    if (bs.empty()) rep.add("model.empty", "vertex " + std::to_string(v));
    for (Vertex h : bs) {
      if (h < 0 || h >= hn) {
        rep.add("model.host_range", "vertex " + std::to_string(v) + " host " +
                                        std::to_string(h));
        range_ok = false;
        continue;
      }
      if (owner[h] >= 0 && owner[h] != v)
        rep.add("model.overlap", "host " + std::to_string(h) + " in " +
                                     std::to_string(owner[h]) + " and " +
                                     std::to_string(v));
      else
        owner[h] = v;
    }
  }
  if (!range_ok) return rep;

  for (Vertex v = 0; v < n; ++v) {
    const auto& bs = mu.branch_sets[v];
    if (bs.empty()) continue;
    // BFS inside the branch set.
    std::vector<char> in(hn, 0), seen(hn, 0);
    for (Vertex h : bs) in[h] = 1;
    std::vector<Vertex> queue{bs.front()};
    seen[bs.front()] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (Vertex w : host.neighbours(queue[i]))
        if (in[w] && !seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
    for (Vertex h : bs)
      if (!seen[h]) {
        rep.add("model.disconnected", "vertex " + std::to_string(v) + " host " +
                                          std::to_string(h));
        break;
      }
  }

  for (const Edge& e : guest.edges()) {
    bool found = false;
    for (Vertex a : mu.branch_sets[e.u]) {
      for (Vertex b : host.neighbours(a))
        if (owner[b] == e.v) {
          found = true;
          break;
        }
      if (found) break;
    }
    if (!found)
      rep.add("model.edge_unrealised",
              "edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
  }
  return rep;
}

WeakRadius weak_radius(const Graph& h, std::span<const Vertex> s) {
  if (s.empty()) throw Error(ErrorKind::InvalidInput, "weak radius of an empty set");
  const int n = h.num_vertices();
  std::vector<int> worst(n, 0);
  for (Vertex a : s) {
    if (a < 0 || a >= n) throw Error(ErrorKind::InvalidInput, "vertex out of range");
    auto dist = bfs_distances(h, a);
    for (Vertex v = 0; v < n; ++v)
      worst[v] = (dist[v] < 0 || worst[v] < 0) ? -1 : std::max(worst[v], dist[v]);
  }
  WeakRadius best;
  for (Vertex v = 0; v < n; ++v)
    if (worst[v] >= 0 && (best.origin < 0 || worst[v] < best.radius)) {
      best.radius = worst[v];
      best.origin = v;
    }
  if (best.origin < 0)
    throw Error(ErrorKind::Unreachable, "set spans several components");
  return best;
}

}  // namespace bpk
