#include "bpk/treewidth.hpp"

#include <algorithm>
#include <set>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "bpk/error.hpp"

namespace bpk {

int treewidth_cap_from_env() {
  if (const char* env = std::getenv("BPK_CAP_TW")) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0 && value <= 30)
      return static_cast<int>(value);
  }
  return kDefaultTreewidthCap;
}

int TreeDecomposition::width() const {
  std::size_t biggest = 0;
  for (const auto& b : bags) biggest = std::max(biggest, b.size());
  return static_cast<int>(biggest) - 1;
}

Report validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
  Report report;
  const int nodes = td.tree.num_vertices();
  if (nodes == 0) {
    report.add("tree.empty", "decomposition has no nodes");
    return report;
  }
  if (static_cast<int>(td.bags.size()) != nodes) {
    report.add("tree.bag_count", "bags=" + std::to_string(td.bags.size()) +
                                     " nodes=" + std::to_string(nodes));
    return report;
  }
  if (td.tree.num_edges() != nodes - 1 || !is_connected(td.tree))
    report.add("tree.not_a_tree", "nodes=" + std::to_string(nodes) +
                                      " edges=" +
                                      std::to_string(td.tree.num_edges()));

  const int n = g.num_vertices();
  std::vector<std::vector<int>> holders(n);
  for (int t = 0; t < nodes; ++t) {
    for (Vertex v : td.bags[t]) {
      if (v < 0 || v >= n) {
        report.add("bag.vertex_range", "node " + std::to_string(t) +
                                           " holds vertex " + std::to_string(v));
        continue;
      }
      holders[v].push_back(t);
    }
  }
  if (!report.ok()) return report;

  std::vector<std::vector<char>> member(nodes);
  for (int t = 0; t < nodes; ++t) {
    member[t].assign(n, 0);
    for (Vertex v : td.bags[t]) member[t][v] = 1;
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    bool covered = false;
    for (int t : holders[ed.u])
      if (member[t][ed.v]) {
        covered = true;
        break;
      }
    if (!covered)
      report.add("edge.uncovered", "edge " + std::to_string(e) + " (" +
                                       std::to_string(ed.u) + "," +
                                       std::to_string(ed.v) + ")");
  }

  std::vector<char> in_set(nodes, 0), seen(nodes, 0);
  for (Vertex v = 0; v < n; ++v) {
    const auto& hs = holders[v];
    if (hs.empty()) {
      report.add("vertex.absent", "vertex " + std::to_string(v));
      continue;
    }
    for (int t : hs) in_set[t] = 1;
    std::vector<int> stack{hs.front()};
    seen[hs.front()] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      for (int u : td.tree.neighbours(t)) {
        if (in_set[u] && !seen[u]) {
          seen[u] = 1;
          ++reached;
          stack.push_back(u);
        }
      }
    }
    if (reached != hs.size())
      report.add("vertex.disconnected_subtree", "vertex " + std::to_string(v));
    for (int t : hs) in_set[t] = seen[t] = 0;
  }
  return report;
}

namespace {

// Sorted-adjacency elimination game shared by the order-driven and greedy
// constructions.
class EliminationGame {
 public:
  explicit EliminationGame(const Graph& g)
      : adj_(g.num_vertices()), alive_(g.num_vertices(), 1) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) adj_[v] = g.neighbours(v);
  }

  const std::vector<Vertex>& neighbours(Vertex v) const { return adj_[v]; }
  bool alive(Vertex v) const { return alive_[v] != 0; }

  long fill_in(Vertex v) const {
    const auto& nb = adj_[v];
    long missing = 0;
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (!std::binary_search(adj_[nb[i]].begin(), adj_[nb[i]].end(), nb[j]))
          ++missing;
    return missing;
  }

  // Eliminates v and returns its live neighbourhood at that moment.
  std::vector<Vertex> eliminate(Vertex v) {
    std::vector<Vertex> nb = adj_[v];
    for (Vertex a : nb) {
      auto& la = adj_[a];
      la.erase(std::lower_bound(la.begin(), la.end(), v));
      for (Vertex b : nb) {
        if (a == b) continue;
        auto it = std::lower_bound(la.begin(), la.end(), b);
        if (it == la.end() || *it != b) la.insert(it, b);
      }
    }
    adj_[v].clear();
    alive_[v] = 0;
    return nb;
  }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<char> alive_;
};

TreeDecomposition assemble(int n, const std::vector<Vertex>& order,
                           const std::vector<std::vector<Vertex>>& later) {
  TreeDecomposition td;
  if (n == 0) {
    td.tree = Graph(1);
    td.bags.assign(1, {});
    return td;
  }
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  td.tree = Graph(n);
  td.bags.resize(n);
  int previous_root = -1;
  for (int i = 0; i < n; ++i) {
    Vertex v = order[i];
    auto bag = later[v];
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    td.bags[i] = std::move(bag);
    if (later[v].empty()) {
      if (previous_root >= 0) td.tree.add_edge(previous_root, i);
      previous_root = i;
    } else {
      int next = n;
      for (Vertex w : later[v]) next = std::min(next, pos[w]);
      td.tree.add_edge(i, next);
    }
  }
  return td;
}

}  // namespace

TreeDecomposition decomposition_from_order(const Graph& g,
                                           std::span<const Vertex> order) {
  const int n = g.num_vertices();
  if (static_cast<int>(order.size()) != n)
    throw Error(ErrorKind::InvalidInput, "elimination order is not a permutation");
  EliminationGame game(g);
  std::vector<std::vector<Vertex>> later(n);
  std::vector<char> used(n, 0);
  for (Vertex v : order) {
    if (v < 0 || v >= n || used[v])
      throw Error(ErrorKind::InvalidInput, "elimination order is not a permutation");
    used[v] = 1;
    later[v] = game.eliminate(v);
  }
  return assemble(n, std::vector<Vertex>(order.begin(), order.end()), later);
}

int elimination_width(const Graph& g, std::span<const Vertex> order) {
  return decomposition_from_order(g, order).width();
}

TreewidthResult exact_treewidth(const Graph& g, int cap) {
  const int n = g.num_vertices();
  if (n > cap)
    throw Error(ErrorKind::CapExceeded, "exact treewidth needs |V| <= " +
                                            std::to_string(cap) + ", got " +
                                            std::to_string(n));
  if (n > 30) throw Error(ErrorKind::CapExceeded, "subset DP limited to 30 vertices");
  TreewidthResult result;
  if (n == 0) {
    result.width = -1;
    result.cert = decomposition_from_order(g, {});
    return result;
  }
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  // Number of vertices outside S ∪ {v} adjacent to v's component in G[S ∪ {v}].
  auto q = [&](std::uint32_t s, int v) {
    std::uint32_t comp = 1u << v, frontier = comp, seen_nb = 0;
    while (frontier) {
      int u = std::countr_zero(frontier);
      frontier &= frontier - 1;
      std::uint32_t nb = adj[u];
      seen_nb |= nb;
      std::uint32_t add = nb & s & ~comp;
      comp |= add;
      frontier |= add;
    }
    return std::popcount(seen_nb & ~s & ~(1u << v));
  };

  const std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);
  std::vector<std::int8_t> dp(std::size_t(full) + 1, 0);
  dp[0] = -1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    int best = 127;
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      std::uint32_t prev = s & ~(1u << v);
      int prev_val = dp[prev];
      if (prev_val >= best) continue;
      int here = std::max(prev_val, q(prev, v));
      best = std::min(best, here);
    }
    dp[s] = static_cast<std::int8_t>(best);
    if (s == full) break;
  }

  std::vector<Vertex> order(n);
  std::uint32_t s = full;
  for (int pos = n - 1; pos >= 0; --pos) {
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      std::uint32_t prev = s & ~(1u << v);
      if (std::max<int>(dp[prev], q(prev, v)) == dp[s]) {
        order[pos] = v;
        s = prev;
        break;
      }
    }
  }
  result.width = dp[full];
  result.order = order;
  result.cert = decomposition_from_order(g, order);
  return result;
}

TreewidthResult min_fill_decomposition(const Graph& g) {
  const int n = g.num_vertices();
  EliminationGame game(g);
  std::vector<long> fill(n);
  for (Vertex v = 0; v < n; ++v) fill[v] = game.fill_in(v);
  std::vector<Vertex> order;
  std::vector<std::vector<Vertex>> later(n);
  std::vector<int> stamp(n, -1);
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!game.alive(v)) continue;
      if (best < 0 || fill[v] < fill[best] ||
          (fill[v] == fill[best] &&
           game.neighbours(v).size() < game.neighbours(best).size()))
        best = v;
    }
    later[best] = game.eliminate(best);
    order.push_back(best);
    std::vector<Vertex> affected;
    for (Vertex a : later[best]) {
      if (stamp[a] != step) {
        stamp[a] = step;
        affected.push_back(a);
      }
      for (Vertex b : game.neighbours(a))
        if (stamp[b] != step) {
          stamp[b] = step;
          affected.push_back(b);
        }
    }
    for (Vertex a : affected) fill[a] = game.fill_in(a);
  }
  TreewidthResult result;
  result.order = order;
  result.cert = assemble(n, order, later);
  result.width = result.cert.width();
  return result;
}

int minor_min_width(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::set<Vertex>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  std::vector<char> alive(n, 1);
  int lb = 0;
  for (int left = n; left > 1; --left) {
    Vertex v = -1;
    for (Vertex x = 0; x < n; ++x)
      if (alive[x] && (v < 0 || adj[x].size() < adj[v].size())) v = x;
    lb = std::max(lb, static_cast<int>(adj[v].size()));
    alive[v] = 0;
    if (adj[v].empty()) continue;
    Vertex u = -1;
    for (Vertex w : adj[v])
      if (u < 0 || adj[w].size() < adj[u].size()) u = w;
    for (Vertex w : adj[v]) {
      adj[w].erase(v);
      if (w != u) {
        adj[w].insert(u);
        adj[u].insert(w);
      }
    }
    adj[v].clear();
  }
  return lb;
}

TreewidthResult best_decomposition(const Graph& g, int cap, bool* exact) {
  if (g.num_vertices() <= cap) {
    if (exact) *exact = true;
    return exact_treewidth(g, cap);
  }
  auto res = min_fill_decomposition(g);
  if (exact) *exact = res.width == minor_min_width(g);
  return res;
}

TreeDecomposition lift_decomposition(const TreeDecomposition& td, int c) {
  TreeDecomposition out;
  out.tree = td.tree;
  out.bags.reserve(td.bags.size());
  for (const auto& bag : td.bags) {
    std::vector<Vertex> lifted;
    lifted.reserve(bag.size() * c);
    for (Vertex x : bag)
      for (int i = 0; i < c; ++i) lifted.push_back(x * c + i);
    out.bags.push_back(std::move(lifted));
  }
  return out;
}

void write_pace(std::ostream& out, const TreeDecomposition& td, int n) {
  out << "s td " << td.bags.size() << ' ' << (td.width() + 1) << ' ' << n << '\n';
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << (i + 1);
    for (Vertex v : td.bags[i]) out << ' ' << (v + 1);
    out << '\n';
  }
  for (const Edge& e : td.tree.edges()) out << (e.u + 1) << ' ' << (e.v + 1) << '\n';
}

TreeDecomposition read_pace(std::istream& in, int* n) {
  TreeDecomposition td;
  std::string line;
  bool header = false;
  int bags = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (line[0] == 's') {
      std::string s, tdword;
      int width_plus_one = 0, vertices = 0;
      if (!(ls >> s >> tdword >> bags >> width_plus_one >> vertices) || tdword != "td" ||
          bags < 0)
        throw Error(ErrorKind::InvalidInput, "bad PACE header: " + line);
      td.tree = Graph(bags);
      td.bags.assign(bags, {});
      if (n) *n = vertices;
      header = true;
    } else if (line[0] == 'b') {
      if (!header) throw Error(ErrorKind::InvalidInput, "bag before header");
      std::string b;
      int id = 0;
      ls >> b >> id;
      if (id < 1 || id > bags) throw Error(ErrorKind::InvalidInput, "bad bag id: " + line);
      int v;
      while (ls >> v) td.bags[id - 1].push_back(v - 1);
      std::sort(td.bags[id - 1].begin(), td.bags[id - 1].end());
    } else {
      if (!header) throw Error(ErrorKind::InvalidInput, "edge before header");
      int a = 0, b = 0;
      if (!(ls >> a >> b) || a < 1 || b < 1 || a > bags || b > bags)
        throw Error(ErrorKind::InvalidInput, "bad tree edge: " + line);
      td.tree.add_edge(a - 1, b - 1);
    }
  }
  if (!header) throw Error(ErrorKind::InvalidInput, "missing PACE header");
  return td;
}

}  // namespace bpk
