#include <algorithm>
#include <climits>
#include <map>
#include <set>

#include "bpk/error.hpp"
#include "bpk/product_structure.hpp"
#include "bpk/products.hpp"

namespace bpk {

namespace {

Graph complete(int t) {
  Graph k(t);
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) k.add_edge(i, j);
  return k;
}

// Interior vertex sets of the walks.
std::vector<std::set<Vertex>> walk_interiors(const ColouredPlanarisation& cp) {
  std::vector<std::set<Vertex>> out(cp.walks.size());
  for (std::size_t e = 0; e < cp.walks.size(); ++e) {
    const auto& w = cp.walks[e];
    for (std::size_t i = 1; i + 1 < w.size(); ++i) out[e].insert(w[i]);
  }
  return out;
}

}  // namespace

CplModel cpl_model(const TopologicalDrawing& d, const ColouredPlanarisation& cp,
                   const StarForestCover& cover) {
  const Graph& g = d.base();
  Report rep = validate_cover(g, cp.colour, cover);
  if (!rep.ok())
    throw Error(ErrorKind::CoverMismatch,
                rep.violations[0].code + ": " + rep.violations[0].detail);
  const int n = g.num_vertices();
  const int nv = cp.g.num_vertices();

  CplModel model;
  model.s = cover.s;
  model.c = cp.c;
  model.m = measure_m(d, cp);
  model.b_sets.resize(nv);
  for (Vertex v = 0; v < n; ++v) model.b_sets[v] = {v};
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    for (Vertex x : cp.walks[e])
      if (!cp.is_original(x) && cp.colour[e] >= cp.level[x])
        model.b_sets[x].push_back(cover.dominant[e]);
  model.t = 1;
  for (auto& b : model.b_sets) {
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    model.t = std::max(model.t, static_cast<int>(b.size()));
  }

  model.host = strong_product(cp.g, complete(model.t));
  model.mu.branch_sets.assign(n, {});
  for (Vertex x = 0; x < nv; ++x)
    for (std::size_t i = 0; i < model.b_sets[x].size(); ++i)
      model.mu.branch_sets[model.b_sets[x][i]].push_back(
          model.host_vertex(x, static_cast<int>(i) + 1));
  for (auto& b : model.mu.branch_sets) std::sort(b.begin(), b.end());
  return model;
}

Report validate_cpl(const TopologicalDrawing& d, const ColouredPlanarisation& cp,
                    const CplModel& model) {
  const Graph& g = d.base();
  Report rep = validate_model(g, model.host, model.mu);
  if (model.host.num_vertices() != cp.g.num_vertices() * model.t)
    rep.add("cpl.host", "host has " + std::to_string(model.host.num_vertices()) + " vertices");
  int t = 1;
  for (const auto& b : model.b_sets) t = std::max(t, static_cast<int>(b.size()));
  if (t != model.t) rep.add("cpl.t", "t " + std::to_string(model.t) + " but max |B_x| " +
                                         std::to_string(t));
  const long long limit = 1 + static_cast<long long>(model.s) * (model.c - 1) * model.m;
  if (model.t > limit)
    rep.add("cpl.t_bound", "t " + std::to_string(model.t) + " > 1+s(c-1)m = " +
                               std::to_string(limit));

  auto interiors = walk_interiors(cp);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto& bs = model.mu.branch_sets[v];
    if (!std::binary_search(bs.begin(), bs.end(), model.host_vertex(v, 1)))
      rep.add("cpl.root", "(v,1) missing for vertex " + std::to_string(v));
    for (Vertex h : bs) {
      const Vertex x = h / model.t;
      if (x == v) continue;
      bool found = false;
      for (EdgeId e : g.incident_edges(v))
        if (interiors[e].count(x)) {
          found = true;
          break;
        }
      if (!found)
        rep.add("cpl.property_c", "vertex " + std::to_string(v) + " host " +
                                      std::to_string(x) + "," +
                                      std::to_string(h % model.t + 1));
    }
  }
  return rep;
}

mpz_class distance_bound(int k, int c) {
  if (c < 1) return 0;
  mpz_class h = 1;
  for (int i = 2; i <= c; ++i) h = 2 * k * (h + 1) + 1;
  return h;
}

DistanceResult distance_check(const TopologicalDrawing& d, const ColouredPlanarisation& cp,
                              int k) {
  const Graph& g = d.base();
  DistanceResult res;
  res.k = k;
  res.c = cp.c;
  res.k_zero = k == 0;
  // With k = 0 nothing is crossed from below, so only the base case applies.
  res.bound = res.k_zero ? mpz_class(1) : distance_bound(k, std::max(cp.c, 1));
  std::vector<std::vector<int>> dist(g.num_vertices());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto& w = cp.walks[e];
    if (w.size() <= 2) continue;
    for (Vertex end : {g.edge(e).u, g.edge(e).v}) {
      if (dist[end].empty()) dist[end] = bfs_distances(cp.g, end);
      for (std::size_t i = 1; i + 1 < w.size(); ++i) {
        const int dd = dist[end][w[i]];
        if (dd > res.max_observed || dd < 0) {
          res.max_observed = dd < 0 ? INT_MAX : dd;
          res.witness = "edge " + std::to_string(e) + " endpoint " + std::to_string(end) +
                        " vertex " + std::to_string(w[i]) + " distance " + std::to_string(dd);
        }
      }
    }
  }
  res.pass = mpz_class(res.max_observed) <= res.bound;
  return res;
}

namespace {

// Largest distance from the origin to a member of the branch set; -1 if some
// member is unreachable.
int reach(const Graph& host, Vertex origin, const std::vector<Vertex>& set) {
  auto dist = bfs_distances(host, origin);
  int worst = 0;
  for (Vertex a : set) {
    if (dist[a] < 0) return -1;
    worst = std::max(worst, dist[a]);
  }
  return worst;
}

}  // namespace

WeakShallowModel weak_shallow_from_cpl(const TopologicalDrawing& d,
                                       const ColouredPlanarisation& cp,
                                       const CplModel& model) {
  const Graph& g = d.base();
  WeakShallowModel w;
  w.mu = model.mu;
  const int k = measure_k_lower(d, cp.colour);
  if (k == 0) {
    w.r = 0;
  } else {
    mpz_class h = distance_bound(k, cp.c);
    w.r = h > kRadiusClamp ? kRadiusClamp : static_cast<int>(h.get_si());
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const Vertex origin = model.host_vertex(v, 1);
    w.origins.push_back(origin);
    const int rv = reach(model.host, origin, w.mu.branch_sets[v]);
    if (rv < 0 || rv > w.r)
      throw Error(ErrorKind::RadiusExceeded,
                  "branch set of vertex " + std::to_string(v) + " reaches distance " +
                      std::to_string(rv) + " > r = " + std::to_string(w.r));
    w.measured = std::max(w.measured, rv);
  }
  return w;
}

Report validate_weak_shallow(const Graph& guest, const Graph& host, const WeakShallowModel& w) {
  Report rep = validate_model(guest, host, w.mu);
  if (static_cast<int>(w.origins.size()) != guest.num_vertices()) {
    rep.add("shallow.origins", "origin count " + std::to_string(w.origins.size()));
    return rep;
  }
  for (Vertex v = 0; v < guest.num_vertices(); ++v) {
    const Vertex o = w.origins[v];
    if (o < 0 || o >= host.num_vertices()) {
      rep.add("shallow.origins", "vertex " + std::to_string(v));
      continue;
    }
    const int rv = reach(host, o, w.mu.branch_sets[v]);
    if (rv < 0 || rv > w.r)
      rep.add("shallow.radius", "vertex " + std::to_string(v) + " distance " +
                                    std::to_string(rv) + " r " + std::to_string(w.r));
  }
  return rep;
}

LayeredDecomposition host_layered_decomposition(const ColouredPlanarisation& cp, int t, int cap,
                                                bool* exact) {
  auto tw = best_decomposition(cp.g, cap, exact);
  Graph host = strong_product(cp.g, complete(t));
  return make_layered(host, lift_decomposition(tw.cert, t), componentwise_bfs_layering(host));
}

LayeredDecomposition ltw_transfer(const Graph& guest, const Graph& host,
                                  const LayeredDecomposition& host_ld,
                                  const WeakShallowModel& w) {
  const int nh = host.num_vertices();
  if (static_cast<int>(w.mu.branch_sets.size()) != guest.num_vertices() ||
      static_cast<int>(w.origins.size()) != guest.num_vertices())
    throw Error(ErrorKind::ModelHostMismatch, "model size differs from the guest");
  for (const auto& bag : host_ld.decomposition.bags)
    for (Vertex h : bag)
      if (h < 0 || h >= nh)
        throw Error(ErrorKind::ModelHostMismatch, "host bag names vertex " + std::to_string(h));
  Report rep = validate_model(guest, host, w.mu);
  if (!rep.ok())
    throw Error(ErrorKind::ModelHostMismatch,
                rep.violations[0].code + ": " + rep.violations[0].detail);

  // X_h holds at most one guest vertex since branch sets are disjoint.
  std::vector<Vertex> owner(nh, -1);
  for (Vertex v = 0; v < guest.num_vertices(); ++v)
    for (Vertex h : w.mu.branch_sets[v]) owner[h] = v;

  LayeredDecomposition out;
  out.decomposition.tree = host_ld.decomposition.tree;
  for (const auto& bag : host_ld.decomposition.bags) {
    std::vector<Vertex> b2;
    for (Vertex h : bag)
      if (owner[h] >= 0) b2.push_back(owner[h]);
    std::sort(b2.begin(), b2.end());
    b2.erase(std::unique(b2.begin(), b2.end()), b2.end());
    out.decomposition.bags.push_back(std::move(b2));
  }

  auto layer_of = host_ld.layering.index(nh);
  const long long block = 2LL * w.r + 1;
  std::map<long long, std::vector<Vertex>> blocks;
  for (Vertex v = 0; v < guest.num_vertices(); ++v) {
    const int li = layer_of[w.origins[v]];
    if (li < 0) throw Error(ErrorKind::ModelHostMismatch, "origin outside the host layering");
    blocks[li / block].push_back(v);
  }
  Layering layering;
  for (auto& [idx, vs] : blocks) layering.layers.push_back(std::move(vs));
  return make_layered(guest, std::move(out.decomposition), std::move(layering));
}

}  // namespace bpk
