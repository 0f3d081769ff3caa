// Runs the twelve acceptance criteria and prints one line per criterion.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "bpk/cli.hpp"
#include "bpk/colouring.hpp"
#include "bpk/error.hpp"
#include "bpk/families.hpp"
#include "bpk/matching.hpp"
#include "bpk/planarisation.hpp"
#include "bpk/product_structure.hpp"
#include "bpk/recognition.hpp"
#include "bpk/treewidth.hpp"
#include "oracles.hpp"

using namespace bpk;

namespace {

// Runtime limits in seconds.
constexpr double kLimitOracles = 10;
constexpr double kLimitTreewidth = 120;
constexpr double kLimitWalks = 300;
constexpr double kLimitSeparation = 180;

constexpr int kRandomEdgeSets = 300;
constexpr int kMaxEdgesPerSet = 12;
constexpr int kRandomTwGraphs = 50;
constexpr int kMinWalkInstances = 200;
constexpr int kMinCircular = 50;
constexpr int kMaxCircularVertices = 16;
constexpr int kFreenessCap = 15;
constexpr int kPipelineCap = 16;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Instance {
  std::string name;
  TopologicalDrawing drawing;
  bool circular = false;
};

std::vector<Instance> battery() {
  std::vector<Instance> out;
  auto add = [&](std::string name, TopologicalDrawing d) {
    const bool circ = d.circular_order().has_value();
    out.push_back({std::move(name), std::move(d), circ});
  };
  for (int n = 2; n <= 6; ++n) add("crossing_stars(" + std::to_string(n) + ")", crossing_stars(n));
  for (int n = 3; n <= 8; ++n) add("k3n(" + std::to_string(n) + ")", k3n(n));
  for (int n = 2; n <= 5; ++n) add("k_2k2_n(1," + std::to_string(n) + ")", k_2k2_n(1, n));
  for (int n = 2; n <= 4; ++n) add("k_2k2_n(2," + std::to_string(n) + ")", k_2k2_n(2, n));
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 4}, {2, 3}, {2, 5}, {3, 4}, {3, 6}, {4, 4}})
    add("circular_complete_bipartite(" + std::to_string(a) + "," + std::to_string(b) + ")",
        circular_complete_bipartite(a, b));
  for (int n = 2; n <= 4; ++n) add("grid_apex(" + std::to_string(n) + ")", grid_apex(n));
  const double ps[] = {0.25, 0.35, 0.45};
  for (std::uint64_t seed = 1; seed <= 70; ++seed)
    add("random_circular#" + std::to_string(seed),
        random_circular(7 + static_cast<int>(seed % 8), ps[seed % 3], seed));
  for (std::uint64_t seed = 1; seed <= 60; ++seed)
    add("random_segments#" + std::to_string(seed),
        random_segments(8 + static_cast<int>(seed % 5), 10 + static_cast<int>(seed % 11), seed));
  for (std::uint64_t seed = 1; seed <= 60; ++seed)
    add("random_polylines#" + std::to_string(seed),
        random_polylines(6 + static_cast<int>(seed % 4), 8 + static_cast<int>(seed % 7),
                         1 + static_cast<int>(seed % 2), seed));
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string timing(double s, double limit) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2fs (limit %.0fs)", s, limit);
  return buf;
}

// h(c) from the closed form (2^{c+1}k^c - 2k - 1)/(2k - 1).
mpz_class closed_form_h(int k, int c) {
  mpz_class pk, p2;
  mpz_ui_pow_ui(pk.get_mpz_t(), k, c);
  mpz_ui_pow_ui(p2.get_mpz_t(), 2, c + 1);
  return (p2 * pk - 2 * k - 1) / (2 * k - 1);
}

// ------------------------------------------------------------------ criteria

Outcome criterion1() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(101);
  int mismatches = 0, folklore = 0, bad_witness = 0;
  for (int round = 0; round < kRandomEdgeSets; ++round) {
    const int n = 4 + static_cast<int>(rng() % 7);
    Graph g = oracle::random_graph(n, 0.6, rng);
    std::vector<EdgeId> all(g.num_edges());
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    const int take = std::min<int>(all.size(), static_cast<int>(rng() % (kMaxEdgesPerSet + 1)));
    std::vector<EdgeId> es(all.begin(), all.begin() + take);
    std::sort(es.begin(), es.end());
    auto mm = max_matching(g, es);
    auto vc = min_vertex_cover(g, es);
    const int mu = oracle::matching_number(g, es);
    const int tau = oracle::cover_number(g, es);
    mismatches += mm.size != mu || vc.size != tau;
    folklore += !(mu <= tau && tau <= 2 * mu);
    bad_witness += !is_matching(g, mm.witness) || !is_vertex_cover(g, es, vc.witness) ||
                   static_cast<int>(mm.witness.size()) != mm.size;
  }
  const double t = seconds_since(start);
  Outcome o;
  o.pass = mismatches == 0 && folklore == 0 && bad_witness == 0 && t < kLimitOracles;
  o.detail = std::to_string(kRandomEdgeSets) + " edge sets, " + std::to_string(mismatches) +
             " oracle mismatches, " + std::to_string(folklore) + " mu<=tau<=2mu failures, " +
             timing(t, kLimitOracles);
  return o;
}

Outcome criterion2() {
  const auto start = std::chrono::steady_clock::now();
  std::string grids;
  bool ok = true;
  for (int n = 2; n <= 5; ++n) {
    auto res = exact_treewidth(grid_graph(n, n), n * n);
    ok = ok && res.width == n && validate_tree_decomposition(grid_graph(n, n), res.cert).ok();
    grids += (grids.empty() ? "" : ",") + std::to_string(res.width);
  }
  std::mt19937_64 rng(202);
  int mismatches = 0;
  for (int round = 0; round < kRandomTwGraphs; ++round) {
    Graph g = oracle::random_graph(9, 0.2 + 0.6 * (round % 10) / 10.0, rng);
    auto res = exact_treewidth(g);
    mismatches += res.width != oracle::permutation_treewidth(g) ||
                  !validate_tree_decomposition(g, res.cert).ok() || res.cert.width() != res.width;
  }
  const double t = seconds_since(start);
  Outcome o;
  o.pass = ok && mismatches == 0 && t < kLimitTreewidth;
  o.detail = "grid tw n=2..5: " + grids + "; " + std::to_string(kRandomTwGraphs) +
             " random 9-vertex graphs, " + std::to_string(mismatches) +
             " mismatches vs 9! oracle, " + timing(t, kLimitTreewidth);
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::ostringstream why;
  for (int n = 2; n <= 5; ++n) {
    auto d = crossing_stars(n);
    Graph x = crossing_graph(d);
    // Bipartition by star: edges at centre 0 versus edges at centre n+1.
    bool iso = x.num_edges() == n * n && x.num_vertices() == 2 * n;
    for (const Edge& e : x.edges()) {
      const bool a0 = d.base().edge(e.u).u == 0, b0 = d.base().edge(e.v).u == 0;
      iso = iso && a0 != b0;
    }
    if (matching_planarity(d) != 1 || !iso) {
      o.pass = false;
      why << " crossing_stars(" << n << ")";
    }
  }
  for (int n = 3; n <= 8; ++n) {
    auto d = k3n(n);
    if (matching_planarity(d) != 1 || cover_planarity(d) != 1) {
      o.pass = false;
      why << " k3n(" << n << ")";
    }
  }
  std::vector<TopologicalDrawing> planar{circular_complete_bipartite(1, 6)};
  for (int n = 4; n <= 9; ++n) {
    CircularSpec spec{n, {}};
    for (int i = 0; i < n; ++i) spec.chords.push_back({i, (i + 1) % n});
    for (int i = 2; i + 1 < n; ++i) spec.chords.push_back({0, i});
    planar.push_back(circular_drawing(spec));
  }
  for (int n = 2; n <= 4; ++n) {
    Graph g = grid_graph(n, n);
    Geometry geo;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) geo.coords.push_back({mpq_class(j), mpq_class(i)});
    geo.bends.assign(g.num_edges(), {});
    planar.push_back(from_polylines(g, geo));
  }
  int planar_ok = 0;
  for (const auto& d : planar) {
    auto p = drawing_profile(d);
    const bool zero = p.crossings == 0 && p.max_crossings_per_edge == 0 && p.per_pair_max == 0 &&
                      p.min_k_planar == 0 && p.matching_k == 0 && p.cover_k == 0 &&
                      p.largest_fan <= 1 && is_planar(d.base());
    planar_ok += zero;
  }
  if (planar_ok != static_cast<int>(planar.size())) {
    o.pass = false;
    why << " planar drawings " << planar_ok << "/" << planar.size();
  }
  o.detail = "crossing_stars n=2..5, k3n n=3..8, " + std::to_string(planar.size()) +
             " planar drawings all-zero" + (o.pass ? "" : "; failed:" + why.str());
  return o;
}

struct BatteryRun {
  std::string instance;
  std::string method;
  bool circular = false;
  ColouredPlanarisation cp;
  CplModel model;
  int k_lower = 0;
};

// Criteria 4, 5 and 6 share one pass over the battery.
struct WalkResults {
  Outcome walks, cpl, distance;
};

WalkResults criteria4to6(const std::vector<Instance>& insts) {
  const auto start = std::chrono::steady_clock::now();
  WalkResults r;
  int pairs = 0, walk_fail = 0, cpl_fail = 0, paper_a = 0, paper_a_fail = 0, paper_b = 0,
      paper_b_fail = 0, dist_runs = 0, dist_fail = 0, c2k1 = 0, c2k1_max = 0;
  std::string first_walk, first_cpl, first_dist;
  for (const auto& inst : insts) {
    const auto& d = inst.drawing;
    auto product = product_transparent(d);
    const std::vector<std::pair<std::string, std::pair<std::vector<int>, StarForestCover>>> runs{
        {"greedy",
         {greedy_transparent(d).colour,
          build_star_forest_cover(d.base(), greedy_transparent(d).colour)}},
        {"product", {product.colouring.colour, product.cover}}};
    for (const auto& [method, cc] : runs) {
      const auto& [colour, cover] = cc;
      ++pairs;
      const std::string tag = inst.name + "/" + method;
      auto cp = coloured_planarisation(d, colour);
      Report rep = validate_coloured_planarisation(d, cp);
      rep.merge(verify_walk_properties(d, cp));
      if (!rep.ok()) {
        ++walk_fail;
        if (first_walk.empty()) first_walk = tag + " " + rep.violations[0].code;
      }

      auto model = cpl_model(d, cp, cover);
      Report crep = validate_cpl(d, cp, model);
      if (!crep.ok()) {
        ++cpl_fail;
        if (first_cpl.empty()) first_cpl = tag + " " + crep.violations[0].code;
      }
      const long long cm = static_cast<long long>(model.c - 1) * model.m;
      if (model.s <= 5) {
        ++paper_a;
        paper_a_fail += model.t > 1 + 5 * cm;
      }
      if (inst.circular && model.s <= 3) {
        ++paper_b;
        paper_b_fail += model.t > 1 + 3 * cm;
      }

      const int k = measure_k_lower(d, colour);
      if (k >= 1) {
        ++dist_runs;
        auto dist = distance_check(d, cp, k);
        const mpz_class h = closed_form_h(k, cp.c);
        if (!(mpz_class(dist.max_observed) <= h) || dist.bound != h) {
          ++dist_fail;
          if (first_dist.empty()) first_dist = tag + " " + dist.witness;
        }
        if (cp.c == 2 && k == 1) {
          ++c2k1;
          c2k1_max = std::max(c2k1_max, dist.max_observed);
        }
      }
    }
  }
  const double t = seconds_since(start);
  const int n = static_cast<int>(insts.size());
  r.walks.pass = n >= kMinWalkInstances && walk_fail == 0 && t < kLimitWalks;
  r.walks.detail = std::to_string(n) + " instances x {greedy, product} = " +
                   std::to_string(pairs) + " runs, " + std::to_string(walk_fail) +
                   " counterexamples" + (first_walk.empty() ? "" : " (" + first_walk + ")") +
                   ", " + timing(t, kLimitWalks);
  r.cpl.pass = cpl_fail == 0 && paper_a_fail == 0 && paper_b_fail == 0;
  r.cpl.detail = std::to_string(pairs) + " models valid with property (c) and t<=1+s(c-1)m: " +
                 std::to_string(pairs - cpl_fail) + "; s<=5 runs " + std::to_string(paper_a) +
                 " (t<=1+5(c-1)m failures " + std::to_string(paper_a_fail) +
                 "); circular s<=3 runs " + std::to_string(paper_b) +
                 " (t<=1+3(c-1)m failures " + std::to_string(paper_b_fail) + ")" +
                 (first_cpl.empty() ? "" : "; first failure " + first_cpl);
  r.distance.pass = dist_fail == 0;
  r.distance.detail = std::to_string(dist_runs) + " runs with k>=1, " +
                      std::to_string(dist_fail) + " above h(c); c=2,k=1: " +
                      std::to_string(c2k1) + " runs, max observed " + std::to_string(c2k1_max) +
                      " vs bound 5" + (first_dist.empty() ? "" : "; " + first_dist);
  return r;
}

std::string measured(const BoundReport& br, const std::string& key) {
  for (const auto& [k, v] : br.measured)
    if (k == key) return v;
  for (const auto& [k, v] : br.formulas)
    if (k.rfind(key, 0) == 0) return v;
  return "";
}

Outcome criterion7() {
  Outcome o;
  int exact_runs = 0, upper_only = 0, failures = 0;
  std::string first;
  auto run = [&](const std::string& name, const TopologicalDrawing& d,
                 const std::vector<int>& colour) {
    auto br = circular_tw_bound(d, colour, 20);
    const bool exact = !measured(br, "tw_Gphi").empty() && !measured(br, "tw_G").empty() &&
                       measured(br, "tw_G").find("skipped") == std::string::npos;
    if (!br.pass()) {
      ++failures;
      for (const auto& c : br.checks)
        if (!c.pass && first.empty()) first = name + " " + c.name + " " + c.lhs + " > " + c.rhs;
    }
    (exact ? exact_runs : upper_only) += 1;
    return br;
  };
  for (std::uint64_t seed = 1; exact_runs < kMinCircular + 10 && seed <= 400; ++seed) {
    const int n = 8 + static_cast<int>(seed % (kMaxCircularVertices - 7));
    auto d = random_circular(n, 0.2 + 0.05 * (seed % 4), 1000 + seed);
    run("random_circular#" + std::to_string(1000 + seed), d, greedy_transparent(d).colour);
  }
  auto k25 = gen_family("circular_complete_bipartite", FamilyParams{});
  auto br = run("K_{2,5}", k25.drawing, k25.colouring);
  const bool k25_ok = measured(br, "stated_bound") == "23" && measured(br, "tw_G") == "2" &&
                      measured(br, "m") == "1" && measured(br, "c") == "2";
  o.pass = exact_runs >= kMinCircular && failures == 0 && k25_ok;
  o.detail = std::to_string(exact_runs) + " circular instances (|V|<=" +
             std::to_string(kMaxCircularVertices) + ") with exact tw(G) and tw(G^phi), " +
             std::to_string(upper_only) + " more with an upper bound only, " +
             std::to_string(failures) + " chain failures; K_{2,5}: bound " +
             measured(br, "stated_bound") + ", tw " + measured(br, "tw_G") + ", m " +
             measured(br, "m") + ", c " + measured(br, "c") +
             (first.empty() ? "" : "; " + first);
  return o;
}

Outcome criterion8() {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  // K_{2,5}: a = 0, b = 1, leaves 2..6. Fix a at position 0 and place the
  // other six vertices in every order.
  std::vector<int> rest{1, 2, 3, 4, 5, 6};
  int orders = 0, pattern = 0, not_min1 = 0;
  do {
    std::vector<int> pos(7);
    pos[0] = 0;
    for (int i = 0; i < 6; ++i) pos[rest[i]] = i + 1;
    CircularSpec spec{7, {}};
    for (int hub : {0, 1})
      for (int leaf = 2; leaf <= 6; ++leaf) spec.chords.push_back({pos[hub], pos[leaf]});
    auto d = circular_drawing(spec);
    const Graph& g = d.base();
    const auto inter = oracle::interleaving_pairs(g);
    ++orders;
    // Leaves on the larger arc between a and b, ordered from a.
    const int pb = pos[1];
    std::vector<int> inside, outside;
    for (int p = 1; p < pb; ++p) inside.push_back(p);
    for (int p = 6; p > pb; --p) outside.push_back(p);
    const auto& arc = inside.size() >= outside.size() ? inside : outside;
    const int s = static_cast<int>(arc.size());
    bool found = s >= 3;
    auto crosses = [&](int x1, int y1, int x2, int y2) {
      auto e = g.find_edge(x1, y1), f = g.find_edge(x2, y2);
      if (!e || !f) return false;
      auto cr = d.crossers(*e);
      // Cross-check the drawing against plain interleaving of positions.
      const bool drawn = std::binary_search(cr.begin(), cr.end(), *f);
      return drawn && inter.count({std::min(*e, *f), std::max(*e, *f)}) > 0;
    };
    const int pa = 0;
    for (int i = 0; i + 1 < s && found; ++i) found = crosses(pa, arc[s - 1], pb, arc[i]);
    for (int i = 1; i < s && found; ++i) found = crosses(pb, arc[0], pa, arc[i]);
    pattern += found;
    not_min1 += drawing_profile(d).min_k_planar >= 2;
  } while (std::next_permutation(rest.begin(), rest.end()));

  std::string grid;
  bool grid_ok = true;
  for (int n = 2; n <= 4; ++n) {
    FamilyParams p;
    p.n = n;
    auto inst = gen_family("grid_apex", p);
    auto cp = coloured_planarisation(inst.drawing, inst.colouring);
    const int m = measure_m(inst.drawing, cp);
    const int tw = exact_treewidth(inst.drawing.base()).width;
    grid_ok = grid_ok && m == 1 && cp.c == 2 && tw == n + 1 &&
              verify_transparent(inst.drawing, inst.colouring).ok();
    grid += " n=" + std::to_string(n) + ":m=" + std::to_string(m) + ",c=" +
            std::to_string(cp.c) + ",tw=" + std::to_string(tw);
  }
  const double t = seconds_since(start);
  o.pass = pattern == orders && not_min1 == orders && grid_ok && t < kLimitSeparation;
  o.detail = "K_{2,5}: " + std::to_string(orders) + " circular orders, pattern in " +
             std::to_string(pattern) + ", not min-1-planar in " + std::to_string(not_min1) +
             "; grid_apex" + grid + "; " + timing(t, kLimitSeparation);
  return o;
}

Outcome criterion9(const std::vector<Instance>& insts) {
  Outcome o;
  int runs = 0, failures = 0, oracle_fail = 0;
  std::string first;
  for (const auto& inst : insts) {
    auto res = run_pipeline(inst.drawing, kPipelineCap);
    ++runs;
    const auto& g = inst.drawing.base();
    const int lw = oracle::layered_width_oracle(g, res.guest_ld.decomposition.tree,
                                                res.guest_ld.decomposition.bags,
                                                res.guest_ld.layering.layers);
    const int hw = oracle::layered_width_oracle(res.model.host, res.host_ld.decomposition.tree,
                                                res.host_ld.decomposition.bags,
                                                res.host_ld.layering.layers);
    const bool ok = lw >= 0 && hw >= 0 && lw == res.guest_ld.layered_width &&
                    hw == res.host_ld.layered_width &&
                    validate_layered_decomposition(g, res.guest_ld).ok() &&
                    validate_layered_decomposition(res.model.host, res.host_ld).ok() &&
                    static_cast<long long>(lw) <= (4LL * res.wsm.r + 1) * hw;
    oracle_fail += lw < 0 || hw < 0;
    if (!ok || !res.report.pass()) {
      ++failures;
      if (first.empty()) first = inst.name;
    }
  }
  o.pass = failures == 0;
  o.detail = std::to_string(runs) + " pipeline runs, " + std::to_string(failures) +
             " failures (" + std::to_string(oracle_fail) + " rejected by the independent check)" +
             (first.empty() ? "" : "; first " + first);
  return o;
}

Outcome criterion10(const std::vector<Instance>& insts) {
  Outcome o;
  int fails = 0, mismatch = 0;
  for (const auto& inst : insts) {
    const auto& d = inst.drawing;
    const int k = matching_planarity(d);
    const int j = 2 * k;
    // d_j |V| = 3 (j+1)^{j+1} |V| / j^j, with d_0 = 3.
    mpz_class num = 3 * mpz_class(d.base().num_vertices()), den = 1;
    if (j > 0) {
      mpz_class a, b;
      mpz_ui_pow_ui(a.get_mpz_t(), j + 1, j + 1);
      mpz_ui_pow_ui(b.get_mpz_t(), j, j);
      num *= a;
      den = b;
    }
    const bool ok = mpz_class(d.base().num_edges()) * den <= num;
    fails += !ok;
    mismatch += density_check(d).pass != ok;
  }
  o.pass = fails == 0 && mismatch == 0;
  o.detail = std::to_string(insts.size()) + " instances, " + std::to_string(fails) +
             " above d_{2k}|V|, " + std::to_string(mismatch) + " library/oracle disagreements";
  return o;
}

Outcome criterion11(const std::vector<Instance>& insts) {
  Outcome o;
  int forests = 0, skipped = 0, violations = 0, mismatch = 0, max_clique_seen = 0,
      max_biclique_seen = 0;
  for (const auto& inst : insts) {
    const auto& d = inst.drawing;
    for (const auto& sf : fan_refined_star_forests(d)) {
      auto h = star_component_crossing_graph(d, sf).h;
      if (h.num_vertices() > kFreenessCap) {
        ++skipped;
        continue;
      }
      ++forests;
      auto fr = star_freeness(d, sf, kFreenessCap);
      const int clique = oracle::subset_clique(h);
      const int biclique = oracle::subset_biclique(h);
      mismatch += fr.clique != clique || fr.biclique != biclique;
      const int k = fr.k;
      violations += clique >= 12 * k * k + 3 * k + 2 || biclique >= 16 * k * k + 3 * k + 1;
      max_clique_seen = std::max(max_clique_seen, clique);
      max_biclique_seen = std::max(max_biclique_seen, biclique);
    }
  }
  o.pass = violations == 0 && mismatch == 0 && forests > 0;
  o.detail = std::to_string(forests) + " star-forest sub-drawings (<=" +
             std::to_string(kFreenessCap) + " components, " + std::to_string(skipped) +
             " larger skipped), " + std::to_string(violations) + " forbidden cliques/bicliques, " +
             "largest clique " + std::to_string(max_clique_seen) + ", largest biclique " +
             std::to_string(max_biclique_seen) + ", " + std::to_string(mismatch) +
             " library/oracle disagreements";
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

Outcome criterion12(const std::string& bpk, const std::string& manifest) {
  Outcome o;
  const std::string a = "acceptance_bench_1.csv", b = "acceptance_bench_2.csv";
  std::vector<int> codes;
  for (const auto& out : {a, b}) {
    std::remove(out.c_str());
    const std::string cmd = "\"" + bpk + "\" bench \"" + manifest + "\" --out " + out;
    codes.push_back(std::system(cmd.c_str()));
  }
  const std::string x = slurp(a), y = slurp(b);
  // The in-process front end must agree with the binary.
  std::istringstream in;
  std::ostringstream out, err;
  const int code = run_cli({"bench", manifest}, in, out, err);
  const int rows = static_cast<int>(std::count(x.begin(), x.end(), '\n')) - 1;
  o.pass = codes[0] == 0 && codes[1] == 0 && code == 0 && !x.empty() && x == y && x == out.str();
  o.detail = std::to_string(rows) + " rows, " + std::to_string(x.size()) + " bytes, runs " +
             (x == y ? "identical" : "DIFFER") + ", in-process " +
             (x == out.str() ? "identical" : "DIFFERS") + ", exit codes " +
             std::to_string(codes[0]) + "/" + std::to_string(codes[1]) + "/" +
             std::to_string(code);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::string manifest = "manifests/bench.json";
  std::string bpk = BPK_BINARY;
  app.add_option("--manifest", manifest, "Bench manifest for the determinism check");
  app.add_option("--bpk", bpk, "Path to the bpk binary");
  CLI11_PARSE(app, argc, argv);

  const auto insts = battery();
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria;
  WalkResults walks;
  bool walks_done = false;
  auto walk = [&](int which) {
    if (!walks_done) {
      walks = criteria4to6(insts);
      walks_done = true;
    }
    return which == 4 ? walks.walks : which == 5 ? walks.cpl : walks.distance;
  };
  criteria.push_back({"oracle equivalence", criterion1});
  criteria.push_back({"exact treewidth", criterion2});
  criteria.push_back({"recognition", criterion3});
  criteria.push_back({"walk battery", [&] { return walk(4); }});
  criteria.push_back({"coloured planarisation model", [&] { return walk(5); }});
  criteria.push_back({"distance bound", [&] { return walk(6); }});
  criteria.push_back({"circular bounds", criterion7});
  criteria.push_back({"separation checks", criterion8});
  criteria.push_back({"ltw transfer", [&] { return criterion9(insts); }});
  criteria.push_back({"density", [&] { return criterion10(insts); }});
  criteria.push_back({"free-ness", [&] { return criterion11(insts); }});
  criteria.push_back({"determinism", [&] { return criterion12(bpk, manifest); }});

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::printf("[%s] %2zu %-30s %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
