#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "bpk/closure.hpp"
#include "bpk/colouring.hpp"
#include "bpk/layering.hpp"
#include "bpk/minor.hpp"
#include "bpk/planarisation.hpp"

namespace bpk {

// Model of G in G^phi ⊠ K_t. Host vertex (x, i), i in 1..t, has id x*t + i-1.
struct CplModel {
  Graph host;
  int t = 1;
  MinorModel mu;
  // B_x sorted by vertex id; lambda_x(v) is the 1-based position of v.
  std::vector<std::vector<Vertex>> b_sets;
  int s = 0;
  int m = 0;
  int c = 0;

  Vertex host_vertex(Vertex x, int i) const { return x * t + (i - 1); }
};

// B_v = {v} for originals; otherwise the dominant endpoints of the edges e
// with x on W_e and colour(e) >= level(x). Throws CoverMismatch when the
// cover is not a star-forest refinement of cp's colouring.
CplModel cpl_model(const TopologicalDrawing& d, const ColouredPlanarisation& cp,
                   const StarForestCover& cover);

// Model axioms, (v,1) in mu(v), t = max |B_x|, t <= 1 + s(c-1)m, and every
// (x, i) in mu(v) has x = v or x inside W_vw for some edge vw.
Report validate_cpl(const TopologicalDrawing& d, const ColouredPlanarisation& cp,
                    const CplModel& model);

// h(1) = 1, h(i) = 2k(h(i-1) + 1) + 1. Equals (2^{i+1}k^i - 2k - 1)/(2k - 1).
mpz_class distance_bound(int k, int c);

struct DistanceResult {
  int k = 0;
  int c = 0;
  int max_observed = 0;
  mpz_class bound;   // h(c); 1 when k = 0
  bool k_zero = false;
  bool pass = false;
  std::string witness;  // "edge e vertex x distance d" for the worst pair
};

// max over e = uw and x in W_e minus {u, w} of dist(u, x) and dist(w, x).
DistanceResult distance_check(const TopologicalDrawing& d, const ColouredPlanarisation& cp,
                              int k);

struct WeakShallowModel {
  MinorModel mu;
  int r = 0;
  std::vector<Vertex> origins;
  int measured = 0;  // max over v of the distance from its origin to mu(v)
};

// Radii beyond this are stored clamped; every distance in a desk-scale host
// is far smaller.
inline constexpr int kRadiusClamp = 1 << 28;

// r = h(c) for k = measure_k_lower (r = 0 when k = 0), origins (v, 1).
// Throws RadiusExceeded if some branch set is farther than r from its origin.
WeakShallowModel weak_shallow_from_cpl(const TopologicalDrawing& d,
                                       const ColouredPlanarisation& cp, const CplModel& model);

Report validate_weak_shallow(const Graph& guest, const Graph& host, const WeakShallowModel& w);

// Exact (or min-fill above the cap) decomposition of G^phi lifted over K_t,
// with a componentwise BFS layering of the host.
LayeredDecomposition host_layered_decomposition(const ColouredPlanarisation& cp, int t, int cap,
                                                bool* exact = nullptr);

// Bags B2 = union of X_h over the host bag; guest layers are blocks of 2r+1
// consecutive host layers, by origin, with empty blocks dropped. Throws
// ModelHostMismatch when the model does not fit the host.
LayeredDecomposition ltw_transfer(const Graph& guest, const Graph& host,
                                  const LayeredDecomposition& host_ld, const WeakShallowModel& w);

// An integer that may be too large to print; text is exact up to 60 digits.
struct BigValue {
  std::string text;
  double log10 = 0;
};
BigValue big_value(const mpz_class& v);

struct Check {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

struct BoundReport {
  std::string instance;
  std::string kind;  // circular | radius | pipeline
  std::vector<std::pair<std::string, std::string>> measured;
  std::vector<std::pair<std::string, std::string>> formulas;
  std::vector<Check> checks;

  bool pass() const;
  void measure(const std::string& key, const std::string& value) {
    measured.emplace_back(key, value);
  }
  void measure(const std::string& key, long long value) { measure(key, std::to_string(value)); }
  void formula(const std::string& key, const std::string& value) {
    formulas.emplace_back(key, value);
  }
  void check(const std::string& name, const mpz_class& lhs, const mpz_class& rhs);
  void check(const std::string& name, bool ok, const std::string& detail = "");
};

Json bound_report_to_json(const BoundReport& r);
std::string bound_report_table(const BoundReport& r);

// 9mc(c-1) + 3c - 1 against the exact treewidth chain. Throws NotCircular.
BoundReport circular_tw_bound(const TopologicalDrawing& d, const std::vector<int>& colour,
                              int cap = kDefaultTreewidthCap);

// (6(t+1)r + 3c - 1)(1 + s(c-1)m) - 1 with t the largest lower-colour crossing
// count over tree edges and r the tree radius. Throws NotSpanning.
BoundReport radius_tw_bound(const TopologicalDrawing& d, const std::vector<int>& colour,
                            const RootedTree& tree, int cap = kDefaultTreewidthCap);

// BFS spanning tree of a connected graph. Throws Disconnected.
RootedTree bfs_spanning_tree(const Graph& g, Vertex root);

struct PipelineResult {
  ProductColouring colouring;
  ColouredPlanarisation cp;
  CplModel model;
  DistanceResult distance;
  WeakShallowModel wsm;
  LayeredDecomposition host_ld;
  LayeredDecomposition guest_ld;
  bool host_exact = false;
  BoundReport report;
};

// Product colouring, coloured planarisation, CPL model, distance check, weak
// shallow model and the layered-treewidth transfer, with every certificate
// validated into the report.
PipelineResult run_pipeline(const TopologicalDrawing& d, int cap = kDefaultTreewidthCap);
BoundReport pipeline_report(const TopologicalDrawing& d, int cap = kDefaultTreewidthCap);

}  // namespace bpk
