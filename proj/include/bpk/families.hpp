#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bpk/drawing.hpp"

namespace bpk {

// mt19937_64 output is fixed by the standard; the draws below avoid the
// implementation-defined std distributions so sequences match across
// platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t next() { return gen_(); }
  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  // True with probability p.
  bool chance(double p);

 private:
  std::mt19937_64 gen_;
};

// Two stars with n leaves each whose edges pairwise cross: centre 0 with leaves
// 1..n, centre n+1 with leaves n+2..2n+1.
TopologicalDrawing crossing_stars(int n);
// K_{3,n}: hubs a = n, b = n+1, c = n+2 and leaves 0..n-1; edge c-v_i crosses
// a-v_j exactly when j > i.
TopologicalDrawing k3n(int n);
// K_{2k+2,n}: k+1 hubs above and k+1 below a row of n leaves. Leaves are
// 0..n-1, hubs n..n+2k+1 (above first).
TopologicalDrawing k_2k2_n(int k, int n);
// K_{a,b} on a circle in the order A_0, B_0..B_{b-1}, A_1..A_{a-1}; vertex id
// equals circle position.
TopologicalDrawing circular_complete_bipartite(int a, int b);
// n x n grid (vertex (i,j) is i*n+j) plus apex n*n outside the grid, straight.
TopologicalDrawing grid_apex(int n);
TopologicalDrawing random_circular(int n, double p, std::uint64_t seed);
// n random points, m random straight segments between them.
TopologicalDrawing random_segments(int n, int m, std::uint64_t seed);
// As random_segments but every edge gets `bends` random bend points.
TopologicalDrawing random_polylines(int n, int m, int bends, std::uint64_t seed);

struct FamilyParams {
  int n = 4;
  int m = 0;
  int k = 1;
  int a = 2;
  int b = 5;
  int bends = 1;
  double p = 0.5;
  std::uint64_t seed = 1;
};

struct FamilyInstance {
  TopologicalDrawing drawing;
  // Transparent colouring the family is documented with; empty if none.
  std::vector<int> colouring;
};

std::vector<std::string> family_names();
// Builds the family member and asserts its documented profile. Throws
// BadParams on unknown names or out-of-range parameters.
FamilyInstance gen_family(const std::string& name, const FamilyParams& params);

}  // namespace bpk
