#ifndef ANVOR_VORONOI_HPP
#define ANVOR_VORONOI_HPP

#include <cstdint>

#include "anvor/kuhn.hpp"
#include "anvor/lattice.hpp"

namespace anvor {

inline constexpr int kSubsetCap = 12;     // 2^{n+1} subset enumerations
inline constexpr int kDecompCap = 7;      // (n+1)! simplex enumerations
inline constexpr int kFaceLatticeCap = 8; // facet-recursion face enumeration

// Parallelepiped translate + Xi_J * [0,1]^{n+1-#J}: the columns of Xi whose
// indices are NOT in `excluded` span it. Primary decompositions keep
// 1 <= #J <= n; #J == n+1 is the degenerate 0-face (a single point).
struct Rhombus {
  RatVec translate;
  std::vector<int> excluded;  // sorted, 0-based

  friend bool operator==(const Rhombus&, const Rhombus&) = default;
};

int rhombus_dim(const Rhombus& r, int n);
std::vector<int> rhombus_free_indices(const Rhombus& r, int n);
// All 2^k corner points translate + sum of a generator subset, sorted.
std::vector<RatVec> rhombus_vertex_set(const Rhombus& r, int n);
RatVec rhombus_lex_min_vertex(const Rhombus& r, int n);

// Fundamental simplex (alcove): v_j = sum_{i<j} xi_i, with v_0 = 0. Each v_j
// has its coordinates in descending order.
struct FundamentalSimplex {
  int n;
  std::vector<RatVec> verts;  // v_0 .. v_n
};
FundamentalSimplex fundamental_simplex(int n);
std::vector<RatVec> roof_vertices(const FundamentalSimplex& fs);  // v_1 .. v_n
Simplex as_simplex(const FundamentalSimplex& fs);

// All subset sums of the Xi columns over nonempty proper subsets:
// exactly 2^{n+1} - 2 points, sorted lexicographically.
std::vector<RatVec> voronoi_vertices(int n, std::optional<int> cap = std::nullopt);

// The (n+1)! images of the fundamental simplex under S_{n+1}.
std::vector<Simplex> simplex_decomposition(int n, std::optional<int> cap = std::nullopt);

// The n+1 hyper-rhombi R_j (translate 0, excluded {j}); flipped variant
// uses translate xi_j instead.
std::vector<Rhombus> rhombus_decomposition(int n, bool flipped);

// The n! images of the fundamental simplex under block-diag(Pi, 1): they tile
// R_{n+1} (the rhombus excluding the last column) and share the edge from 0
// to -xi_last = sum of the other columns.
std::vector<Simplex> rhombus_simplices(int n, std::optional<int> cap = std::nullopt);

// Boundary cell xi_i + R_{ij}, embedded in the bisecting hyperplane
// x.(e_i - e_j) = 1 of the neighbor lattice point e_i - e_j.
struct Facet {
  int i, j;  // 0-based, i != j
  Rhombus geometry;
};
std::vector<Facet> facets(int n);  // n(n+1), sorted by (i, j)

// The n facets sharing the vertex -xi_last: {xi_i + R_{i,last} : i < n}.
std::vector<Facet> facets_sharing_minus_xi_last(int n);

// All k-faces, deduplicated, built by recursively taking parallelepiped
// facets of the boundary cells. k in [0, n-1]; keys are
// (excluded set, lexicographically smallest vertex) and output is sorted
// by key.
std::vector<Rhombus> k_faces(int n, int k, std::optional<int> cap = std::nullopt);

struct LocationReport {
  bool inside;    // max(x) - min(x) <= 1
  bool boundary;  // equality above
  int rhombus;    // argmin coordinate, lowest index on ties (0-based)
  Perm order;     // stable descending coordinate order; image simplex index
  LatticePoint closest;
};
LocationReport locate(int n, const RatVec& x);

// Exact parallelepiped solve: coefficients t with
// Xi_free * t == x - translate, via the (invertible) Gram system.
struct BoxCoords {
  bool consistent;
  RatVec t;
};
BoxCoords rhombus_coordinates(const Rhombus& r, int n, const RatVec& x);
bool rhombus_contains(const Rhombus& r, int n, const RatVec& x, bool strict);

// Cross-validates the inequality membership test (max - min <= 1) against
// the exhaustive closest-point oracle on seeded random points.
struct MembershipCheckReport {
  int trials = 0;
  std::vector<RatVec> counterexamples;
  bool pass() const { return counterexamples.empty(); }
};
MembershipCheckReport membership_equivalence_check(int n, int trials, std::uint64_t seed);

}  // namespace anvor

#endif
