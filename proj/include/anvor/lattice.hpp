#ifndef ANVOR_LATTICE_HPP
#define ANVOR_LATTICE_HPP

#include "anvor/perm.hpp"

namespace anvor {

enum class LatticeFamily { A, ADual, D, Z };

struct LatticeSpec {
  LatticeFamily family;
  int n;        // family dimension parameter
  int ambient;  // embedding dimension

  static LatticeSpec A(int n) { return {LatticeFamily::A, n, n + 1}; }
  static LatticeSpec ADual(int n) { return {LatticeFamily::ADual, n, n + 1}; }
  static LatticeSpec D_of_dim(int m) { return {LatticeFamily::D, m - 1, m}; }
  static LatticeSpec Z(int n) { return {LatticeFamily::Z, n, n}; }

  friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;
};

// Integer ambient coordinates with the family invariant checked at
// construction (A: zero coordinate sum, D: even coordinate sum). A-dual
// points are not integer vectors and are rejected.
struct LatticePoint {
  std::vector<long> coords;
  LatticeSpec spec;

  LatticePoint(std::vector<long> c, LatticeSpec s);

  friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
    return a.coords == b.coords && a.spec == b.spec;
  }
};

RatVec to_ratvec(const std::vector<long>& v);

// (n+1) x n generator of A_n: 1 on the diagonal, -1 on the subdiagonal.
RatMat gen_matrix_A(int n);

// Orthogonal projector onto the hyperplane x.1 = 0 along 1:
// Xi = I - J/(n+1). Symmetric and idempotent; kernel spanned by 1.
RatMat xi_matrix(int n);

// First n columns of Xi: generator of the dual lattice A_n*.
RatMat dual_gen_matrix(int n);

// n x (n+1) orthogonal map sending the hyperplane x.1 = 0 onto R^n,
// exact over Q(sqrt(n+1)). Satisfies M M^T = I and M 1 = 0.
QuadMat proj_matrix(int n);
// Rational demotion; exact whenever n+1 is a perfect square, throws otherwise.
RatMat proj_matrix_rat(int n);

struct ProjectionBundle {
  RatMat xi;
  QuadMat mproj;
};
ProjectionBundle projection_bundle(int n);

// Same lattice test for square generators: G1^{-1} G2 integral with
// determinant +-1. Throws on singular input.
bool lattices_equal(const RatMat& g1, const RatMat& g2);

// Closest point of A_n to x (x.1 must be 0): round each coordinate, fix the
// rounding-sum deficiency by re-rounding the coordinates with the largest
// errors, then resolve distance ties toward the lexicographically smallest
// minimizer.
LatticePoint closest_point_A(int n, const RatVec& x);

// Exhaustive-search oracle over the lattice ball with coordinates bounded by
// ceil(max |x_i|) + 1; returns the lexicographically smallest minimizer.
// Independent of closest_point_A.
LatticePoint brute_force_closest_A(int n, const RatVec& x);
Rat brute_force_min_dist_sq_A(int n, const RatVec& x);

// Row exchange i<->j in S_{n+1}; acts on points as the reflection across the
// hyperplane orthogonal to e_i - e_j.
Perm reflection_as_permutation(int n, int i, int j);
RatVec reflect_across_root(const RatVec& x, int i, int j);

}  // namespace anvor

#endif
