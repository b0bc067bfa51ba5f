#ifndef ANVOR_DN_HPP
#define ANVOR_DN_HPP

#include "anvor/voronoi.hpp"

namespace anvor {

struct HalfSpace {
  RatVec normal;
  Rat offset;  // normal . x <= offset
};

// Dual-representation polytope; either representation may be absent.
struct Polytope {
  std::optional<std::vector<RatVec>> vrep;
  std::optional<std::vector<HalfSpace>> hrep;
  int ambient = 0;
};

// Voronoi cell of the D_m lattice at p (even coordinate sum): the pyramidal
// cube with 2^m + 2m listed vertices p + (+-1/2)^m and p +- e_j, and the
// 2m(m-1) half-spaces +-x_i +- x_j <= 1 centered at p.
Polytope pyramidal_cube(int m, const std::vector<long>& p);

// Cross-validates H-rep against V-rep: every vertex satisfies every
// inequality, and every inequality is tight on an affinely full set of
// vertices (facet-defining).
bool polytope_consistent(const Polytope& poly);

// Vertices of P intersected with the hyperplane normal.x == offset, by
// exhaustive enumeration of square subsystems (ambient <= 5). The returned
// point set may be lower-dimensional; callers inspect its affine rank.
std::vector<RatVec> hyperplane_section(const Polytope& poly, const RatVec& normal,
                                       const Rat& offset);

// For n <= 3: the section of the D_{n+1} cell at 0 by x.1 = 0 equals the
// A_n Voronoi cell vertex-for-vertex. For n == 4 the equality fails: the
// neighbor cell at e_1+e_2 meets the hyperplane with full dimension.
struct SectionReport {
  int n = 0;
  bool equal = false;     // section vertex set == voronoi_vertices(n)
  int affine_rank = -1;   // of the computed section
  std::vector<RatVec> section_vertices;
};
SectionReport section_equivalence_check(int n);

// Minimum of x.1 over the vertices of the D_{n+1} cell at e_1 + e_2:
// positive for n <= 2, zero at exactly one vertex for n == 3, negative for
// n >= 4. Equals (3-n)/2 (the cube-corner bound) for every n >= 1.
struct ClearanceReport {
  int n = 0;
  Rat min_dot;
  int sign = 0;
  long attained_by = 0;  // number of vertices attaining the minimum
  RatVec witness;        // lexicographically smallest attaining vertex
};
ClearanceReport neighbor_cell_clearance(int n);

}  // namespace anvor

#endif
