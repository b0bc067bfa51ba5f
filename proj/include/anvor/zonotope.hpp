#ifndef ANVOR_ZONOTOPE_HPP
#define ANVOR_ZONOTOPE_HPP

#include "anvor/voronoi.hpp"

namespace anvor {

// The Voronoi cell as the zonotope of the segments xi_1 .. xi_{n+1};
// the generators sum to zero.
struct Zonotope {
  int n;
  RatMat generators;  // (n+1) x (n+1), columns of Xi
};
Zonotope voronoi_zonotope(int n);

// Vertex-first projection {Xi b : b in {0,1}^{n+1}}, deduplicated and
// sorted: the cell vertices plus the origin (image of both diagonal
// cube vertices).
std::vector<RatVec> project_cube_vertices(int n, std::optional<int> cap = std::nullopt);

// R_j as the projection of the cube cell adjacent to 0 that excludes
// direction j; `shifted` gives xi_j + R_j = Xi(e_j + C_j). Validates the
// vertex-image identity before returning.
Rhombus cube_cell_projection(int n, int j, bool shifted = false);

// Support data of the zonotope in direction u: the deterministic maximizer
// sums the generators with positive dot (zero-dot generators omitted).
RatVec support_point(int n, const RatVec& u);
Rat support_value(int n, const RatVec& u);

// V-rep/H-rep consistency: projected cube vertices against the bisector
// half-spaces x.(e_i - e_j) <= 1, facet support counts of 2^{n-1}, and
// support_point maximization over the vertex set for seeded directions.
struct HullCheckReport {
  bool pass = true;
  std::vector<std::string> failures;
  int vertex_count = 0;
  int facet_count = 0;
  int directions_checked = 0;
};
HullCheckReport zonotope_hull_check(int n, std::uint64_t seed, int directions = 200);

}  // namespace anvor

#endif
