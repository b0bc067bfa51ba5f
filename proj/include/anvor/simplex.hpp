#ifndef ANVOR_SIMPLEX_HPP
#define ANVOR_SIMPLEX_HPP

#include "anvor/linalg.hpp"

namespace anvor {

// Ordered vertex list of an m-simplex in ambient dimension >= m.
struct Simplex {
  std::vector<RatVec> verts;

  int dim() const { return static_cast<int>(verts.size()) - 1; }
  int ambient() const { return verts.empty() ? 0 : static_cast<int>(verts[0].size()); }

  friend bool operator==(const Simplex& a, const Simplex& b) = default;
};

// Columns v_k - v_0 for k = 1..m.
RatMat edge_matrix(const Simplex& s);

bool affinely_independent(const Simplex& s);

// Squared m-volume: det(E^T E) / (m!)^2 with E the edge matrix. Valid in any
// ambient dimension.
Rat volume_sq(const Simplex& s);

// Signed-free Lebesgue volume |det E| / m!; requires ambient == dim.
Rat volume_fulldim(const Simplex& s);

}  // namespace anvor

#endif
