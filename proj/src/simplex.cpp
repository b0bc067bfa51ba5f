#include "anvor/simplex.hpp"

namespace anvor {

RatMat edge_matrix(const Simplex& s) {
  if (s.verts.empty()) throw std::invalid_argument("edge_matrix: empty simplex");
  const int m = s.dim();
  RatMat e(s.ambient(), m);
  for (int k = 1; k <= m; ++k) e.set_col(k - 1, sub(s.verts[static_cast<size_t>(k)], s.verts[0]));
  return e;
}

bool affinely_independent(const Simplex& s) {
  if (s.dim() == 0) return true;
  return rank(edge_matrix(s)) == s.dim();
}

Rat volume_sq(const Simplex& s) {
  const int m = s.dim();
  if (m == 0) return Rat(1);  // 0-volume of a point is 1 by convention
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
  return gram_volume_sq(edge_matrix(s)) / Rat(f * f, mpz_class(1));
}

Rat volume_fulldim(const Simplex& s) {
  const int m = s.dim();
  if (s.ambient() != m) throw std::invalid_argument("volume_fulldim: not full-dimensional");
  if (m == 0) return Rat(1);
  Rat d = det(edge_matrix(s));
  if (d.sign() < 0) d = -d;
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
  return d / Rat(f, mpz_class(1));
}

}  // namespace anvor
