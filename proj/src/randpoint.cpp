#include "anvor/randpoint.hpp"

#include "anvor/lattice.hpp"

namespace anvor {

long Rng::uniform(long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(eng_() % span);
}

Rat random_rat(Rng& rng, long max_den, long scale_num, long scale_den) {
  const long den = rng.uniform(1, max_den);
  // |num/den| <= scale_num/scale_den
  const long bound = (den * scale_num) / scale_den;
  const long num = rng.uniform(-bound, bound);
  return Rat(num, den);
}

RatVec random_plane_point(Rng& rng, int n, long max_den) {
  const int m = n + 1;
  RatVec q(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) q[static_cast<size_t>(i)] = random_rat(rng, max_den, 3, 2);
  return xi_matrix(n) * q;
}

RatVec random_interior_point(Rng& rng, int n, long max_den) {
  RatVec x = random_plane_point(rng, n, max_den);
  Rat maxv = x[0], minv = x[0];
  for (const Rat& v : x) {
    if (v > maxv) maxv = v;
    if (v < minv) minv = v;
  }
  const Rat spread = maxv - minv;
  if (spread.is_zero()) return x;  // the origin
  // Target spread in (0, 1): r/(max_den+1) with r in [1, max_den].
  const Rat target(rng.uniform(1, max_den), max_den + 1);
  return scale(target / spread, x);
}

RatVec random_direction(Rng& rng, int m, long lim) {
  for (;;) {
    RatVec u(static_cast<size_t>(m));
    bool nonzero = false;
    for (int i = 0; i < m; ++i) {
      const long c = rng.uniform(-lim, lim);
      u[static_cast<size_t>(i)] = Rat(c);
      nonzero = nonzero || c != 0;
    }
    if (nonzero) return u;
  }
}

}  // namespace anvor
