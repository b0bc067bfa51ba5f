#ifndef ANVOR_RANDPOINT_HPP
#define ANVOR_RANDPOINT_HPP

#include <cstdint>
#include <random>

#include "anvor/linalg.hpp"

namespace anvor {

// Seeded deterministic generator. Draws go through explicit modular
// reduction so the stream depends only on the (standardized) mt19937_64
// engine, not on distribution internals.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  long uniform(long lo, long hi);  // inclusive range

private:
  std::mt19937_64 eng_;
};

// Rational with denominator in [1, max_den] and value in [-scale, scale].
Rat random_rat(Rng& rng, long max_den, long scale_num, long scale_den);

// Xi-projected random point of the hyperplane x.1 = 0; source coordinates
// range over [-3/2, 3/2] so the point straddles the cell boundary.
RatVec random_plane_point(Rng& rng, int n, long max_den = 1000);

// Strictly interior point of the Voronoi cell: a projected point rescaled so
// that max(x) - min(x) is a random rational in (0, 1).
RatVec random_interior_point(Rng& rng, int n, long max_den = 1000);

// Nonzero integer direction with entries in [-lim, lim].
RatVec random_direction(Rng& rng, int m, long lim = 20);

}  // namespace anvor

#endif
