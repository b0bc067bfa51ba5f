#include "anvor/zonotope.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "anvor/randpoint.hpp"

namespace anvor {

Zonotope voronoi_zonotope(int n) {
  if (n < 1) throw std::invalid_argument("voronoi_zonotope: n must be >= 1");
  return Zonotope{n, xi_matrix(n)};
}

std::vector<RatVec> project_cube_vertices(int n, std::optional<int> cap) {
  if (n < 1) throw std::invalid_argument("project_cube_vertices: n must be >= 1");
  const int limit = cap.value_or(kSubsetCap);
  if (n > limit)
    throw CapExceeded("project_cube_vertices: n = " + std::to_string(n) +
                      " exceeds enumeration cap " + std::to_string(limit));
  const int m = n + 1;
  std::set<RatVec, bool (*)(const RatVec&, const RatVec&)> out(lex_less);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const long size = static_cast<long>(__builtin_popcountll(mask));
    const Rat shift(-size, static_cast<long>(m));
    RatVec v(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
      v[static_cast<size_t>(i)] = (mask & (std::uint64_t{1} << i)) ? Rat(1) + shift : shift;
    out.insert(std::move(v));
  }
  return {out.begin(), out.end()};
}

Rhombus cube_cell_projection(int n, int j, bool shifted) {
  if (n < 1) throw std::invalid_argument("cube_cell_projection: n must be >= 1");
  if (j < 0 || j > n) throw std::invalid_argument("cube_cell_projection: j out of range");
  const int m = n + 1;
  const RatMat xi = xi_matrix(n);
  Rhombus r;
  r.translate = shifted ? xi.col(j) : RatVec(static_cast<size_t>(m));
  r.excluded = {j};

  // Validate the projection identity on vertex sets:
  // Xi * (vertices of e_j*eps + C^{n+1}_j) == vertices of translate + R_j.
  std::vector<RatVec> images;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (mask & (std::uint64_t{1} << j)) continue;  // coordinate j is fixed
    RatVec b(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
      if (mask & (std::uint64_t{1} << i)) b[static_cast<size_t>(i)] = Rat(1);
    if (shifted) b[static_cast<size_t>(j)] = Rat(1);
    images.push_back(xi * b);
  }
  std::sort(images.begin(), images.end(), lex_less);
  if (images != rhombus_vertex_set(r, n))
    throw std::logic_error("cube_cell_projection: projected cube cell mismatch");
  return r;
}

RatVec support_point(int n, const RatVec& u) {
  if (n < 1) throw std::invalid_argument("support_point: n must be >= 1");
  if (static_cast<int>(u.size()) != n + 1)
    throw std::invalid_argument("support_point: expected n+1 coordinates");
  bool all_zero = true;
  for (const Rat& v : u) all_zero = all_zero && v.is_zero();
  if (all_zero) throw std::invalid_argument("support_point: u must be nonzero");
  // xi_j . u = (Xi u)_j
  const RatVec w = xi_matrix(n) * u;
  RatVec p(static_cast<size_t>(n + 1));
  const RatMat xi = xi_matrix(n);
  for (int j = 0; j <= n; ++j)
    if (w[static_cast<size_t>(j)] > Rat(0)) p = add(p, xi.col(j));
  return p;
}

Rat support_value(int n, const RatVec& u) {
  const RatVec w = xi_matrix(n) * u;
  Rat h(0);
  for (const Rat& v : w)
    if (v > Rat(0)) h += v;
  // h(u) = sum_j max(0, xi_j . u); consistency with the maximizer is checked
  // in zonotope_hull_check.
  return h;
}

HullCheckReport zonotope_hull_check(int n, std::uint64_t seed, int directions) {
  if (n < 1) throw std::invalid_argument("zonotope_hull_check: n must be >= 1");
  if (n > 6)
    throw CapExceeded("zonotope_hull_check: n = " + std::to_string(n) + " exceeds cap 6");
  HullCheckReport rep;
  const auto projected = project_cube_vertices(n);
  const auto cell_vertices = voronoi_vertices(n);
  rep.vertex_count = static_cast<int>(cell_vertices.size());

  // Every projected point obeys the bisector half-spaces x.(e_i - e_j) <= 1.
  for (const RatVec& v : projected)
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        if (i == j) continue;
        if (v[static_cast<size_t>(i)] - v[static_cast<size_t>(j)] > Rat(1)) {
          rep.pass = false;
          rep.failures.push_back("H-rep violated at " + vec_str(v));
        }
      }

  // Each half-space is supported by exactly 2^{n-1} projected vertices.
  const long expected_support = 1L << (n - 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i == j) continue;
      ++rep.facet_count;
      long tight = 0;
      for (const RatVec& v : projected)
        if (v[static_cast<size_t>(i)] - v[static_cast<size_t>(j)] == Rat(1)) ++tight;
      if (tight != expected_support) {
        rep.pass = false;
        rep.failures.push_back("facet (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                               ") supported by " + std::to_string(tight) + " vertices");
      }
    }

  // support_point attains the vertex maximum for seeded directions.
  Rng rng(seed);
  for (int t = 0; t < directions; ++t) {
    const RatVec u = random_direction(rng, n + 1);
    const RatVec w = xi_matrix(n) * u;
    bool degenerate = true;
    for (const Rat& v : w) degenerate = degenerate && v.is_zero();
    if (degenerate) continue;  // u parallel to the diagonal
    ++rep.directions_checked;
    const Rat h = dot(support_point(n, u), u);
    Rat best = dot(cell_vertices.front(), u);
    for (const RatVec& v : cell_vertices) {
      const Rat d = dot(v, u);
      if (d > best) best = d;
    }
    if (h != best || h != support_value(n, u)) {
      rep.pass = false;
      rep.failures.push_back("support mismatch for direction " + vec_str(u));
    }
  }
  return rep;
}

}  // namespace anvor
