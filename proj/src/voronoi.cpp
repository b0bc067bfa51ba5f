#include "anvor/voronoi.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "anvor/randpoint.hpp"

namespace anvor {
namespace {

void check_n(int n, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
}

void check_cap(int n, int cap, const char* who) {
  if (n > cap)
    throw CapExceeded(std::string(who) + ": n = " + std::to_string(n) +
                      " exceeds enumeration cap " + std::to_string(cap));
}

// Column xi_j of the projector, built directly: e_j - 1/(n+1).
RatVec xi_column(int n, int j) {
  const int m = n + 1;
  RatVec c(static_cast<size_t>(m), Rat(-1L, static_cast<long>(m)));
  c[static_cast<size_t>(j)] += Rat(1);
  return c;
}

struct RhombusKey {
  std::vector<int> excluded;
  RatVec anchor;  // lexicographically smallest vertex

  friend bool operator<(const RhombusKey& a, const RhombusKey& b) {
    if (a.excluded != b.excluded) return a.excluded < b.excluded;
    return lex_less(a.anchor, b.anchor);
  }
};

RhombusKey canonical_key(const Rhombus& r, int n) {
  return RhombusKey{r.excluded, rhombus_lex_min_vertex(r, n)};
}

}  // namespace

int rhombus_dim(const Rhombus& r, int n) {
  return n + 1 - static_cast<int>(r.excluded.size());
}

std::vector<int> rhombus_free_indices(const Rhombus& r, int n) {
  const int m = n + 1;
  if (static_cast<int>(r.translate.size()) != m)
    throw std::invalid_argument("rhombus: translate dimension mismatch");
  std::vector<int> free;
  size_t pos = 0;
  for (int i = 0; i < m; ++i) {
    if (pos < r.excluded.size() && r.excluded[pos] == i) {
      ++pos;
      continue;
    }
    free.push_back(i);
  }
  if (pos != r.excluded.size())
    throw std::invalid_argument("rhombus: excluded indices must be sorted and in range");
  return free;
}

std::vector<RatVec> rhombus_vertex_set(const Rhombus& r, int n) {
  const auto free = rhombus_free_indices(r, n);
  const size_t k = free.size();
  std::vector<RatVec> verts;
  verts.reserve(size_t{1} << k);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    RatVec v = r.translate;
    for (size_t b = 0; b < k; ++b)
      if (mask & (std::uint64_t{1} << b)) v = add(v, xi_column(n, free[b]));
    verts.push_back(std::move(v));
  }
  std::sort(verts.begin(), verts.end(), lex_less);
  return verts;
}

RatVec rhombus_lex_min_vertex(const Rhombus& r, int n) {
  const auto verts = rhombus_vertex_set(r, n);
  return verts.front();
}

FundamentalSimplex fundamental_simplex(int n) {
  check_n(n, "fundamental_simplex");
  const int m = n + 1;
  FundamentalSimplex fs;
  fs.n = n;
  fs.verts.reserve(static_cast<size_t>(m));
  for (int j = 0; j <= n; ++j) {
    RatVec v(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
      v[static_cast<size_t>(i)] =
          (i < j) ? Rat(static_cast<long>(m - j), static_cast<long>(m))
                  : Rat(static_cast<long>(-j), static_cast<long>(m));
    fs.verts.push_back(std::move(v));
  }
  return fs;
}

std::vector<RatVec> roof_vertices(const FundamentalSimplex& fs) {
  return {fs.verts.begin() + 1, fs.verts.end()};
}

Simplex as_simplex(const FundamentalSimplex& fs) { return Simplex{fs.verts}; }

std::vector<RatVec> voronoi_vertices(int n, std::optional<int> cap) {
  check_n(n, "voronoi_vertices");
  check_cap(n, cap.value_or(kSubsetCap), "voronoi_vertices");
  const int m = n + 1;
  std::set<RatVec, bool (*)(const RatVec&, const RatVec&)> out(lex_less);
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << m); ++mask) {
    const long size = static_cast<long>(__builtin_popcountll(mask));
    RatVec v(static_cast<size_t>(m));
    // Subset sum of xi columns: [i in S] - #S/(n+1) per coordinate.
    const Rat shift(-size, static_cast<long>(m));
    for (int i = 0; i < m; ++i)
      v[static_cast<size_t>(i)] =
          (mask & (std::uint64_t{1} << i)) ? Rat(1) + shift : shift;
    out.insert(std::move(v));
  }
  return {out.begin(), out.end()};
}

std::vector<Simplex> simplex_decomposition(int n, std::optional<int> cap) {
  check_n(n, "simplex_decomposition");
  check_cap(n, cap.value_or(kDecompCap), "simplex_decomposition");
  const auto fs = fundamental_simplex(n);
  std::vector<Simplex> out;
  for (const Perm& p : all_permutations(n + 1, n + 1)) {
    Simplex s;
    s.verts.reserve(fs.verts.size());
    for (const auto& v : fs.verts) s.verts.push_back(p.apply(v));
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Rhombus> rhombus_decomposition(int n, bool flipped) {
  check_n(n, "rhombus_decomposition");
  const int m = n + 1;
  std::vector<Rhombus> out;
  out.reserve(static_cast<size_t>(m));
  for (int j = 0; j < m; ++j) {
    RatVec t(static_cast<size_t>(m));
    if (flipped) t = xi_column(n, j);
    out.push_back(Rhombus{std::move(t), {j}});
  }
  return out;
}

std::vector<Simplex> rhombus_simplices(int n, std::optional<int> cap) {
  check_n(n, "rhombus_simplices");
  check_cap(n, cap.value_or(kDecompCap), "rhombus_simplices");
  const auto fs = fundamental_simplex(n);
  std::vector<Simplex> out;
  for (const Perm& p : all_permutations(n, n)) {
    // Extend to S_{n+1} fixing the last coordinate: block-diag(Pi, 1).
    std::vector<int> img = p.images();
    img.push_back(n);
    const Perm q(std::move(img));
    Simplex s;
    s.verts.reserve(fs.verts.size());
    for (const auto& v : fs.verts) s.verts.push_back(q.apply(v));
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Facet> facets(int n) {
  check_n(n, "facets");
  const int m = n + 1;
  std::vector<Facet> out;
  out.reserve(static_cast<size_t>(n) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      std::vector<int> excl = {std::min(i, j), std::max(i, j)};
      out.push_back(Facet{i, j, Rhombus{xi_column(n, i), std::move(excl)}});
    }
  return out;
}

std::vector<Facet> facets_sharing_minus_xi_last(int n) {
  check_n(n, "facets_sharing_minus_xi_last");
  std::vector<Facet> out;
  out.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    out.push_back(Facet{i, n, Rhombus{xi_column(n, i), {i, n}}});
  return out;
}

std::vector<Rhombus> k_faces(int n, int k, std::optional<int> cap) {
  check_n(n, "k_faces");
  check_cap(n, cap.value_or(kFaceLatticeCap), "k_faces");
  if (k < 0 || k > n - 1)
    throw std::invalid_argument("k_faces: k out of range [0, n-1]");

  std::map<RhombusKey, Rhombus> level;
  for (const Facet& f : facets(n)) level.emplace(canonical_key(f.geometry, n), f.geometry);

  for (int dim = n - 1; dim > k; --dim) {
    std::map<RhombusKey, Rhombus> next;
    for (const auto& [key, face] : level) {
      for (int f : rhombus_free_indices(face, n)) {
        for (int eps = 0; eps <= 1; ++eps) {
          Rhombus child;
          child.translate = eps ? add(face.translate, xi_column(n, f)) : face.translate;
          child.excluded = face.excluded;
          child.excluded.insert(
              std::upper_bound(child.excluded.begin(), child.excluded.end(), f), f);
          next.emplace(canonical_key(child, n), std::move(child));
        }
      }
    }
    level = std::move(next);
  }

  std::vector<Rhombus> out;
  out.reserve(level.size());
  for (auto& [key, face] : level) out.push_back(std::move(face));
  return out;
}

LocationReport locate(int n, const RatVec& x) {
  check_n(n, "locate");
  if (static_cast<int>(x.size()) != n + 1)
    throw std::invalid_argument("locate: expected n+1 coordinates");
  if (!vec_sum(x).is_zero())
    throw std::invalid_argument("locate: point is not on the hyperplane x.1 = 0");
  int argmin = 0;
  Rat maxv = x[0], minv = x[0];
  for (int i = 1; i < n + 1; ++i) {
    const Rat& v = x[static_cast<size_t>(i)];
    if (v > maxv) maxv = v;
    if (v < minv) {
      minv = v;
      argmin = i;
    }
  }
  const Rat spread = maxv - minv;
  return LocationReport{spread <= Rat(1), spread == Rat(1), argmin,
                        descending_order(x).order, closest_point_A(n, x)};
}

BoxCoords rhombus_coordinates(const Rhombus& r, int n, const RatVec& x) {
  const auto free = rhombus_free_indices(r, n);
  const int k = static_cast<int>(free.size());
  if (k == 0) return BoxCoords{x == r.translate, {}};
  RatMat gens(n + 1, k);
  for (int c = 0; c < k; ++c) gens.set_col(c, xi_column(n, free[static_cast<size_t>(c)]));
  const RatVec rhs = sub(x, r.translate);
  // Gram system: any n columns of Xi are linearly independent, so the k x k
  // Gram matrix is invertible for k <= n.
  const RatMat gt = gens.transposed();
  const auto t = solve_square(gt * gens, gt * rhs);
  if (!t) throw std::logic_error("rhombus_coordinates: singular Gram matrix");
  // The solve is a least-squares projection; confirm exact consistency.
  if (gens * *t != rhs) return BoxCoords{false, {}};
  return BoxCoords{true, *t};
}

bool rhombus_contains(const Rhombus& r, int n, const RatVec& x, bool strict) {
  const auto bc = rhombus_coordinates(r, n, x);
  if (!bc.consistent) return false;
  for (const Rat& v : bc.t) {
    if (strict ? !(v > Rat(0) && v < Rat(1)) : !(v >= Rat(0) && v <= Rat(1))) return false;
  }
  return true;
}

MembershipCheckReport membership_equivalence_check(int n, int trials, std::uint64_t seed) {
  check_n(n, "membership_equivalence_check");
  check_cap(n, 6, "membership_equivalence_check");
  Rng rng(seed);
  MembershipCheckReport rep;
  rep.trials = trials;
  for (int t = 0; t < trials; ++t) {
    const RatVec x = random_plane_point(rng, n);
    Rat maxv = x[0], minv = x[0];
    for (const Rat& v : x) {
      if (v > maxv) maxv = v;
      if (v < minv) minv = v;
    }
    const bool inside_ineq = (maxv - minv) <= Rat(1);
    // Membership by definition: the origin attains the minimum distance.
    const bool inside_oracle = norm_sq(x) == brute_force_min_dist_sq_A(n, x);
    if (inside_ineq != inside_oracle) rep.counterexamples.push_back(x);
  }
  return rep;
}

}  // namespace anvor
