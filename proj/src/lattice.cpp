#include "anvor/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace anvor {
namespace {

long to_long_checked(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("lattice: coordinate out of long range");
  return z.get_si();
}

void check_on_plane(int n, const RatVec& x, const char* who) {
  if (static_cast<int>(x.size()) != n + 1)
    throw std::invalid_argument(std::string(who) + ": expected ambient dimension n+1");
  if (!vec_sum(x).is_zero())
    throw std::invalid_argument(std::string(who) + ": point is not on the hyperplane x.1 = 0");
}

}  // namespace

LatticePoint::LatticePoint(std::vector<long> c, LatticeSpec s) : coords(std::move(c)), spec(s) {
  if (static_cast<int>(coords.size()) != spec.ambient)
    throw std::invalid_argument("LatticePoint: ambient dimension mismatch");
  long sum = std::accumulate(coords.begin(), coords.end(), 0L);
  switch (spec.family) {
    case LatticeFamily::A:
      if (sum != 0) throw std::invalid_argument("LatticePoint: A-family coordinates must sum to 0");
      break;
    case LatticeFamily::D:
      if (sum % 2 != 0)
        throw std::invalid_argument("LatticePoint: D-family coordinate sum must be even");
      break;
    case LatticeFamily::ADual:
      throw std::invalid_argument("LatticePoint: A-dual points are not integer ambient vectors");
    case LatticeFamily::Z:
      break;
  }
}

RatVec to_ratvec(const std::vector<long>& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

RatMat gen_matrix_A(int n) {
  if (n < 1) throw std::invalid_argument("gen_matrix_A: n must be >= 1");
  RatMat g(n + 1, n);
  for (int j = 0; j < n; ++j) {
    g(j, j) = Rat(1);
    g(j + 1, j) = Rat(-1);
  }
  return g;
}

RatMat xi_matrix(int n) {
  if (n < 1) throw std::invalid_argument("xi_matrix: n must be >= 1");
  const int m = n + 1;
  const Rat off(-1L, static_cast<long>(m));
  RatMat xi(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) xi(i, j) = (i == j) ? Rat(static_cast<long>(n), m) : off;
  return xi;
}

RatMat dual_gen_matrix(int n) {
  if (n < 1) throw std::invalid_argument("dual_gen_matrix: n must be >= 1");
  const RatMat xi = xi_matrix(n);
  RatMat g(n + 1, n);
  for (int j = 0; j < n; ++j) g.set_col(j, xi.col(j));
  return g;
}

QuadMat proj_matrix(int n) {
  if (n < 1) throw std::invalid_argument("proj_matrix: n must be >= 1");
  // c = (1 + 1/sqrt(n+1)) / n
  const QuadExt inv_sqrt(Rat(0), Rat(1L, static_cast<long>(n + 1)), n + 1);
  const QuadExt c = (QuadExt(Rat(1)) + inv_sqrt) / QuadExt(Rat(static_cast<long>(n)));
  // B = I_n - c*J_n
  QuadMat b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = (i == j) ? QuadExt(Rat(1)) - c : -c;
  // W = [-I_n | 1]
  QuadMat w(n, n + 1);
  for (int i = 0; i < n; ++i) {
    w(i, i) = QuadExt(Rat(-1));
    w(i, n) = QuadExt(Rat(1));
  }
  return b * w;
}

RatMat proj_matrix_rat(int n) { return to_rat(proj_matrix(n)); }

ProjectionBundle projection_bundle(int n) { return ProjectionBundle{xi_matrix(n), proj_matrix(n)}; }

bool lattices_equal(const RatMat& g1, const RatMat& g2) {
  if (g1.rows() != g1.cols() || g2.rows() != g2.cols() || g1.rows() != g2.rows())
    throw std::invalid_argument("lattices_equal: generators must be square and same size");
  const auto inv = inverse(g1);
  if (!inv) throw std::invalid_argument("lattices_equal: singular generator");
  const RatMat u = *inv * g2;
  if (!is_integral(u)) return false;
  const Rat d = det(u);
  return d == Rat(1) || d == Rat(-1);
}

namespace {

// Lexicographically smallest tie q among {sum_I e_i - sum_J e_j} with
// I within the argmax set, J within the argmin set and #I == #J >= 1.
// Returns an all-zero vector when the zero point wins.
std::vector<long> lex_min_tie_adjustment(const RatVec& residual) {
  const int m = static_cast<int>(residual.size());
  Rat maxv = residual[0], minv = residual[0];
  for (const Rat& v : residual) {
    if (v > maxv) maxv = v;
    if (v < minv) minv = v;
  }
  std::vector<long> q(static_cast<size_t>(m), 0);
  if (maxv - minv != Rat(1)) return q;  // no tie: interior point

  std::vector<bool> in_p(static_cast<size_t>(m)), in_n(static_cast<size_t>(m));
  std::vector<int> psuf(static_cast<size_t>(m) + 1, 0), nsuf(static_cast<size_t>(m) + 1, 0);
  for (int i = m - 1; i >= 0; --i) {
    in_p[static_cast<size_t>(i)] = residual[static_cast<size_t>(i)] == maxv;
    in_n[static_cast<size_t>(i)] = residual[static_cast<size_t>(i)] == minv;
    psuf[static_cast<size_t>(i)] = psuf[static_cast<size_t>(i) + 1] + (in_p[static_cast<size_t>(i)] ? 1 : 0);
    nsuf[static_cast<size_t>(i)] = nsuf[static_cast<size_t>(i) + 1] + (in_n[static_cast<size_t>(i)] ? 1 : 0);
  }
  const auto feasible = [](int ci, int cj, int pr, int nr) {
    const int lo = std::max({ci, cj, 1});
    return lo <= std::min(ci + pr, cj + nr);
  };
  int ci = 0, cj = 0;
  for (int t = 0; t < m; ++t) {
    const int pr = psuf[static_cast<size_t>(t) + 1], nr = nsuf[static_cast<size_t>(t) + 1];
    if (in_n[static_cast<size_t>(t)]) {
      if (feasible(ci, cj + 1, pr, nr)) {
        q[static_cast<size_t>(t)] = -1;
        ++cj;
      } else if (!feasible(ci, cj, pr, nr)) {
        throw std::logic_error("closest_point_A: infeasible tie search");
      }
    } else if (in_p[static_cast<size_t>(t)]) {
      if (!feasible(ci, cj, pr, nr)) {
        q[static_cast<size_t>(t)] = 1;
        ++ci;
        if (!feasible(ci, cj, pr, nr)) throw std::logic_error("closest_point_A: infeasible tie search");
      }
    }
  }
  if (ci != cj || ci < 1) throw std::logic_error("closest_point_A: unbalanced tie candidate");
  // Candidate beats the zero vector only when its first nonzero entry is -1.
  for (long v : q) {
    if (v == -1) return q;
    if (v == 1) break;
  }
  return std::vector<long>(static_cast<size_t>(m), 0);
}

}  // namespace

LatticePoint closest_point_A(int n, const RatVec& x) {
  check_on_plane(n, x, "closest_point_A");
  const int m = n + 1;
  std::vector<long> f(static_cast<size_t>(m));
  RatVec delta(static_cast<size_t>(m));  // x_i - f_i
  mpz_class deficiency(0);
  for (int i = 0; i < m; ++i) {
    const mpz_class r = x[static_cast<size_t>(i)].round_half_up();
    f[static_cast<size_t>(i)] = to_long_checked(r);
    delta[static_cast<size_t>(i)] = x[static_cast<size_t>(i)] - Rat(r, mpz_class(1));
    deficiency += r;
  }
  long d = to_long_checked(deficiency);
  if (d != 0) {
    std::vector<int> idx(static_cast<size_t>(m));
    std::iota(idx.begin(), idx.end(), 0);
    if (d > 0) {
      // Decrement the d coordinates rounded up the most (smallest delta).
      std::stable_sort(idx.begin(), idx.end(),
                       [&](int a, int b) { return delta[static_cast<size_t>(a)] < delta[static_cast<size_t>(b)]; });
      for (long k = 0; k < d; ++k) f[static_cast<size_t>(idx[static_cast<size_t>(k)])] -= 1;
    } else {
      std::stable_sort(idx.begin(), idx.end(),
                       [&](int a, int b) { return delta[static_cast<size_t>(b)] < delta[static_cast<size_t>(a)]; });
      for (long k = 0; k < -d; ++k) f[static_cast<size_t>(idx[static_cast<size_t>(k)])] += 1;
    }
  }
  RatVec residual(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i)
    residual[static_cast<size_t>(i)] = x[static_cast<size_t>(i)] - Rat(f[static_cast<size_t>(i)]);
  const std::vector<long> tie = lex_min_tie_adjustment(residual);
  for (int i = 0; i < m; ++i) f[static_cast<size_t>(i)] += tie[static_cast<size_t>(i)];
  return LatticePoint(std::move(f), LatticeSpec::A(n));
}

namespace {

struct BruteState {
  const RatVec* x;
  int m;
  long bound;
  std::optional<Rat> best;
  std::vector<long> best_point;
  std::vector<long> current;

  void search(int i, long partial_sum, const Rat& partial_dist) {
    if (best && partial_dist >= *best) return;
    if (i == m) {
      if (partial_sum != 0) return;
      best = partial_dist;
      best_point = current;
      return;
    }
    for (long c = -bound; c <= bound; ++c) {
      // The remaining coordinates can shift the sum by at most bound*(m-i-1).
      if (std::labs(partial_sum + c) > bound * static_cast<long>(m - i - 1)) continue;
      current[static_cast<size_t>(i)] = c;
      const Rat diff = (*x)[static_cast<size_t>(i)] - Rat(c);
      search(i + 1, partial_sum + c, partial_dist + diff * diff);
    }
    current[static_cast<size_t>(i)] = 0;
  }
};

}  // namespace

LatticePoint brute_force_closest_A(int n, const RatVec& x) {
  check_on_plane(n, x, "brute_force_closest_A");
  const int m = n + 1;
  Rat maxabs(0);
  for (const Rat& v : x)
    if (abs(v) > maxabs) maxabs = abs(v);
  BruteState st;
  st.x = &x;
  st.m = m;
  st.bound = to_long_checked(maxabs.ceil()) + 1;
  st.current.assign(static_cast<size_t>(m), 0);
  st.search(0, 0, Rat(0));
  if (!st.best) throw std::logic_error("brute_force_closest_A: empty search");
  return LatticePoint(std::move(st.best_point), LatticeSpec::A(n));
}

Rat brute_force_min_dist_sq_A(int n, const RatVec& x) {
  const LatticePoint p = brute_force_closest_A(n, x);
  return norm_sq(sub(x, to_ratvec(p.coords)));
}

Perm reflection_as_permutation(int n, int i, int j) {
  if (i == j) throw std::invalid_argument("reflection_as_permutation: indices must differ");
  return transposition(n + 1, i, j);
}

RatVec reflect_across_root(const RatVec& x, int i, int j) {
  const int m = static_cast<int>(x.size());
  if (i < 0 || j < 0 || i >= m || j >= m || i == j)
    throw std::invalid_argument("reflect_across_root: bad indices");
  // x - (x_i - x_j)(e_i - e_j)
  const Rat t = x[static_cast<size_t>(i)] - x[static_cast<size_t>(j)];
  RatVec y = x;
  y[static_cast<size_t>(i)] -= t;
  y[static_cast<size_t>(j)] += t;
  return y;
}

}  // namespace anvor
