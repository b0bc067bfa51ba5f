#include "anvor/kuhn.hpp"

#include <algorithm>
#include <numeric>

namespace anvor {
namespace {

// Vertices u_j = (1^j, 0^{n-j}) of the base simplex, j = 0..n.
std::vector<RatVec> staircase_vertices(int n) {
  std::vector<RatVec> verts;
  verts.reserve(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    RatVec u(static_cast<size_t>(n));
    for (int i = 0; i < j; ++i) u[static_cast<size_t>(i)] = Rat(1);
    verts.push_back(std::move(u));
  }
  return verts;
}

std::vector<Simplex> permutation_images(const std::vector<RatVec>& base, int n,
                                        std::optional<int> cap) {
  std::vector<Simplex> out;
  for (const Perm& p : all_permutations(n, cap)) {
    Simplex s;
    s.verts.reserve(base.size());
    for (const auto& v : base) s.verts.push_back(p.apply(v));
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::vector<Simplex> kuhn_simplices(int n, std::optional<int> cap) {
  if (n < 1) throw std::invalid_argument("kuhn_simplices: n must be >= 1");
  return permutation_images(staircase_vertices(n), n, cap);
}

std::vector<Simplex> triangulate_parallelepiped(const Rat& alpha, const Rat& beta, int n,
                                                std::optional<int> cap) {
  if (n < 1) throw std::invalid_argument("triangulate_parallelepiped: n must be >= 1");
  if (alpha.is_zero())
    throw std::invalid_argument("triangulate_parallelepiped: singular, alpha == 0");
  if ((alpha + Rat(static_cast<long>(n)) * beta).is_zero())
    throw std::invalid_argument("triangulate_parallelepiped: singular, alpha + n*beta == 0");
  // Base vertices are the partial column sums of A = alpha*I + beta*J:
  // (A u_j)_i = alpha*[i < j] + beta*j.
  std::vector<RatVec> base;
  base.reserve(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    RatVec v(static_cast<size_t>(n));
    const Rat bj = beta * Rat(static_cast<long>(j));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = (i < j ? alpha + bj : bj);
    base.push_back(std::move(v));
  }
  return permutation_images(base, n, cap);
}

SortLocation descending_order(const RatVec& x) {
  const int m = static_cast<int>(x.size());
  if (m < 1) throw std::invalid_argument("descending_order: empty vector");
  std::vector<int> idx(static_cast<size_t>(m));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    return x[static_cast<size_t>(b)] < x[static_cast<size_t>(a)];
  });
  bool boundary = false;
  for (int k = 0; k + 1 < m; ++k)
    if (x[static_cast<size_t>(idx[static_cast<size_t>(k)])] ==
        x[static_cast<size_t>(idx[static_cast<size_t>(k + 1)])]) {
      boundary = true;
      break;
    }
  return SortLocation{Perm(std::move(idx)), boundary};
}

bool kuhn_simplex_contains(const Perm& sigma, const RatVec& x) {
  const int m = sigma.size();
  if (static_cast<int>(x.size()) != m) throw std::invalid_argument("kuhn_simplex_contains: size");
  if (x[static_cast<size_t>(sigma(0))] > Rat(1)) return false;
  for (int k = 0; k + 1 < m; ++k)
    if (x[static_cast<size_t>(sigma(k))] < x[static_cast<size_t>(sigma(k + 1))]) return false;
  return !(x[static_cast<size_t>(sigma(m - 1))] < Rat(0));
}

std::pair<int, int> separating_pair(const Perm& sigma, const Perm& tau) {
  if (sigma.size() != tau.size()) throw std::invalid_argument("separating_pair: size");
  if (sigma == tau) throw std::invalid_argument("separating_pair: identical permutations");
  const int m = sigma.size();
  std::vector<int> rs(static_cast<size_t>(m)), rt(static_cast<size_t>(m));
  for (int k = 0; k < m; ++k) {
    rs[static_cast<size_t>(sigma(k))] = k;
    rt[static_cast<size_t>(tau(k))] = k;
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      if (rs[static_cast<size_t>(a)] < rs[static_cast<size_t>(b)] &&
          rt[static_cast<size_t>(a)] > rt[static_cast<size_t>(b)])
        return {a, b};
    }
  throw std::logic_error("separating_pair: none found");  // unreachable
}

}  // namespace anvor
