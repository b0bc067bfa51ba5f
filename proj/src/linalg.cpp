#include "anvor/linalg.hpp"

namespace anvor {
namespace {

void check_same(const RatVec& x, const RatVec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("vector: size mismatch");
}

}  // namespace

Rat dot(const RatVec& x, const RatVec& y) {
  check_same(x, y);
  Rat s;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

RatVec add(const RatVec& x, const RatVec& y) {
  check_same(x, y);
  RatVec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

RatVec sub(const RatVec& x, const RatVec& y) {
  check_same(x, y);
  RatVec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

RatVec neg(const RatVec& x) {
  RatVec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = -x[i];
  return r;
}

RatVec scale(const Rat& s, const RatVec& x) {
  RatVec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = s * x[i];
  return r;
}

Rat vec_sum(const RatVec& x) {
  Rat s;
  for (const auto& v : x) s += v;
  return s;
}

Rat norm_sq(const RatVec& x) { return dot(x, x); }

RatVec unit_vec(int m, int i) {
  if (i < 0 || i >= m) throw std::out_of_range("unit_vec: index");
  RatVec e(m);
  e[i] = Rat(1);
  return e;
}

bool lex_less(const RatVec& x, const RatVec& y) {
  check_same(x, y);
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] < y[i]) return true;
    if (y[i] < x[i]) return false;
  }
  return false;
}

std::string vec_str(const RatVec& x) {
  std::string s = "(";
  for (size_t i = 0; i < x.size(); ++i) {
    if (i) s += ", ";
    s += x[i].str();
  }
  return s + ")";
}

RatMat from_columns(const std::vector<RatVec>& cols) {
  if (cols.empty()) throw std::invalid_argument("from_columns: empty");
  RatMat m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) m.set_col(static_cast<int>(j), cols[j]);
  return m;
}

Rat det(RatMat m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: non-square");
  const int n = m.rows();
  Rat result(1);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (!m(r, c).is_zero()) { pivot = r; break; }
    if (pivot < 0) return Rat(0);
    if (pivot != c) {
      for (int j = c; j < n; ++j) std::swap(m(pivot, j), m(c, j));
      result = -result;
    }
    result *= m(c, c);
    const Rat inv = Rat(1) / m(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      const Rat f = m(r, c) * inv;
      for (int j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return result;
}

Rat gram_volume_sq(const RatMat& m) { return det(m.transposed() * m); }

int rank(RatMat m) {
  const int rows = m.rows(), cols = m.cols();
  int rk = 0;
  for (int c = 0; c < cols && rk < rows; ++c) {
    int pivot = -1;
    for (int r = rk; r < rows; ++r)
      if (!m(r, c).is_zero()) { pivot = r; break; }
    if (pivot < 0) continue;
    if (pivot != rk)
      for (int j = c; j < cols; ++j) std::swap(m(pivot, j), m(rk, j));
    const Rat inv = Rat(1) / m(rk, c);
    for (int r = rk + 1; r < rows; ++r) {
      if (m(r, c).is_zero()) continue;
      const Rat f = m(r, c) * inv;
      for (int j = c; j < cols; ++j) m(r, j) -= f * m(rk, j);
    }
    ++rk;
  }
  return rk;
}

std::optional<RatVec> solve_square(RatMat a, RatVec b) {
  if (a.rows() != a.cols() || a.rows() != static_cast<int>(b.size()))
    throw std::invalid_argument("solve_square: dimensions");
  const int n = a.rows();
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (!a(r, c).is_zero()) { pivot = r; break; }
    if (pivot < 0) return std::nullopt;
    if (pivot != c) {
      for (int j = c; j < n; ++j) std::swap(a(pivot, j), a(c, j));
      std::swap(b[pivot], b[c]);
    }
    const Rat inv = Rat(1) / a(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      const Rat f = a(r, c) * inv;
      for (int j = c; j < n; ++j) a(r, j) -= f * a(c, j);
      b[r] -= f * b[c];
    }
  }
  RatVec x(n);
  for (int i = n - 1; i >= 0; --i) {
    Rat s = b[i];
    for (int j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
    x[i] = s / a(i, i);
  }
  return x;
}

std::optional<RatMat> inverse(const RatMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: non-square");
  const int n = m.rows();
  RatMat inv(n, n);
  for (int j = 0; j < n; ++j) {
    auto x = solve_square(m, unit_vec(n, j));
    if (!x) return std::nullopt;
    inv.set_col(j, *x);
  }
  return inv;
}

bool is_integral(const RatMat& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_integer()) return false;
  return true;
}

int affine_rank(const std::vector<RatVec>& pts) {
  if (pts.empty()) return -1;
  if (pts.size() == 1) return 0;
  RatMat diffs(static_cast<int>(pts[0].size()), static_cast<int>(pts.size() - 1));
  for (size_t k = 1; k < pts.size(); ++k) diffs.set_col(static_cast<int>(k - 1), sub(pts[k], pts[0]));
  return rank(diffs);
}

QuadMat to_quad(const RatMat& m) {
  QuadMat q(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) q(i, j) = QuadExt(m(i, j));
  return q;
}

RatMat to_rat(const QuadMat& m) {
  RatMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).to_rat();
  return r;
}

}  // namespace anvor
