#ifndef ANVOR_LINALG_HPP
#define ANVOR_LINALG_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "anvor/quadext.hpp"
#include "anvor/rat.hpp"

namespace anvor {

// Dense matrix over an exact field. Dimensions are fixed at construction;
// every binary operation checks dimension agreement.
template <class T>
class Matrix {
public:
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_check(rows, cols)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix ones(int rows, int cols) {
    Matrix m(rows, cols);
    for (auto& x : m.a_) x = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return a_[index(i, j)]; }
  const T& operator()(int i, int j) const { return a_[index(i, j)]; }

  std::vector<T> col(int j) const {
    std::vector<T> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  std::vector<T> row(int i) const {
    std::vector<T> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }
  void set_col(int j, const std::vector<T>& c) {
    if (static_cast<int>(c.size()) != rows_) throw std::invalid_argument("Matrix: column size");
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("Matrix: product dimensions");
    Matrix r(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        if (x(i, k) == T(0)) continue;
        for (int j = 0; j < y.cols_; ++j) r(i, j) += x(i, k) * y(k, j);
      }
    return r;
  }

  std::vector<T> operator*(const std::vector<T>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("Matrix: matvec dimensions");
    std::vector<T> r(rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    x.same_shape(y);
    Matrix r(x.rows_, x.cols_);
    for (size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] + y.a_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    x.same_shape(y);
    Matrix r(x.rows_, x.cols_);
    for (size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] - y.a_[k];
    return r;
  }
  friend Matrix operator*(const T& s, const Matrix& x) {
    Matrix r(x.rows_, x.cols_);
    for (size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = s * x.a_[k];
    return r;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

private:
  static size_t size_check(int rows, int cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
    return static_cast<size_t>(rows) * static_cast<size_t>(cols);
  }
  size_t index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("Matrix: index");
    return static_cast<size_t>(i) * cols_ + j;
  }
  void same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
  }

  int rows_, cols_;
  std::vector<T> a_;
};

using RatMat = Matrix<Rat>;
using QuadMat = Matrix<QuadExt>;

// --- vector helpers (dimension-checked) ---

Rat dot(const RatVec& x, const RatVec& y);
RatVec add(const RatVec& x, const RatVec& y);
RatVec sub(const RatVec& x, const RatVec& y);
RatVec neg(const RatVec& x);
RatVec scale(const Rat& s, const RatVec& x);
Rat vec_sum(const RatVec& x);
Rat norm_sq(const RatVec& x);
RatVec unit_vec(int m, int i);
bool lex_less(const RatVec& x, const RatVec& y);
std::string vec_str(const RatVec& x);

RatMat from_columns(const std::vector<RatVec>& cols);

// --- exact linear algebra over the rationals ---

Rat det(RatMat m);
// det(M^T M): squared k-volume of the parallelepiped spanned by the columns.
// Rank-deficient input yields 0.
Rat gram_volume_sq(const RatMat& m);
int rank(RatMat m);
std::optional<RatVec> solve_square(RatMat a, RatVec b);  // nullopt when singular
std::optional<RatMat> inverse(const RatMat& m);
bool is_integral(const RatMat& m);
// Dimension of the affine hull of a point set (-1 for the empty set).
int affine_rank(const std::vector<RatVec>& pts);

QuadMat to_quad(const RatMat& m);
// Exact demotion; throws when any entry is irrational.
RatMat to_rat(const QuadMat& m);

}  // namespace anvor

#endif
