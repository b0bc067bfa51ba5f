#include "anvor/quadext.hpp"

#include <cmath>

namespace anvor {
namespace {

// Exact integer square root when d is a perfect square, -1 otherwise.
long perfect_sqrt(long d) {
  if (d < 0) return -1;
  long r = static_cast<long>(std::llround(std::sqrt(static_cast<double>(d))));
  for (long c = r - 2; c <= r + 2; ++c)
    if (c >= 0 && c * c == d) return c;
  return -1;
}

}  // namespace

QuadExt::QuadExt(const Rat& a, const Rat& b, long d) : a_(a), b_(b), d_(d) {
  if (d < 0) throw std::invalid_argument("QuadExt: negative radicand");
  if (b_.is_zero() || d_ == 0) {
    b_ = Rat(0);
    d_ = 0;
    return;
  }
  if (long r = perfect_sqrt(d_); r >= 0) {
    a_ += b_ * Rat(r);
    b_ = Rat(0);
    d_ = 0;
  }
}

Rat QuadExt::to_rat() const {
  if (!is_rational()) throw std::domain_error("QuadExt: value is irrational");
  return a_;
}

int QuadExt::sign() const {
  const int sa = a_.sign(), sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 against d*b^2.
  const Rat lhs = a_ * a_, rhs = Rat(d_) * b_ * b_;
  if (lhs == rhs) return 0;  // unreachable for non-square d, kept for safety
  return lhs > rhs ? sa : sb;
}

long QuadExt::merge_radicand(const QuadExt& x, const QuadExt& y) {
  if (x.d_ == 0) return y.d_;
  if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
  throw std::invalid_argument("QuadExt: mixed radicands");
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
  return QuadExt(x.a_ + y.a_, x.b_ + y.b_, QuadExt::merge_radicand(x, y));
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
  return QuadExt(x.a_ - y.a_, x.b_ - y.b_, QuadExt::merge_radicand(x, y));
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
  const long d = QuadExt::merge_radicand(x, y);
  return QuadExt(x.a_ * y.a_ + Rat(d) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d);
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) {
  if (y.is_zero()) throw std::invalid_argument("QuadExt: division by zero");
  const long d = QuadExt::merge_radicand(x, y);
  const Rat nrm = y.field_norm();
  // norm = 0 with y != 0 cannot happen: square radicands are folded away.
  const QuadExt num = x * y.conjugate();
  return QuadExt(num.a_ / nrm, num.b_ / nrm, d);
}

bool operator==(const QuadExt& x, const QuadExt& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_) return false;
  return x.b_.is_zero() || x.d_ == y.d_;
}

double QuadExt::to_double() const {
  return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(d_));
}

std::string QuadExt::str() const {
  if (is_rational()) return a_.str();
  std::string s = a_.str();
  s += (b_.sign() < 0) ? " - " : " + ";
  s += abs(b_).str();
  s += "*sqrt(" + std::to_string(d_) + ")";
  return s;
}

}  // namespace anvor
