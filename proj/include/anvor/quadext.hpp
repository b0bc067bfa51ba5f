#ifndef ANVOR_QUADEXT_HPP
#define ANVOR_QUADEXT_HPP

#include <string>

#include "anvor/rat.hpp"

namespace anvor {

// Element a + b*sqrt(d) of a real quadratic extension of the rationals,
// with the radicand d a non-negative integer fixed per value.
//
// Canonical form: b == 0 implies d == 0, and a perfect-square radicand is
// folded into the rational part at construction. Mixed-radicand arithmetic
// is allowed only when one side is purely rational.
class QuadExt {
public:
  QuadExt() : a_(0), b_(0), d_(0) {}
  QuadExt(const Rat& a) : a_(a), b_(0), d_(0) {}
  QuadExt(long a) : a_(a), b_(0), d_(0) {}
  QuadExt(const Rat& a, const Rat& b, long d);

  const Rat& rational_part() const { return a_; }
  const Rat& radical_coeff() const { return b_; }
  long radicand() const { return d_; }

  bool is_rational() const { return b_.is_zero(); }
  Rat to_rat() const;  // throws when the value is irrational

  QuadExt conjugate() const { return QuadExt(a_, -b_, d_, raw_tag{}); }
  // (a + b*sqrt(d)) * (a - b*sqrt(d)) = a^2 - d*b^2, always rational.
  Rat field_norm() const { return a_ * a_ - Rat(d_) * b_ * b_; }

  int sign() const;
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  QuadExt operator-() const { return QuadExt(-a_, -b_, d_, raw_tag{}); }
  friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y);
  QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
  QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
  QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
  QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

  friend bool operator==(const QuadExt& x, const QuadExt& y);
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

  double to_double() const;
  std::string str() const;

private:
  struct raw_tag {};
  QuadExt(Rat a, Rat b, long d, raw_tag) : a_(std::move(a)), b_(std::move(b)), d_(d) {}
  static long merge_radicand(const QuadExt& x, const QuadExt& y);

  Rat a_, b_;
  long d_;
};

}  // namespace anvor

#endif
