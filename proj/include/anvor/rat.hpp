#ifndef ANVOR_RAT_HPP
#define ANVOR_RAT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace anvor {

// Exact rational scalar, kept in lowest terms with positive denominator.
// All arithmetic is exact; there is no rounding anywhere in this class.
class Rat {
public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(n) {}
  Rat(long num, long den);
  Rat(const mpz_class& num, const mpz_class& den);
  explicit Rat(const mpq_class& q);

  // Accepts "p/q" or "p" with optional sign; q must be nonzero.
  static Rat parse(const std::string& s);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rat operator-() const;
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.v_ + b.v_, raw_tag{}); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.v_ - b.v_, raw_tag{}); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.v_ * b.v_, raw_tag{}); }
  friend Rat operator/(const Rat& a, const Rat& b);

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  // "p/q" when q != 1, otherwise "p".
  std::string str() const { return v_.get_str(); }
  double to_double() const { return v_.get_d(); }

  mpz_class floor() const;
  mpz_class ceil() const;
  // Nearest integer; exact halves round up (toward +infinity).
  mpz_class round_half_up() const;

private:
  struct raw_tag {};
  // Trusted constructor: q already canonical (GMP ops preserve canonicity).
  Rat(mpq_class q, raw_tag) : v_(std::move(q)) {}

  mpq_class v_;
};

Rat abs(const Rat& a);

using RatVec = std::vector<Rat>;

}  // namespace anvor

#endif
