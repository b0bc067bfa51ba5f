#include "anvor/rat.hpp"

namespace anvor {

Rat::Rat(long num, long den) : v_(num, den) {
  if (den == 0) throw std::invalid_argument("Rat: zero denominator");
  v_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) : v_(num) {
  if (den == 0) throw std::invalid_argument("Rat: zero denominator");
  v_ /= mpq_class(den);
}

Rat::Rat(const mpq_class& q) : v_(q) {
  if (q.get_den() == 0) throw std::invalid_argument("Rat: zero denominator");
  v_.canonicalize();
}

Rat Rat::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rat::parse: empty string");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class n(s);
      return Rat(n, mpz_class(1));
    }
    mpz_class n(s.substr(0, slash));
    mpz_class d(s.substr(slash + 1));
    return Rat(n, d);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rat::parse: malformed rational '" + s + "'");
  }
}

Rat Rat::operator-() const {
  Rat r;
  r.v_ = -v_;
  return r;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) throw std::invalid_argument("Rat: division by zero");
  return Rat(a.v_ / b.v_, Rat::raw_tag{});
}

mpz_class Rat::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

mpz_class Rat::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

mpz_class Rat::round_half_up() const {
  // floor(x + 1/2)
  mpq_class shifted = v_ + mpq_class(1, 2);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), shifted.get_num().get_mpz_t(), shifted.get_den().get_mpz_t());
  return q;
}

Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }

}  // namespace anvor
