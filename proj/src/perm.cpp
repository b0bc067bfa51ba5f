#include "anvor/perm.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace anvor {

Perm::Perm(int m) : img_(static_cast<size_t>(m)) {
  if (m < 1) throw std::invalid_argument("Perm: size must be positive");
  std::iota(img_.begin(), img_.end(), 0);
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  const int m = size();
  if (m < 1) throw std::invalid_argument("Perm: empty image vector");
  std::vector<bool> seen(static_cast<size_t>(m), false);
  for (int v : img_) {
    if (v < 0 || v >= m || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("Perm: not a bijection");
    seen[static_cast<size_t>(v)] = true;
  }
}

Perm Perm::compose(const Perm& rhs) const {
  if (size() != rhs.size()) throw std::invalid_argument("Perm: compose size mismatch");
  std::vector<int> r(img_.size());
  for (int i = 0; i < size(); ++i) r[static_cast<size_t>(i)] = (*this)(rhs(i));
  return Perm(std::move(r));
}

Perm Perm::inverse() const {
  std::vector<int> r(img_.size());
  for (int i = 0; i < size(); ++i) r[static_cast<size_t>(img_[static_cast<size_t>(i)])] = i;
  return Perm(std::move(r));
}

bool Perm::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

RatMat Perm::matrix() const {
  RatMat p(size(), size());
  for (int j = 0; j < size(); ++j) p((*this)(j), j) = Rat(1);
  return p;
}

Perm circular_shift(int m, long j) {
  if (m < 1) throw std::invalid_argument("circular_shift: size must be positive");
  long s = j % m;
  if (s < 0) s += m;
  std::vector<int> img(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) img[static_cast<size_t>(i)] = static_cast<int>((i + s) % m);
  return Perm(std::move(img));
}

Perm transposition(int m, int i, int j) {
  if (i < 0 || j < 0 || i >= m || j >= m) throw std::invalid_argument("transposition: index range");
  if (i == j) throw std::invalid_argument("transposition: indices must differ");
  Perm p(m);
  std::vector<int> img = p.images();
  std::swap(img[static_cast<size_t>(i)], img[static_cast<size_t>(j)]);
  return Perm(std::move(img));
}

std::vector<Perm> all_permutations(int m, std::optional<int> cap) {
  if (m < 1) throw std::invalid_argument("all_permutations: size must be positive");
  const int limit = cap.value_or(kFactorialCap);
  if (m > limit)
    throw CapExceeded("all_permutations: " + std::to_string(m) +
                      "! exceeds enumeration cap " + std::to_string(limit));
  std::vector<int> img(static_cast<size_t>(m));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

mpz_class factorial(int m) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m < 0 ? 0 : m));
  return f;
}

}  // namespace anvor
