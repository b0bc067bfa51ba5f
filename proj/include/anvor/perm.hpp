#ifndef ANVOR_PERM_HPP
#define ANVOR_PERM_HPP

#include <optional>
#include <vector>

#include "anvor/linalg.hpp"

namespace anvor {

// A bijection on {0..m-1}. As a matrix it sends e_j to e_{sigma(j)}, so the
// point action is (P x)_{sigma(j)} = x_j.
class Perm {
public:
  explicit Perm(int m);                    // identity
  explicit Perm(std::vector<int> images);  // validated bijection

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_.at(static_cast<size_t>(i)); }
  const std::vector<int>& images() const { return img_; }

  Perm compose(const Perm& rhs) const;  // (this o rhs)(i) = this(rhs(i))
  Perm inverse() const;
  bool is_identity() const;

  RatMat matrix() const;

  template <class V>
  V apply(const V& x) const {
    if (static_cast<int>(x.size()) != size()) throw std::invalid_argument("Perm: size mismatch");
    V y(x.size());
    for (int j = 0; j < size(); ++j) y[static_cast<size_t>(img_[static_cast<size_t>(j)])] = x[static_cast<size_t>(j)];
    return y;
  }

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

private:
  std::vector<int> img_;
};

// Circular shift: sigma(i) = (i + j) mod m; as a matrix, the rows of the
// identity shifted downward by j. j is normalized mod m.
Perm circular_shift(int m, long j);

Perm transposition(int m, int i, int j);

// All m! permutations in lexicographic order of their image vectors.
// Refuses m above the cap (default 8) to keep enumerations at desk scale.
inline constexpr int kFactorialCap = 8;
std::vector<Perm> all_permutations(int m, std::optional<int> cap = std::nullopt);

mpz_class factorial(int m);

// Cap violation for the factorial/subset enumeration guards.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace anvor

#endif
