#ifndef ANVOR_KUHN_HPP
#define ANVOR_KUHN_HPP

#include "anvor/perm.hpp"
#include "anvor/simplex.hpp"

namespace anvor {

// The n! simplices of the Kuhn triangulation of the unit cube [0,1]^n:
// images under S_n of the simplex with vertices u_j = (1^j, 0^{n-j}).
// Ordered by the lexicographic order of the acting permutations.
std::vector<Simplex> kuhn_simplices(int n, std::optional<int> cap = std::nullopt);

// Kuhn triangulation of the parallelepiped A*[0,1]^n for A = alpha*I + beta*J.
// Throws std::invalid_argument naming the violated condition when A is
// singular (alpha == 0 or alpha + n*beta == 0).
std::vector<Simplex> triangulate_parallelepiped(const Rat& alpha, const Rat& beta, int n,
                                                std::optional<int> cap = std::nullopt);

// Stable descending sort of the coordinates. order(k) = index of the k-th
// largest coordinate, ties broken by index, so every point maps to exactly
// one permutation. boundary is set when any two coordinates tie.
struct SortLocation {
  Perm order;
  bool boundary;
};
SortLocation descending_order(const RatVec& x);

// Membership of x in the closed Kuhn simplex of sigma:
// 1 >= x_{sigma(0)} >= ... >= x_{sigma(n-1)} >= 0.
bool kuhn_simplex_contains(const Perm& sigma, const RatVec& x);

// Interiors of two distinct Kuhn simplices are separated by a coordinate
// hyperplane x_a = x_b; returns such a pair.
std::pair<int, int> separating_pair(const Perm& sigma, const Perm& tau);

}  // namespace anvor

#endif
