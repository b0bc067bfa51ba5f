#include "doctest.h"

#include <set>

#include "anvor/kuhn.hpp"
#include "anvor/randpoint.hpp"
#include "helpers.hpp"

using namespace anvor;
using test::mat;
using test::rv;
using test::rvl;

TEST_CASE("Rat normalization and arithmetic") {
  CHECK(Rat(-4, 6) == Rat(-2, 3));
  CHECK(Rat(3, -6) == Rat(-1, 2));
  CHECK(Rat(-4, 6).den() == 3);
  CHECK(Rat(0, 5).str() == "0");
  CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
  CHECK((Rat(2, 3) * Rat(3, 4)).str() == "1/2");
  CHECK((Rat(1, 3) / Rat(1, 6)) == Rat(2));
  CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::invalid_argument);

  CHECK(Rat::parse("-2/3") == Rat(-2, 3));
  CHECK(Rat::parse("7") == Rat(7));
  CHECK(Rat::parse("4/6").str() == "2/3");
  CHECK_THROWS_AS(Rat::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);

  CHECK(Rat(1, 2).round_half_up() == 1);
  CHECK(Rat(-1, 2).round_half_up() == 0);
  CHECK(Rat(3, 2).round_half_up() == 2);
  CHECK(Rat(-7, 5).round_half_up() == -1);
  CHECK(Rat(5, 3).floor() == 1);
  CHECK(Rat(-5, 3).floor() == -2);
  CHECK(Rat(5, 3).ceil() == 2);
}

TEST_CASE("QuadExt field arithmetic in Q(sqrt(d))") {
  const QuadExt x(Rat(1, 2), Rat(-2, 3), 5);
  const QuadExt y(Rat(3), Rat(1, 7), 5);

  SUBCASE("norm identity") {
    // (a + b sqrt d)(a - b sqrt d) = a^2 - d b^2 as a rational
    const QuadExt p = x * x.conjugate();
    CHECK(p.is_rational());
    CHECK(p.to_rat() == x.field_norm());
    CHECK(x.field_norm() == Rat(1, 4) - Rat(5) * Rat(4, 9));
  }

  SUBCASE("division is exact") {
    const QuadExt q = x / y;
    CHECK(q * y == x);
    CHECK((x / x) == QuadExt(Rat(1)));
  }

  SUBCASE("perfect-square radicands fold to rationals") {
    const QuadExt two(Rat(0), Rat(1), 4);
    CHECK(two.is_rational());
    CHECK(two.to_rat() == Rat(2));
    const QuadExt z(Rat(1, 3), Rat(-1, 2), 9);  // 1/3 - 3/2
    CHECK(z.to_rat() == Rat(-7, 6));
  }

  SUBCASE("sign of mixed-sign values") {
    CHECK(QuadExt(Rat(1), Rat(-2), 3).sign() == -1);  // 1 - 2 sqrt3 < 0
    CHECK(QuadExt(Rat(2), Rat(-1), 3).sign() == 1);   // 2 - sqrt3 > 0
    CHECK(QuadExt(Rat(-2), Rat(1), 3).sign() == -1);
    CHECK(QuadExt().sign() == 0);
  }

  SUBCASE("mixed radicands are rejected, rationals mix freely") {
    const QuadExt r(Rat(2, 3));
    CHECK((x + r).radicand() == 5);
    CHECK_THROWS_AS(x + QuadExt(Rat(1), Rat(1), 7), std::invalid_argument);
  }

  SUBCASE("random algebra closes") {
    Rng rng(11);
    for (int t = 0; t < 50; ++t) {
      const QuadExt a(Rat(rng.uniform(-9, 9), rng.uniform(1, 9)),
                      Rat(rng.uniform(-9, 9), rng.uniform(1, 9)), 7);
      const QuadExt b(Rat(rng.uniform(-9, 9), rng.uniform(1, 9)),
                      Rat(rng.uniform(-9, 9), rng.uniform(1, 9)), 7);
      CHECK((a * b.conjugate()).conjugate() == a.conjugate() * b);
      if (!b.is_zero()) CHECK((a / b) * b == a);
    }
  }
}

TEST_CASE("Matrix dimension checks and exact operations") {
  const RatMat id3 = RatMat::identity(3);
  CHECK(det(id3) == Rat(1));
  CHECK(rank(id3) == 3);
  CHECK_THROWS_AS(id3 * RatMat::identity(2), std::invalid_argument);
  CHECK_THROWS_AS(id3 + RatMat(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(dot(rvl({1, 2}), rvl({1, 2, 3})), std::invalid_argument);

  const RatMat m = mat(2, 2, {"1/2", "1/3", "1/4", "1/5"});
  CHECK(det(m) == Rat(1, 10) - Rat(1, 12));
  const auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(*inv * m == RatMat::identity(2));

  const auto x = solve_square(m, rv({"1", "2"}));
  REQUIRE(x.has_value());
  CHECK(m * *x == rv({"1", "2"}));

  CHECK(!solve_square(mat(2, 2, {"1", "2", "2", "4"}), rvl({1, 0})).has_value());
  CHECK(rank(mat(2, 3, {"1", "2", "3", "2", "4", "6"})) == 1);
  CHECK(affine_rank({rvl({0, 0}), rvl({1, 0}), rvl({2, 0})}) == 1);
  CHECK(affine_rank({rvl({0, 0}), rvl({1, 0}), rvl({0, 1})}) == 2);
}

TEST_CASE("circular shift permutations") {
  // shift by 0 is the identity
  CHECK(circular_shift(3, 0).is_identity());

  // rows of the shifted identity: e_3, e_1, e_2 maps (x1,x2,x3) -> (x3,x1,x2)
  const Perm g = circular_shift(3, 1);
  CHECK(g.apply(rvl({10, 20, 30})) == rvl({30, 10, 20}));
  const RatMat gm = g.matrix();
  CHECK(gm.row(0) == rvl({0, 0, 1}));
  CHECK(gm.row(1) == rvl({1, 0, 0}));
  CHECK(gm.row(2) == rvl({0, 1, 0}));

  // group law: shift(4,3) o shift(4,1) = identity
  CHECK(circular_shift(4, 3).compose(circular_shift(4, 1)).is_identity());
  CHECK(circular_shift(5, -1) == circular_shift(5, 4));

  SUBCASE("permutation matrices are orthogonal 0/1 and the shift has order m") {
    for (int m = 1; m <= 6; ++m) {
      const Perm s = circular_shift(m, 1);
      const RatMat p = s.matrix();
      CHECK(p.transposed() * p == RatMat::identity(m));
      Perm acc = s;
      int order = 1;
      while (!acc.is_identity()) {
        acc = acc.compose(s);
        ++order;
      }
      CHECK(order == (m == 1 ? 1 : m));
    }
  }

  SUBCASE("compose matches matrix product") {
    const Perm a = circular_shift(4, 1), b = transposition(4, 0, 2);
    CHECK(a.compose(b).matrix() == a.matrix() * b.matrix());
    CHECK(a.compose(a.inverse()).is_identity());
  }

  CHECK_THROWS_AS(Perm(std::vector<int>{0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(transposition(3, 1, 1), std::invalid_argument);
}

TEST_CASE("gram_volume_sq") {
  CHECK(gram_volume_sq(RatMat::identity(3)) == Rat(1));  // unit cube

  // first two columns of the n=2 projector: squared area 1/3
  RatMat xi2cols(3, 2);
  xi2cols.set_col(0, rv({"2/3", "-1/3", "-1/3"}));
  xi2cols.set_col(1, rv({"-1/3", "2/3", "-1/3"}));
  CHECK(gram_volume_sq(xi2cols) == Rat(1, 3));
  CHECK(Rat(9) * gram_volume_sq(xi2cols) == Rat(3));  // (n+1)^2 * det = n+1

  RatMat single(3, 1);
  single.set_col(0, rvl({1, -1, 0}));
  CHECK(gram_volume_sq(single) == Rat(2));  // squared length

  // rank-deficient columns give 0, not an error
  RatMat dep(3, 2);
  dep.set_col(0, rvl({1, 2, 3}));
  dep.set_col(1, rvl({2, 4, 6}));
  CHECK(gram_volume_sq(dep) == Rat(0));

  SUBCASE("permutation invariance (property)") {
    Rng rng(5);
    for (int t = 0; t < 30; ++t) {
      RatMat m(4, 3);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = Rat(rng.uniform(-5, 5), rng.uniform(1, 5));
      std::vector<int> img{0, 1, 2, 3};
      for (int i = 3; i > 0; --i) std::swap(img[i], img[rng.uniform(0, i)]);
      const Perm p{img};
      CHECK(gram_volume_sq(p.matrix() * m) == gram_volume_sq(m));
    }
  }
}

TEST_CASE("Kuhn triangulation of the unit cube") {
  SUBCASE("n = 1: the single segment") {
    const auto s = kuhn_simplices(1);
    REQUIRE(s.size() == 1);
    CHECK(s[0].verts == std::vector<RatVec>{rvl({0}), rvl({1})});
  }

  SUBCASE("n = 3: six tetrahedra sharing the diagonal") {
    const auto simplices = kuhn_simplices(3);
    REQUIRE(simplices.size() == 6);
    const RatVec zero = rvl({0, 0, 0}), one = rvl({1, 1, 1});
    for (const Simplex& s : simplices) {
      CHECK(volume_fulldim(s) == Rat(1, 6));
      CHECK(std::count(s.verts.begin(), s.verts.end(), zero) == 1);
      CHECK(std::count(s.verts.begin(), s.verts.end(), one) == 1);
    }
  }

  SUBCASE("volumes sum to 1 for n <= 6") {
    for (int n = 1; n <= 6; ++n) {
      Rat total(0);
      for (const Simplex& s : kuhn_simplices(n)) total += volume_fulldim(s);
      CHECK(total == Rat(1));
    }
  }

  SUBCASE("n = 4: pairwise interior disjointness via separating hyperplanes") {
    const auto perms = all_permutations(4);
    for (size_t a = 0; a < perms.size(); ++a)
      for (size_t b = a + 1; b < perms.size(); ++b) {
        const auto [i, j] = separating_pair(perms[a], perms[b]);
        // i precedes j for perms[a] and follows it for perms[b]: the
        // hyperplane x_i = x_j separates the two open simplices.
        std::vector<int> ra(4), rb(4);
        for (int k = 0; k < 4; ++k) {
          ra[perms[a](k)] = k;
          rb[perms[b](k)] = k;
        }
        CHECK(ra[i] < ra[j]);
        CHECK(rb[i] > rb[j]);
      }
  }

  SUBCASE("sampled points land in exactly one closed simplex") {
    for (int n = 2; n <= 5; ++n) {
      const auto perms = all_permutations(n);
      Rng rng(100 + n);
      int tested = 0;
      while (tested < 40) {
        RatVec x(n);
        for (int i = 0; i < n; ++i) {
          const long den = rng.uniform(1, 997);
          x[i] = Rat(rng.uniform(0, den), den);
        }
        if (descending_order(x).boundary) continue;
        ++tested;
        int hits = 0;
        for (const Perm& p : perms)
          if (kuhn_simplex_contains(p, x)) ++hits;
        CHECK(hits == 1);
      }
    }
  }

  SUBCASE("caps") {
    CHECK_THROWS_AS(kuhn_simplices(9), CapExceeded);
    CHECK_THROWS_AS(kuhn_simplices(5, 4), CapExceeded);
    CHECK_NOTHROW(kuhn_simplices(5, 5));
  }
}

TEST_CASE("descending_order point location") {
  const auto loc = descending_order(rv({"1/2", "-1/2", "0"}));
  CHECK(loc.order.images() == std::vector<int>{0, 2, 1});
  CHECK(!loc.boundary);

  // ties broken by index (stable), flagged as boundary
  const auto tied = descending_order(rv({"1/3", "1/3", "0"}));
  CHECK(tied.order.images() == std::vector<int>{0, 1, 2});
  CHECK(tied.boundary);
}

TEST_CASE("triangulate_parallelepiped") {
  SUBCASE("alpha=1, beta=0 reproduces the Kuhn triangulation") {
    CHECK(triangulate_parallelepiped(Rat(1), Rat(0), 3) == kuhn_simplices(3));
  }

  SUBCASE("alpha=1, beta=-1/4, n=3: volumes match |det A| = 1/4") {
    const Rat alpha(1), beta(-1, 4);
    const int n = 3;
    // Independent oracle: det(alpha I + beta J) by Gaussian elimination,
    // cross-checked against the eigenvalue formula alpha^{n-1}(alpha+n beta).
    RatMat a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = beta + (i == j ? alpha : Rat(0));
    const Rat d = det(a);
    CHECK(d == Rat(1, 4));
    CHECK(d == alpha * alpha * (alpha + Rat(n) * beta));

    const auto simplices = triangulate_parallelepiped(alpha, beta, n);
    REQUIRE(simplices.size() == 6);
    Rat total(0);
    for (const Simplex& s : simplices) {
      CHECK(volume_fulldim(s) == d / Rat(6));
      total += volume_fulldim(s);
    }
    CHECK(total == d);
  }

  SUBCASE("all simplices share the edge from 0 to the column sum") {
    const auto simplices = triangulate_parallelepiped(Rat(1), Rat(1, 2), 3);
    const RatVec zero = rvl({0, 0, 0});
    const RatVec diag = rv({"5/2", "5/2", "5/2"});  // A*1 = (alpha + n beta) 1
    for (const Simplex& s : simplices) {
      CHECK(std::count(s.verts.begin(), s.verts.end(), zero) == 1);
      CHECK(std::count(s.verts.begin(), s.verts.end(), diag) == 1);
    }
  }

  SUBCASE("sampled points of A*[0,1]^n land in exactly one closed simplex") {
    const Rat alpha(1), beta(-1, 4);
    const int n = 3;
    const auto simplices = triangulate_parallelepiped(alpha, beta, n);
    RatMat a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = beta + (i == j ? alpha : Rat(0));
    Rng rng(77);
    int tested = 0;
    while (tested < 25) {
      RatVec y(n);
      for (int i = 0; i < n; ++i) {
        const long den = rng.uniform(1, 97);
        y[i] = Rat(rng.uniform(0, den), den);
      }
      if (descending_order(y).boundary) continue;
      ++tested;
      const RatVec x = a * y;  // interior of the parallelepiped
      int hits = 0;
      for (const Simplex& s : simplices) {
        // barycentric membership: x = sum l_j v_j, l >= 0, sum l = 1
        RatMat sys(n + 1, n + 1);
        RatVec rhs(n + 1);
        for (int j = 0; j <= n; ++j) {
          for (int i = 0; i < n; ++i) sys(i, j) = s.verts[j][i];
          sys(n, j) = Rat(1);
        }
        for (int i = 0; i < n; ++i) rhs[i] = x[i];
        rhs[n] = Rat(1);
        const auto l = solve_square(sys, rhs);
        if (!l) continue;
        bool nonneg = true;
        for (const Rat& v : *l) nonneg = nonneg && v >= Rat(0);
        if (nonneg) ++hits;
      }
      CHECK(hits == 1);
    }
  }

  SUBCASE("singular inputs name the violated condition") {
    CHECK_THROWS_WITH_AS(triangulate_parallelepiped(Rat(0), Rat(1), 3),
                         "triangulate_parallelepiped: singular, alpha == 0",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(triangulate_parallelepiped(Rat(1), Rat(-1, 3), 3),
                         "triangulate_parallelepiped: singular, alpha + n*beta == 0",
                         std::invalid_argument);
  }
}
