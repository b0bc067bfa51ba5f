#include "doctest.h"

#include "anvor/lattice.hpp"
#include "anvor/randpoint.hpp"
#include "helpers.hpp"

using namespace anvor;
using test::mat;
using test::rv;
using test::rvl;

TEST_CASE("gen_matrix_A") {
  CHECK(gen_matrix_A(1).col(0) == rvl({1, -1}));
  CHECK(gen_matrix_A(2) == mat(3, 2, {"1", "0", "-1", "1", "0", "-1"}));

  // columns are the simple roots e_i - e_{i+1}
  const RatMat g3 = gen_matrix_A(3);
  for (int j = 0; j < 3; ++j)
    CHECK(g3.col(j) == sub(unit_vec(4, j), unit_vec(4, j + 1)));

  for (int n = 1; n <= 6; ++n) {
    const RatMat g = gen_matrix_A(n);
    for (int j = 0; j < n; ++j) {
      CHECK(vec_sum(g.col(j)).is_zero());        // lies in the hyperplane
      CHECK(norm_sq(g.col(j)) == Rat(2));        // root length
    }
  }
  CHECK_THROWS_AS(gen_matrix_A(0), std::invalid_argument);
}

TEST_CASE("xi_matrix is the orthogonal projector onto x.1 = 0") {
  const Rat third(1, 3);
  CHECK(xi_matrix(2) == mat(3, 3, {"2/3", "-1/3", "-1/3", "-1/3", "2/3", "-1/3", "-1/3", "-1/3",
                                   "2/3"}));
  for (int n = 1; n <= 8; ++n) {
    const RatMat xi = xi_matrix(n);
    const int m = n + 1;
    CHECK(xi * xi == xi);               // idempotent
    CHECK(xi.transposed() == xi);       // symmetric
    CHECK(xi * RatVec(m, Rat(1)) == RatVec(m, Rat(0)));  // kernel contains 1

    // Gram of the columns: n/(n+1) on the diagonal, -1/(n+1) off it
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        CHECK(dot(xi.col(a), xi.col(b)) ==
              (a == b ? Rat(n, m) : Rat(-1, m)));
  }

  SUBCASE("projection residual is parallel to 1 (property)") {
    Rng rng(21);
    for (int t = 0; t < 30; ++t) {
      const int n = static_cast<int>(rng.uniform(1, 6));
      RatVec x(n + 1);
      for (int i = 0; i <= n; ++i) x[i] = Rat(rng.uniform(-50, 50), rng.uniform(1, 20));
      const RatVec px = xi_matrix(n) * x;
      CHECK(vec_sum(px).is_zero());
      const RatVec res = sub(x, px);
      for (int i = 0; i < n; ++i) CHECK(res[i] == res[i + 1]);
    }
  }
}

TEST_CASE("dual_gen_matrix") {
  const RatMat d2 = dual_gen_matrix(2);
  CHECK(d2.col(0) == rv({"2/3", "-1/3", "-1/3"}));
  CHECK(d2.col(1) == rv({"-1/3", "2/3", "-1/3"}));

  for (int n = 1; n <= 6; ++n) {
    const RatMat gen = gen_matrix_A(n), dual = dual_gen_matrix(n);
    // duality: integer pairings both ways
    const RatMat pairing = gen.transposed() * dual;
    CHECK(is_integral(pairing));
    const Rat d = det(pairing);
    CHECK((d == Rat(1) || d == Rat(-1)));
  }
}

TEST_CASE("proj_matrix: exact orthogonal map onto R^n") {
  SUBCASE("n = 3 demotes to the rational matrix of halves") {
    const QuadMat m3 = proj_matrix(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) CHECK(m3(i, j).is_rational());
    CHECK(proj_matrix_rat(3) ==
          mat(3, 4, {"-1/2", "1/2", "1/2", "-1/2", "1/2", "-1/2", "1/2", "-1/2", "1/2", "1/2",
                     "-1/2", "-1/2"}));
  }

  SUBCASE("n = 2 lives in Q(sqrt 3)") {
    const QuadMat m2 = proj_matrix(2);
    CHECK(!m2(0, 0).is_rational());
    // symbolic expansion: -(1 - c) with c = 1/2 + sqrt(3)/6
    CHECK(m2(0, 0) == QuadExt(Rat(-1, 2), Rat(1, 6), 3));
    CHECK_THROWS_AS(proj_matrix_rat(2), std::domain_error);
  }

  SUBCASE("M M^T = I and M 1 = 0 exactly for n = 1..6") {
    for (int n = 1; n <= 6; ++n) {
      const QuadMat m = proj_matrix(n);
      CHECK(m * m.transposed() == to_quad(RatMat::identity(n)));
      const std::vector<QuadExt> ones(n + 1, QuadExt(Rat(1)));
      for (const QuadExt& e : m * ones) CHECK(e.is_zero());
    }
  }

  SUBCASE("projection_bundle ties both maps together") {
    const ProjectionBundle b = projection_bundle(3);
    CHECK(b.xi == xi_matrix(3));
    CHECK(b.mproj == proj_matrix(3));
    CHECK(b.xi * b.xi == b.xi);
  }
}

TEST_CASE("FCC and BCC equivalences") {
  const RatMat mg = proj_matrix_rat(3) * gen_matrix_A(3);
  CHECK(mg == mat(3, 3, {"-1", "0", "1", "1", "-1", "1", "0", "1", "0"}));

  const RatMat g_fcc = mat(3, 3, {"0", "1", "1", "1", "0", "1", "1", "1", "0"});
  CHECK(lattices_equal(mg, g_fcc));

  const RatMat g_bcc =
      mat(3, 3, {"-1/2", "1/2", "1/2", "1/2", "-1/2", "1/2", "1/2", "1/2", "-1/2"});
  CHECK(proj_matrix_rat(3) * dual_gen_matrix(3) == g_bcc);

  SUBCASE("lattices_equal basics") {
    const RatMat u = mat(3, 3, {"1", "3", "0", "0", "1", "0", "0", "5", "1"});  // unimodular
    CHECK(lattices_equal(g_fcc, g_fcc * u));
    CHECK(!lattices_equal(RatMat::identity(3), Rat(2) * RatMat::identity(3)));
    CHECK_THROWS_AS(lattices_equal(RatMat(3, 3), g_fcc), std::invalid_argument);
  }
}

TEST_CASE("closest_point_A") {
  SUBCASE("origin and interior") {
    CHECK(closest_point_A(2, rvl({0, 0, 0})).coords == std::vector<long>{0, 0, 0});
  }

  SUBCASE("the vertex xi_1 ties toward the origin") {
    CHECK(closest_point_A(2, rv({"2/3", "-1/3", "-1/3"})).coords ==
          std::vector<long>{0, 0, 0});
  }

  SUBCASE("frozen oracle value for (3/2, -1, -1/2)") {
    // brute force over the coordinate ball finds two minimizers at squared
    // distance 1/2: (1,-1,0) and (2,-1,-1); the first is lex-smallest.
    const RatVec x = rv({"3/2", "-1", "-1/2"});
    const auto brute = brute_force_closest_A(2, x);
    CHECK(brute.coords == std::vector<long>{1, -1, 0});
    CHECK(closest_point_A(2, x) == brute);
    CHECK(norm_sq(sub(x, to_ratvec(brute.coords))) == Rat(1, 2));
  }

  SUBCASE("boundary tie on the n = 1 segment picks the lex-smallest") {
    CHECK(closest_point_A(1, rv({"-1/2", "1/2"})).coords == std::vector<long>{-1, 1});
    CHECK(closest_point_A(1, rv({"1/2", "-1/2"})).coords == std::vector<long>{0, 0});
  }

  SUBCASE("off-plane input is rejected") {
    CHECK_THROWS_AS(closest_point_A(2, rvl({1, 1, 1})), std::invalid_argument);
    CHECK_THROWS_AS(closest_point_A(2, rvl({0, 0})), std::invalid_argument);
  }

  SUBCASE("boundary points resolve like the oracle's lex tie-break") {
    for (int n = 2; n <= 4; ++n) {
      // cell vertices and facet-corner midpoints all sit on Voronoi walls
      std::vector<RatVec> probes;
      const RatMat xi = xi_matrix(n);
      for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << (n + 1)); ++mask) {
        RatVec b(n + 1);
        for (int i = 0; i <= n; ++i)
          if (mask & (std::uint64_t{1} << i)) b[i] = Rat(1);
        probes.push_back(xi * b);
      }
      probes.push_back(scale(Rat(1, 2), add(probes[0], probes[1])));
      probes.push_back(scale(Rat(1, 2), add(probes[0], probes.back())));
      for (const RatVec& x : probes) CHECK(closest_point_A(n, x) == brute_force_closest_A(n, x));
    }
  }

  SUBCASE("wall points with repeated extreme coordinates (property)") {
    // Spread exactly 1 with several coordinates at the max and at the min:
    // the tie set then contains multi-root sums, stressing the tie-break.
    Rng rng(333);
    for (int n = 3; n <= 5; ++n) {
      const int m = n + 1;
      for (int t = 0; t < 40; ++t) {
        const int a = static_cast<int>(rng.uniform(1, m - 1));
        const int b = static_cast<int>(rng.uniform(1, m - a));
        RatVec x(m);
        for (int i = 0; i < a; ++i) x[i] = Rat(1);
        for (int i = a; i < a + b; ++i) x[i] = Rat(0);
        for (int i = a + b; i < m; ++i) {
          const long den = rng.uniform(2, 40);
          x[i] = Rat(rng.uniform(1, den - 1), den);  // strictly between 0 and 1
        }
        // shuffle positions, then recenter onto the hyperplane
        for (int i = m - 1; i > 0; --i)
          std::swap(x[i], x[static_cast<size_t>(rng.uniform(0, i))]);
        const RatVec centered = xi_matrix(n) * x;  // spread still exactly 1
        const auto fast = closest_point_A(n, centered);
        const auto slow = brute_force_closest_A(n, centered);
        CHECK(fast == slow);
      }
    }
  }

  SUBCASE("agreement with the exhaustive oracle (property)") {
    for (int n = 1; n <= 6; ++n) {
      Rng rng(300 + n);
      const int trials = n <= 4 ? 60 : 25;
      for (int t = 0; t < trials; ++t) {
        const RatVec x = random_plane_point(rng, n);
        const auto fast = closest_point_A(n, x);
        const auto slow = brute_force_closest_A(n, x);
        CHECK(fast == slow);
        // residual lies in the closed cell
        const RatVec res = sub(x, to_ratvec(fast.coords));
        Rat maxv = res[0], minv = res[0];
        for (const Rat& v : res) {
          if (v > maxv) maxv = v;
          if (v < minv) minv = v;
        }
        CHECK(maxv - minv <= Rat(1));
      }
    }
  }
}

TEST_CASE("reflection_as_permutation realizes the root reflections") {
  const Perm p = reflection_as_permutation(2, 0, 1);
  CHECK(p.apply(rvl({1, 0, 0})) == rvl({0, 1, 0}));
  CHECK(p.apply(rvl({1, 0, 0})) == reflect_across_root(rvl({1, 0, 0}), 0, 1));

  // points on the mirror are fixed
  CHECK(reflect_across_root(rvl({2, 2, -4}), 0, 1) == rvl({2, 2, -4}));

  // composition identity in the symmetric group
  const Perm a = reflection_as_permutation(2, 0, 1);
  const Perm b = reflection_as_permutation(2, 1, 2);
  CHECK(a.compose(b).compose(a) == reflection_as_permutation(2, 0, 2));

  SUBCASE("pointwise agreement on random vectors (property)") {
    Rng rng(17);
    for (int t = 0; t < 40; ++t) {
      const int m = static_cast<int>(rng.uniform(2, 7));
      const int i = static_cast<int>(rng.uniform(0, m - 1));
      int j = static_cast<int>(rng.uniform(0, m - 1));
      if (i == j) j = (j + 1) % m;
      RatVec x(m);
      for (int c = 0; c < m; ++c) x[c] = Rat(rng.uniform(-30, 30), rng.uniform(1, 9));
      CHECK(reflection_as_permutation(m - 1, i, j).apply(x) == reflect_across_root(x, i, j));
    }
  }

  CHECK_THROWS_AS(reflection_as_permutation(2, 1, 1), std::invalid_argument);
}

TEST_CASE("LatticePoint family invariants") {
  CHECK_NOTHROW(LatticePoint({1, -1, 0}, LatticeSpec::A(2)));
  CHECK_THROWS_AS(LatticePoint({1, 0, 0}, LatticeSpec::A(2)), std::invalid_argument);
  CHECK_NOTHROW(LatticePoint({1, 1, 0}, LatticeSpec::D_of_dim(3)));
  CHECK_THROWS_AS(LatticePoint({1, 0, 0}, LatticeSpec::D_of_dim(3)), std::invalid_argument);
  CHECK_THROWS_AS(LatticePoint({1, 0}, LatticeSpec::A(2)), std::invalid_argument);
  CHECK_THROWS_AS(LatticePoint({0, 0, 0}, LatticeSpec::ADual(2)), std::invalid_argument);
  CHECK_NOTHROW(LatticePoint({5, -7}, LatticeSpec::Z(2)));
}
