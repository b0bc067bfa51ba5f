#include "doctest.h"

#include <set>

#include "anvor/randpoint.hpp"
#include "anvor/zonotope.hpp"
#include "helpers.hpp"

using namespace anvor;
using test::rv;
using test::rvl;
using test::sorted;

namespace {
RatVec xi_col(int n, int j) { return xi_matrix(n).col(j); }
}

TEST_CASE("voronoi_zonotope generators sum to zero") {
  for (int n = 1; n <= 6; ++n) {
    const Zonotope z = voronoi_zonotope(n);
    RatVec total(n + 1);
    for (int j = 0; j <= n; ++j) total = add(total, z.generators.col(j));
    CHECK(total == RatVec(n + 1));
  }
}

TEST_CASE("project_cube_vertices") {
  SUBCASE("n = 1: the segment plus the origin") {
    CHECK(project_cube_vertices(1) ==
          sorted({rvl({0, 0}), rv({"1/2", "-1/2"}), rv({"-1/2", "1/2"})}));
  }

  SUBCASE("n = 2: hexagon plus center, 7 points") {
    const auto pts = project_cube_vertices(2);
    CHECK(pts.size() == 7);
  }

  SUBCASE("projection drops exactly the two diagonal cube vertices onto 0") {
    for (int n = 1; n <= 6; ++n) {
      const int m = n + 1;
      const RatMat xi = xi_matrix(n);
      const RatVec origin(m);
      int zero_preimages = 0;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        RatVec b(m);
        for (int i = 0; i < m; ++i)
          if (mask & (std::uint64_t{1} << i)) b[i] = Rat(1);
        if (xi * b == origin) ++zero_preimages;
      }
      CHECK(zero_preimages == 2);
    }
  }

  SUBCASE("equals the cell vertices plus the origin for n <= 8") {
    for (int n = 1; n <= 8; ++n) {
      const auto projected = project_cube_vertices(n);
      const RatVec origin(n + 1);
      std::vector<RatVec> nonzero;
      bool saw_origin = false;
      for (const RatVec& v : projected) {
        if (v == origin)
          saw_origin = true;
        else
          nonzero.push_back(v);
      }
      CHECK(saw_origin);
      CHECK(nonzero == voronoi_vertices(n));
    }
  }

  SUBCASE("Xi u_j reaches the fundamental simplex vertices") {
    for (int n = 1; n <= 5; ++n) {
      const RatMat xi = xi_matrix(n);
      const auto fs = fundamental_simplex(n);
      for (int j = 0; j <= n; ++j) {
        RatVec u(n + 1);
        for (int i = 0; i < j; ++i) u[i] = Rat(1);
        CHECK(xi * u == fs.verts[j]);
      }
      CHECK(xi * RatVec(n + 1, Rat(1)) == RatVec(n + 1));
    }
  }

  CHECK_THROWS_AS(project_cube_vertices(13), CapExceeded);
}

TEST_CASE("cube_cell_projection") {
  SUBCASE("n = 2, j = 3: the rhombus spanned by xi_1, xi_2") {
    const Rhombus r = cube_cell_projection(2, 2, false);
    CHECK(r.excluded == std::vector<int>{2});
    CHECK(r.translate == RatVec(3));
    CHECK(rhombus_free_indices(r, 2) == std::vector<int>{0, 1});
  }

  SUBCASE("flipped identity xi_j + R_j = Xi(e_j + C_j)") {
    for (int n = 1; n <= 5; ++n)
      for (int j = 0; j <= n; ++j) {
        const Rhombus r = cube_cell_projection(n, j, true);
        CHECK(r.translate == xi_col(n, j));
        CHECK(r.excluded == std::vector<int>{j});
      }
  }

  CHECK_THROWS_AS(cube_cell_projection(2, 3, false), std::invalid_argument);
}

TEST_CASE("support_point and support_value") {
  SUBCASE("u = e_1 - e_{n+1} attains support value 1") {
    for (int n = 1; n <= 6; ++n) {
      const RatVec u = sub(unit_vec(n + 1, 0), unit_vec(n + 1, n));
      const RatVec p = support_point(n, u);
      CHECK(dot(p, u) == Rat(1));
      CHECK(support_value(n, u) == Rat(1));
    }
  }

  SUBCASE("u = 1 gives the origin with value 0") {
    const RatVec ones(4, Rat(1));
    CHECK(support_point(3, ones) == RatVec(4));
    CHECK(support_value(3, ones) == Rat(0));
  }

  SUBCASE("u = xi_1 selects only xi_1") {
    for (int n = 1; n <= 5; ++n) CHECK(support_point(n, xi_col(n, 0)) == xi_col(n, 0));
  }

  SUBCASE("support equals the vertex maximum (property)") {
    for (int n = 2; n <= 5; ++n) {
      const auto verts = voronoi_vertices(n);
      Rng rng(600 + n);
      for (int t = 0; t < 60; ++t) {
        const RatVec u = random_direction(rng, n + 1);
        const RatVec w = xi_matrix(n) * u;
        bool degenerate = true;
        for (const Rat& v : w) degenerate = degenerate && v.is_zero();
        if (degenerate) continue;
        Rat best = dot(verts.front(), u);
        for (const RatVec& v : verts) best = std::max(best, dot(v, u));
        CHECK(dot(support_point(n, u), u) == best);
        CHECK(support_value(n, u) == best);
      }
    }
  }

  SUBCASE("generic directions return a vertex") {
    for (int n = 2; n <= 4; ++n) {
      const auto verts = voronoi_vertices(n);
      Rng rng(700 + n);
      int checked = 0;
      while (checked < 25) {
        const RatVec u = random_direction(rng, n + 1, 50);
        const RatVec w = xi_matrix(n) * u;
        bool distinct = true;
        for (size_t a = 0; a < w.size() && distinct; ++a) {
          if (w[a].is_zero()) distinct = false;
          for (size_t b = a + 1; b < w.size(); ++b)
            if (w[a] == w[b]) distinct = false;
        }
        if (!distinct) continue;
        ++checked;
        CHECK(std::binary_search(verts.begin(), verts.end(), support_point(n, u), lex_less));
      }
    }
  }

  SUBCASE("subadditivity h(u+v) <= h(u) + h(v) (property)") {
    Rng rng(800);
    for (int t = 0; t < 80; ++t) {
      const int n = static_cast<int>(rng.uniform(1, 5));
      const RatVec u = random_direction(rng, n + 1);
      const RatVec v = random_direction(rng, n + 1);
      CHECK(support_value(n, add(u, v)) <= support_value(n, u) + support_value(n, v));
    }
  }

  CHECK_THROWS_AS(support_point(2, RatVec(3)), std::invalid_argument);
}

TEST_CASE("zonotope_hull_check") {
  SUBCASE("n = 2: six boundary vertices, each edge supported by two") {
    const auto rep = zonotope_hull_check(2, 42);
    CHECK(rep.pass);
    CHECK(rep.vertex_count == 6);
    CHECK(rep.facet_count == 6);
  }

  SUBCASE("n = 3: each of the 12 facets supported by exactly 4 vertices") {
    const auto rep = zonotope_hull_check(3, 42);
    CHECK(rep.pass);
    CHECK(rep.facet_count == 12);
    CHECK(rep.directions_checked > 150);
  }

  SUBCASE("n = 4..5 pass as well") {
    CHECK(zonotope_hull_check(4, 1, 60).pass);
    CHECK(zonotope_hull_check(5, 1, 40).pass);
  }

  CHECK_THROWS_AS(zonotope_hull_check(7, 1), CapExceeded);
}

TEST_CASE("central symmetry of the vertex set") {
  for (int n = 1; n <= 6; ++n) {
    const auto verts = voronoi_vertices(n);
    for (const RatVec& v : verts)
      CHECK(std::binary_search(verts.begin(), verts.end(), neg(v), lex_less));
  }
}

TEST_CASE("permutation equivariance of the projection") {
  for (int n = 1; n <= 5; ++n) {
    const RatMat xi = xi_matrix(n);
    const auto verts = voronoi_vertices(n);
    Rng rng(900 + n);
    for (int t = 0; t < 10; ++t) {
      std::vector<int> img(n + 1);
      for (int i = 0; i <= n; ++i) img[i] = i;
      for (int i = n; i > 0; --i) std::swap(img[i], img[rng.uniform(0, i)]);
      const Perm p{img};
      CHECK(p.matrix() * xi == xi * p.matrix());
      for (const RatVec& v : verts)
        CHECK(std::binary_search(verts.begin(), verts.end(), p.apply(v), lex_less));
    }
  }
}
