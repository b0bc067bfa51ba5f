#include "anvor/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "anvor/randpoint.hpp"

namespace anvor {
namespace {

using Clock = std::chrono::steady_clock;

struct Runner {
  std::vector<CheckResult> results;

  template <class F>
  void run(const std::string& name, F&& body) {
    CheckResult r;
    r.name = name;
    const auto t0 = Clock::now();
    try {
      body(r);
      if (r.note.empty() && r.pass) r.note = "ok";
    } catch (const CapExceeded& e) {
      r.skipped = true;
      r.pass = false;
      r.note = e.what();
    }
    r.millis = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    results.push_back(std::move(r));
  }
};

RatVec xi_col(int n, int j) { return xi_matrix(n).col(j); }

bool simplex_contains_barycentric(const Simplex& s, const RatVec& x) {
  const int m = static_cast<int>(s.verts.size());
  RatMat a(m, m);
  RatVec rhs(static_cast<size_t>(m));
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i + 1 < m; ++i) a(i, j) = s.verts[static_cast<size_t>(j)][static_cast<size_t>(i)];
    a(m - 1, j) = Rat(1);
  }
  for (int i = 0; i + 1 < m; ++i) rhs[static_cast<size_t>(i)] = x[static_cast<size_t>(i)];
  rhs[static_cast<size_t>(m) - 1] = Rat(1);
  const auto lambda = solve_square(a, rhs);
  if (!lambda) return false;
  for (const Rat& l : *lambda)
    if (l < Rat(0)) return false;
  return true;
}

void decomp_checks(Runner& rn, int n, const VerifyOptions& opt) {
  rn.run("vertex-count", [&](CheckResult& r) {
    const auto verts = voronoi_vertices(n, opt.cap);
    const mpz_class expected = (mpz_class(1) << (n + 1)) - 2;
    r.pass = mpz_class(verts.size()) == expected;
    r.note = std::to_string(verts.size()) + " vertices";
  });

  rn.run("kuhn-volume-sum", [&](CheckResult& r) {
    const auto simplices = kuhn_simplices(n, opt.cap);
    mpz_class nf;
    mpz_fac_ui(nf.get_mpz_t(), static_cast<unsigned long>(n));
    const Rat unit(mpz_class(1), nf);
    Rat total(0);
    bool each = true;
    for (const Simplex& s : simplices) {
      const Rat v = volume_fulldim(s);
      each = each && v == unit;
      total += v;
    }
    r.pass = each && total == Rat(1) && mpz_class(simplices.size()) == nf;
    r.note = std::to_string(simplices.size()) + " simplices, volumes sum to " + total.str();
  });

  rn.run("kuhn-tiling-sample", [&](CheckResult& r) {
    const auto perms = all_permutations(n, opt.cap);
    Rng rng(opt.seed);
    int tested = 0;
    r.pass = true;
    while (tested < opt.trials / 4 + 1) {
      RatVec x(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) {
        const long den = rng.uniform(1, 997);
        x[static_cast<size_t>(i)] = Rat(rng.uniform(0, den), den);
      }
      if (descending_order(x).boundary) continue;  // resample tied coordinates
      ++tested;
      int hits = 0;
      for (const Perm& p : perms)
        if (kuhn_simplex_contains(p, x)) ++hits;
      if (hits != 1) {
        r.pass = false;
        r.note = "point in " + std::to_string(hits) + " simplices: " + vec_str(x);
        return;
      }
    }
    r.note = std::to_string(tested) + " sampled points, unique membership";
  });

  rn.run("simplex-volume-sum", [&](CheckResult& r) {
    const auto simplices = simplex_decomposition(n, opt.cap);
    const Rat v0 = volume_sq(simplices.front());
    bool congruent = true;
    for (const Simplex& s : simplices) congruent = congruent && volume_sq(s) == v0;
    // (count * vol)^2 == n+1
    const Rat count(static_cast<long>(simplices.size()));
    r.pass = congruent && count * count * v0 == Rat(static_cast<long>(n + 1));
    r.note = std::to_string(simplices.size()) + " congruent simplices, total vol^2 = " +
             (count * count * v0).str();
  });

  rn.run("rhombus-volume-identity", [&](CheckResult& r) {
    RatMat gens(n + 1, n);
    for (int j = 0; j < n; ++j) gens.set_col(j, xi_col(n, j));
    const Rat lhs = Rat(static_cast<long>(n + 1)) * Rat(static_cast<long>(n + 1)) * gram_volume_sq(gens);
    r.pass = lhs == Rat(static_cast<long>(n + 1));
    r.note = "(n+1)^2 det = " + lhs.str();
  });

  rn.run("rhombus-partition", [&](CheckResult& r) {
    Rng rng(opt.seed);
    const auto plain = rhombus_decomposition(n, false);
    const auto flipped = rhombus_decomposition(n, true);
    r.pass = true;
    for (int t = 0; t < opt.trials; ++t) {
      const RatVec x = random_interior_point(rng, n);
      int strict = -1, count = 0;
      for (int j = 0; j <= n; ++j)
        if (rhombus_contains(plain[static_cast<size_t>(j)], n, x, true)) {
          strict = j;
          ++count;
        }
      int argmin = 0;
      for (int i = 1; i <= n; ++i)
        if (x[static_cast<size_t>(i)] < x[static_cast<size_t>(argmin)]) argmin = i;
      int covered = 0;
      for (int j = 0; j <= n; ++j)
        if (rhombus_contains(flipped[static_cast<size_t>(j)], n, x, false)) ++covered;
      if (count != 1 || strict != argmin || covered < 1) {
        r.pass = false;
        r.note = "partition failure at " + vec_str(x);
        return;
      }
    }
    r.note = std::to_string(opt.trials) + " interior points, unique strict rhombus";
  });

  rn.run("facet-structure", [&](CheckResult& r) {
    if (n > kFaceLatticeCap)
      throw CapExceeded("facet-structure: n exceeds cap " + std::to_string(kFaceLatticeCap));
    const auto fs = facets(n);
    const auto verts = voronoi_vertices(n);
    r.pass = static_cast<long>(fs.size()) == static_cast<long>(n) * (n + 1);
    const RatMat xi = xi_matrix(n);
    std::optional<RatMat> gram0;
    for (const Facet& f : fs) {
      const auto corners = rhombus_vertex_set(f.geometry, n);
      if (static_cast<long>(corners.size()) != (1L << (n - 1))) r.pass = false;
      std::set<RatVec, bool (*)(const RatVec&, const RatVec&)> on_facet(lex_less);
      for (const RatVec& c : corners) {
        on_facet.insert(c);
        if (c[static_cast<size_t>(f.i)] - c[static_cast<size_t>(f.j)] != Rat(1)) r.pass = false;
      }
      for (const RatVec& v : verts)
        if (!on_facet.count(v) &&
            !(v[static_cast<size_t>(f.i)] - v[static_cast<size_t>(f.j)] < Rat(1)))
          r.pass = false;
      // Generator Gram matrices of all facets coincide exactly.
      const auto free = rhombus_free_indices(f.geometry, n);
      RatMat gens(n + 1, static_cast<int>(free.size()));
      for (size_t c = 0; c < free.size(); ++c) gens.set_col(static_cast<int>(c), xi.col(free[c]));
      const RatMat gram = gens.transposed() * gens;
      if (!gram0)
        gram0 = gram;
      else if (gram != *gram0)
        r.pass = false;
    }
    r.note = std::to_string(fs.size()) + " facets on bisecting hyperplanes";
  });

  rn.run("shift-covariance", [&](CheckResult& r) {
    const Rhombus last{RatVec(static_cast<size_t>(n + 1)), {n}};
    auto base = rhombus_vertex_set(last, n);
    r.pass = true;
    for (int j = 0; j <= n; ++j) {
      const Perm g = circular_shift(n + 1, (j + 1) % (n + 1));
      std::vector<RatVec> image;
      image.reserve(base.size());
      for (const RatVec& v : base) image.push_back(g.apply(v));
      std::sort(image.begin(), image.end(), lex_less);
      if (image != rhombus_vertex_set(Rhombus{RatVec(static_cast<size_t>(n + 1)), {j}}, n))
        r.pass = false;
    }
    r.note = "circular shifts map R_last onto every R_j";
  });

  rn.run("locate-consistency", [&](CheckResult& r) {
    const auto fs = fundamental_simplex(n);
    Rng rng(opt.seed + 1);
    r.pass = true;
    for (int t = 0; t < opt.trials / 2 + 1; ++t) {
      const RatVec x = random_interior_point(rng, n);
      const LocationReport rep = locate(n, x);
      if (!rep.inside) {
        r.pass = false;
        r.note = "interior point reported outside";
        return;
      }
      int argmin = 0;
      for (int i = 1; i <= n; ++i)
        if (x[static_cast<size_t>(i)] < x[static_cast<size_t>(argmin)]) argmin = i;
      Simplex image;
      for (const RatVec& v : fs.verts) image.verts.push_back(rep.order.apply(v));
      bool zero = true;
      for (long c : rep.closest.coords) zero = zero && c == 0;
      if (rep.rhombus != argmin || !simplex_contains_barycentric(image, x) || !zero) {
        r.pass = false;
        r.note = "location mismatch at " + vec_str(x);
        return;
      }
    }
    r.note = "rhombus index, sorting simplex and decoder agree";
  });

  rn.run("membership-oracle", [&](CheckResult& r) {
    if (n > 6) throw CapExceeded("membership-oracle: n exceeds cap 6");
    const auto rep = membership_equivalence_check(n, opt.trials, opt.seed);
    r.pass = rep.pass();
    r.note = std::to_string(rep.trials) + " trials, " +
             std::to_string(rep.counterexamples.size()) + " disagreements";
  });
}

void zonotope_checks(Runner& rn, int n, const VerifyOptions& opt) {
  rn.run("projection-vertices", [&](CheckResult& r) {
    const auto projected = project_cube_vertices(n, opt.cap);
    const auto verts = voronoi_vertices(n, opt.cap);
    const RatVec origin(static_cast<size_t>(n + 1));
    std::vector<RatVec> nonzero;
    bool saw_origin = false;
    for (const RatVec& v : projected) {
      if (v == origin)
        saw_origin = true;
      else
        nonzero.push_back(v);
    }
    r.pass = saw_origin && nonzero == verts;
    r.note = std::to_string(projected.size()) + " projected cube vertices";
  });

  rn.run("cube-cell-projection", [&](CheckResult& r) {
    r.pass = true;
    for (int j = 0; j <= n; ++j) {
      const Rhombus plain = cube_cell_projection(n, j, false);
      const Rhombus shifted = cube_cell_projection(n, j, true);
      if (plain.excluded != std::vector<int>{j} || shifted.excluded != std::vector<int>{j})
        r.pass = false;
      if (shifted.translate != xi_col(n, j)) r.pass = false;
    }
    r.note = "R_j = Xi C_j and xi_j + R_j = Xi(e_j + C_j) for all j";
  });

  rn.run("hull-support", [&](CheckResult& r) {
    if (n > 6) throw CapExceeded("hull-support: n exceeds cap 6");
    const auto rep = zonotope_hull_check(n, opt.seed, 200);
    r.pass = rep.pass;
    r.note = std::to_string(rep.facet_count) + " half-spaces, " +
             std::to_string(rep.directions_checked) + " directions";
    if (!rep.failures.empty()) r.note += "; " + rep.failures.front();
  });

  rn.run("central-symmetry", [&](CheckResult& r) {
    const auto verts = voronoi_vertices(n, opt.cap);
    std::set<RatVec, bool (*)(const RatVec&, const RatVec&)> vs(lex_less);
    vs.insert(verts.begin(), verts.end());
    r.pass = true;
    for (const RatVec& v : verts)
      if (!vs.count(neg(v))) r.pass = false;
    r.note = "vertex set closed under negation";
  });

  rn.run("permutation-equivariance", [&](CheckResult& r) {
    const RatMat xi = xi_matrix(n);
    const auto verts = voronoi_vertices(n, opt.cap);
    std::set<RatVec, bool (*)(const RatVec&, const RatVec&)> vs(lex_less);
    vs.insert(verts.begin(), verts.end());
    Rng rng(opt.seed + 2);
    r.pass = true;
    for (int t = 0; t < 20; ++t) {
      std::vector<int> img(static_cast<size_t>(n + 1));
      for (int i = 0; i <= n; ++i) img[static_cast<size_t>(i)] = i;
      for (int i = n; i > 0; --i)
        std::swap(img[static_cast<size_t>(i)], img[static_cast<size_t>(rng.uniform(0, i))]);
      const Perm p(img);
      const RatMat pm = p.matrix();
      if (pm * xi != xi * pm) r.pass = false;
      for (const RatVec& v : verts)
        if (!vs.count(p.apply(v))) r.pass = false;
    }
    r.note = "Xi commutes with sampled permutations; vertex set setwise invariant";
  });

  rn.run("support-subadditivity", [&](CheckResult& r) {
    Rng rng(opt.seed + 3);
    r.pass = true;
    for (int t = 0; t < opt.trials; ++t) {
      const RatVec u = random_direction(rng, n + 1);
      const RatVec v = random_direction(rng, n + 1);
      if (support_value(n, add(u, v)) > support_value(n, u) + support_value(n, v)) {
        r.pass = false;
        r.note = "subadditivity violated";
        return;
      }
    }
    r.note = "h(u+v) <= h(u) + h(v) on sampled pairs";
  });
}

void section_checks(Runner& rn, int n, const VerifyOptions& opt) {
  (void)opt;
  rn.run("pyramidal-consistency", [&](CheckResult& r) {
    if (n > 5) throw CapExceeded("pyramidal-consistency: n exceeds cap 5");
    const int m = n + 1;
    const Polytope cell = pyramidal_cube(m, std::vector<long>(static_cast<size_t>(m), 0));
    const size_t expected = (size_t{1} << m) + 2 * static_cast<size_t>(m);
    r.pass = cell.vrep->size() == expected && polytope_consistent(cell);
    r.note = std::to_string(cell.vrep->size()) + " vertices against " +
             std::to_string(cell.hrep->size()) + " half-spaces";
  });

  rn.run("section-equivalence", [&](CheckResult& r) {
    if (n > 4) throw CapExceeded("section-equivalence: ambient dimension exceeds cap 5");
    const auto rep = section_equivalence_check(n);
    if (n <= 3) {
      r.pass = rep.equal && rep.affine_rank == n;
      r.note = "section equals the cell vertex-for-vertex";
    } else {
      r.pass = !rep.equal && rep.affine_rank == 4;
      r.note = "EXPECTED-FAIL-OF-EQUALITY: neighbor section has affine rank 4";
    }
  });

  rn.run("neighbor-clearance", [&](CheckResult& r) {
    if (n > 6) throw CapExceeded("neighbor-clearance: n exceeds cap 6");
    const auto rep = neighbor_cell_clearance(n);
    const Rat expected(static_cast<long>(3 - n), 2);
    r.pass = rep.min_dot == expected;
    if (n <= 2) r.pass = r.pass && rep.sign > 0;
    if (n == 3) {
      const RatVec touch{Rat(1, 2), Rat(1, 2), Rat(-1, 2), Rat(-1, 2)};
      r.pass = r.pass && rep.sign == 0 && rep.attained_by == 1 && rep.witness == touch;
    }
    if (n >= 4) r.pass = r.pass && rep.sign < 0;
    r.note = "min x.1 over neighbor cell vertices = " + rep.min_dot.str();
  });
}

}  // namespace

Suite parse_suite(const std::string& s) {
  if (s == "all") return Suite::All;
  if (s == "decomp") return Suite::Decomp;
  if (s == "zonotope") return Suite::Zonotope;
  if (s == "section") return Suite::Section;
  throw std::invalid_argument("unknown suite '" + s + "'");
}

std::vector<CheckResult> run_suite(int n, Suite suite, const VerifyOptions& opt) {
  if (n < 1) throw std::invalid_argument("run_suite: n must be >= 1");
  Runner rn;
  if (suite == Suite::All || suite == Suite::Decomp) decomp_checks(rn, n, opt);
  if (suite == Suite::All || suite == Suite::Zonotope) zonotope_checks(rn, n, opt);
  if (suite == Suite::All || suite == Suite::Section) section_checks(rn, n, opt);
  return rn.results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass && !r.skipped) return false;
  return true;
}

std::string render_checks(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    const char* tag = r.skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL");
    os << "[" << tag << "] " << r.name << ": " << r.note;
    char buf[32];
    std::snprintf(buf, sizeof(buf), " (%.1f ms)", r.millis);
    os << buf << "\n";
  }
  return os.str();
}

}  // namespace anvor
