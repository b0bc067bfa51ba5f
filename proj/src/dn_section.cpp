#include "anvor/dn.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace anvor {
namespace {

// Incremental reduced row echelon over (normal | rhs) rows. Tracks pivot
// columns; adding a dependent row is rejected.
struct Echelon {
  int cols;  // ambient dimension (rhs column excluded)
  std::vector<RatVec> rows;
  std::vector<int> pivots;

  explicit Echelon(int ambient) : cols(ambient) {}

  bool add(RatVec row) {
    for (size_t r = 0; r < rows.size(); ++r) {
      const Rat& c = row[static_cast<size_t>(pivots[r])];
      if (c.is_zero()) continue;
      const Rat f = c;  // pivot entries are normalized to 1
      for (int j = 0; j <= cols; ++j) row[static_cast<size_t>(j)] -= f * rows[r][static_cast<size_t>(j)];
    }
    int pivot = -1;
    for (int j = 0; j < cols; ++j)
      if (!row[static_cast<size_t>(j)].is_zero()) {
        pivot = j;
        break;
      }
    if (pivot < 0) return false;
    const Rat inv = Rat(1) / row[static_cast<size_t>(pivot)];
    for (int j = 0; j <= cols; ++j) row[static_cast<size_t>(j)] *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      const Rat f = rows[r][static_cast<size_t>(pivot)];
      if (f.is_zero()) continue;
      for (int j = 0; j <= cols; ++j) rows[r][static_cast<size_t>(j)] -= f * row[static_cast<size_t>(j)];
    }
    rows.push_back(std::move(row));
    pivots.push_back(pivot);
    return true;
  }

  bool complete() const { return static_cast<int>(rows.size()) == cols; }

  RatVec solution() const {
    RatVec x(static_cast<size_t>(cols));
    for (size_t r = 0; r < rows.size(); ++r)
      x[static_cast<size_t>(pivots[r])] = rows[r][static_cast<size_t>(cols)];
    return x;
  }
};

bool satisfies_all(const std::vector<HalfSpace>& hs, const RatVec& x) {
  for (const HalfSpace& h : hs)
    if (dot(h.normal, x) > h.offset) return false;
  return true;
}

void enumerate_vertices(const std::vector<HalfSpace>& hs, size_t start, const Echelon& ech,
                        std::set<RatVec, bool (*)(const RatVec&, const RatVec&)>& out) {
  if (ech.complete()) {
    RatVec x = ech.solution();
    if (satisfies_all(hs, x)) out.insert(std::move(x));
    return;
  }
  const int need = ech.cols - static_cast<int>(ech.rows.size());
  for (size_t i = start; i + static_cast<size_t>(need) <= hs.size(); ++i) {
    RatVec row = hs[i].normal;
    row.push_back(hs[i].offset);
    Echelon next = ech;
    if (!next.add(std::move(row))) continue;
    enumerate_vertices(hs, i + 1, next, out);
  }
}

}  // namespace

Polytope pyramidal_cube(int m, const std::vector<long>& p) {
  if (m < 2) throw std::invalid_argument("pyramidal_cube: m must be >= 2");
  if (static_cast<int>(p.size()) != m)
    throw std::invalid_argument("pyramidal_cube: center dimension mismatch");
  const long sum = std::accumulate(p.begin(), p.end(), 0L);
  if (sum % 2 != 0)
    throw std::invalid_argument("pyramidal_cube: center must have even coordinate sum");

  Polytope poly;
  poly.ambient = m;
  std::vector<RatVec> verts;
  verts.reserve((size_t{1} << m) + 2 * static_cast<size_t>(m));
  const RatVec center = to_ratvec(p);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    RatVec v = center;
    for (int i = 0; i < m; ++i)
      v[static_cast<size_t>(i)] += (mask & (std::uint64_t{1} << i)) ? Rat(1, 2) : Rat(-1, 2);
    verts.push_back(std::move(v));
  }
  for (int j = 0; j < m; ++j) {
    RatVec vp = center, vm = center;
    vp[static_cast<size_t>(j)] += Rat(1);
    vm[static_cast<size_t>(j)] -= Rat(1);
    verts.push_back(std::move(vp));
    verts.push_back(std::move(vm));
  }
  poly.vrep = std::move(verts);

  std::vector<HalfSpace> hs;
  hs.reserve(2 * static_cast<size_t>(m) * (static_cast<size_t>(m) - 1));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int si = -1; si <= 1; si += 2)
        for (int sj = -1; sj <= 1; sj += 2) {
          RatVec normal(static_cast<size_t>(m));
          normal[static_cast<size_t>(i)] = Rat(si);
          normal[static_cast<size_t>(j)] = Rat(sj);
          const Rat offset = Rat(1) + Rat(si * p[static_cast<size_t>(i)] + sj * p[static_cast<size_t>(j)]);
          hs.push_back(HalfSpace{std::move(normal), offset});
        }
  poly.hrep = std::move(hs);
  return poly;
}

bool polytope_consistent(const Polytope& poly) {
  if (!poly.vrep || !poly.hrep) return false;
  for (const RatVec& v : *poly.vrep)
    if (!satisfies_all(*poly.hrep, v)) return false;
  for (const HalfSpace& h : *poly.hrep) {
    std::vector<RatVec> tight;
    for (const RatVec& v : *poly.vrep)
      if (dot(h.normal, v) == h.offset) tight.push_back(v);
    if (affine_rank(tight) != poly.ambient - 1) return false;
  }
  return true;
}

std::vector<RatVec> hyperplane_section(const Polytope& poly, const RatVec& normal,
                                       const Rat& offset) {
  if (!poly.hrep) throw std::invalid_argument("hyperplane_section: H-rep required");
  const int m = poly.ambient;
  if (m > 5) throw CapExceeded("hyperplane_section: ambient dimension exceeds cap 5");
  if (static_cast<int>(normal.size()) != m)
    throw std::invalid_argument("hyperplane_section: normal dimension mismatch");

  Echelon base(m);
  RatVec row = normal;
  row.push_back(offset);
  if (!base.add(std::move(row)))
    throw std::invalid_argument("hyperplane_section: zero normal");

  std::set<RatVec, bool (*)(const RatVec&, const RatVec&)> out(lex_less);
  enumerate_vertices(*poly.hrep, 0, base, out);
  return {out.begin(), out.end()};
}

SectionReport section_equivalence_check(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("section_equivalence_check: n in [1,4]");
  SectionReport rep;
  rep.n = n;
  const int m = n + 1;
  std::vector<long> center(static_cast<size_t>(m), 0);
  if (n == 4) {
    // Neighbor cell at e_1 + e_2: its section with x.1 = 0 is full-dimensional,
    // so the D_5 section cannot reproduce the A_4 cell.
    center[0] = 1;
    center[1] = 1;
  }
  const Polytope cell = pyramidal_cube(m, center);
  rep.section_vertices =
      hyperplane_section(cell, RatVec(static_cast<size_t>(m), Rat(1)), Rat(0));
  rep.affine_rank = affine_rank(rep.section_vertices);
  if (n <= 3) {
    rep.equal = rep.section_vertices == voronoi_vertices(n);  // both sorted
  } else {
    rep.equal = false;
  }
  return rep;
}

ClearanceReport neighbor_cell_clearance(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("neighbor_cell_clearance: n in [1,6]");
  const int m = n + 1;
  std::vector<long> center(static_cast<size_t>(m), 0);
  center[0] = 1;
  center[1] = 1;
  const Polytope cell = pyramidal_cube(m, center);
  const auto& verts = *cell.vrep;
  ClearanceReport rep;
  rep.n = n;
  rep.min_dot = vec_sum(verts.front());
  for (const RatVec& v : verts) {
    const Rat s = vec_sum(v);
    if (s < rep.min_dot) rep.min_dot = s;
  }
  for (const RatVec& v : verts) {
    if (vec_sum(v) != rep.min_dot) continue;
    ++rep.attained_by;
    if (rep.witness.empty() || lex_less(v, rep.witness)) rep.witness = v;
  }
  rep.sign = rep.min_dot.sign();
  return rep;
}

}  // namespace anvor
