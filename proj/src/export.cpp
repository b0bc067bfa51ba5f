#include "anvor/export.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>

namespace anvor {
namespace {

RatVec xi_col(int n, int j) { return xi_matrix(n).col(j); }

json indices_1based(const std::vector<int>& v) {
  json a = json::array();
  for (int i : v) a.push_back(i + 1);
  return a;
}

json rhombus_json(const Rhombus& r, int n) {
  json o;
  o["translate"] = ratvec_json(r.translate);
  o["excluded"] = indices_1based(r.excluded);
  o["generators"] = indices_1based(rhombus_free_indices(r, n));
  return o;
}

}  // namespace

CellReport cell_report(int n) {
  if (n < 1) throw std::invalid_argument("cell_report: n must be >= 1");
  CellReport r;
  r.n = n;
  r.vertex_count = (mpz_class(1) << (n + 1)) - 2;
  r.facet_count = static_cast<long>(n) * (n + 1);
  r.rhombus_count = n + 1;
  r.simplex_count = factorial(n + 1);
  r.enumerable = n <= kDecompCap;
  RatMat gens(n + 1, n);
  const RatMat xi = xi_matrix(n);
  for (int j = 0; j < n; ++j) gens.set_col(j, xi.col(j));
  r.volume_sq = Rat(static_cast<long>(n + 1)) * Rat(static_cast<long>(n + 1)) * gram_volume_sq(gens);
  return r;
}

std::string info_text(const CellReport& r) {
  std::ostringstream os;
  os << "A_" << r.n << " Voronoi cell\n";
  os << "  vertices:  " << r.vertex_count.get_str() << "\n";
  os << "  facets:    " << r.facet_count << "\n";
  os << "  volume^2:  " << r.volume_sq.str() << "\n";
  os << "  rhombi:    " << r.rhombus_count << "\n";
  os << "  simplices: " << r.simplex_count.get_str()
     << (r.enumerable ? "" : " (beyond enumeration cap)") << "\n";
  return os.str();
}

json info_json(const CellReport& r) {
  json o;
  o["n"] = r.n;
  o["vertex_count"] = r.vertex_count.get_str();
  o["facet_count"] = r.facet_count;
  o["volume_sq"] = r.volume_sq.str();
  o["rhombus_count"] = r.rhombus_count;
  o["simplex_count"] = r.simplex_count.get_str();
  o["enumerable"] = r.enumerable;
  return o;
}

EnumKind parse_enum_kind(const std::string& s) {
  if (s == "vertices") return EnumKind::Vertices;
  if (s == "facets") return EnumKind::Facets;
  if (s == "faces") return EnumKind::Faces;
  if (s == "rhombi") return EnumKind::Rhombi;
  if (s == "simplices") return EnumKind::Simplices;
  throw std::invalid_argument("unknown enumeration kind '" + s + "'");
}

json ratvec_json(const RatVec& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(x.str());
  return a;
}

RatVec ratvec_from_json(const json& j) {
  RatVec v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(Rat::parse(e.get<std::string>()));
  return v;
}

json enumerate_json(int n, EnumKind kind, int k, std::optional<int> cap) {
  json out;
  out["n"] = n;
  json items = json::array();
  switch (kind) {
    case EnumKind::Vertices: {
      out["kind"] = "vertices";
      for (const RatVec& v : voronoi_vertices(n, cap)) items.push_back(ratvec_json(v));
      break;
    }
    case EnumKind::Facets: {
      out["kind"] = "facets";
      for (const Facet& f : facets(n)) {
        json o = rhombus_json(f.geometry, n);
        o["i"] = f.i + 1;
        o["j"] = f.j + 1;
        items.push_back(std::move(o));
      }
      break;
    }
    case EnumKind::Faces: {
      out["kind"] = "faces";
      out["k"] = k;
      for (const Rhombus& r : k_faces(n, k, cap)) items.push_back(rhombus_json(r, n));
      break;
    }
    case EnumKind::Rhombi: {
      out["kind"] = "rhombi";
      int index = 1;
      for (const Rhombus& r : rhombus_decomposition(n, false)) {
        json o = rhombus_json(r, n);
        o["index"] = index++;
        items.push_back(std::move(o));
      }
      break;
    }
    case EnumKind::Simplices: {
      out["kind"] = "simplices";
      for (const Simplex& s : simplex_decomposition(n, cap)) {
        json o = json::array();
        for (const RatVec& v : s.verts) o.push_back(ratvec_json(v));
        items.push_back(std::move(o));
      }
      break;
    }
  }
  out["items"] = std::move(items);
  return out;
}

std::string enumerate_text(const json& j) {
  std::ostringstream os;
  const std::string kind = j["kind"].get<std::string>();
  os << "n = " << j["n"].get<int>() << ", " << kind;
  if (j.contains("k")) os << " k = " << j["k"].get<int>();
  os << ", " << j["items"].size() << " items\n";
  for (const auto& item : j["items"]) {
    if (kind == "vertices") {
      for (size_t c = 0; c < item.size(); ++c) os << (c ? " " : "") << item[c].get<std::string>();
      os << "\n";
    } else if (kind == "simplices") {
      for (size_t v = 0; v < item.size(); ++v) {
        os << (v ? " ; " : "");
        for (size_t c = 0; c < item[v].size(); ++c)
          os << (c ? " " : "") << item[v][c].get<std::string>();
      }
      os << "\n";
    } else {
      if (item.contains("index")) os << "R_" << item["index"].get<int>() << ": ";
      if (item.contains("i")) os << "facet (" << item["i"].get<int>() << "," << item["j"].get<int>() << "): ";
      os << "translate=(";
      const auto& t = item["translate"];
      for (size_t c = 0; c < t.size(); ++c) os << (c ? "," : "") << t[c].get<std::string>();
      os << ") excluded={";
      const auto& e = item["excluded"];
      for (size_t c = 0; c < e.size(); ++c) os << (c ? "," : "") << e[c].get<int>();
      os << "} generators={";
      const auto& g = item["generators"];
      for (size_t c = 0; c < g.size(); ++c) os << (c ? "," : "") << g[c].get<int>();
      os << "}\n";
    }
  }
  return os.str();
}

json locate_json(int n, const LocationReport& rep) {
  json o;
  o["n"] = n;
  o["inside"] = rep.inside;
  o["boundary"] = rep.boundary;
  o["rhombus"] = rep.rhombus + 1;
  json ord = json::array();
  for (int k = 0; k <= n; ++k) ord.push_back(rep.order(k) + 1);
  o["order"] = std::move(ord);
  json cl = json::array();
  for (long c : rep.closest.coords) cl.push_back(c);
  o["closest"] = std::move(cl);
  return o;
}

std::string locate_text(int n, const LocationReport& rep) {
  std::ostringstream os;
  os << "inside:   " << (rep.inside ? "yes" : "no") << "\n";
  os << "boundary: " << (rep.boundary ? "yes" : "no") << "\n";
  os << "rhombus:  R_" << rep.rhombus + 1 << "\n";
  os << "order:    ";
  for (int k = 0; k <= n; ++k) os << (k ? " " : "") << rep.order(k) + 1;
  os << "\n";
  os << "closest:  (";
  for (size_t i = 0; i < rep.closest.coords.size(); ++i)
    os << (i ? ", " : "") << rep.closest.coords[i];
  os << ")\n";
  return os.str();
}

std::string format_coord(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

// Exact planar angular order of face corners around their centroid.
struct PlanarPoint {
  Rat u, v;  // coordinates in the (b1, b2) face basis
  int vertex_index;
};

int half_of(const PlanarPoint& p) {
  if (p.v > Rat(0) || (p.v == Rat(0) && p.u > Rat(0))) return 0;
  return 1;
}

bool angular_less(const PlanarPoint& a, const PlanarPoint& b) {
  const int ha = half_of(a), hb = half_of(b);
  if (ha != hb) return ha < hb;
  const Rat cross = a.u * b.v - a.v * b.u;
  if (!cross.is_zero()) return cross > Rat(0);
  return a.vertex_index < b.vertex_index;  // collinear corners cannot occur
}

std::vector<int> face_cycle(const std::vector<RatVec>& corners, const std::vector<int>& idx,
                            const RatVec& b1, const RatVec& b2, int orient_sign) {
  RatVec centroid(corners[0].size());
  for (const RatVec& c : corners) centroid = add(centroid, c);
  centroid = scale(Rat(1L, static_cast<long>(corners.size())), centroid);

  RatMat gram(2, 2);
  gram(0, 0) = dot(b1, b1);
  gram(0, 1) = dot(b1, b2);
  gram(1, 0) = gram(0, 1);
  gram(1, 1) = dot(b2, b2);

  std::vector<PlanarPoint> pts;
  for (size_t c = 0; c < corners.size(); ++c) {
    const RatVec r = sub(corners[c], centroid);
    const auto t = solve_square(gram, RatVec{dot(b1, r), dot(b2, r)});
    if (!t) throw std::logic_error("face_cycle: degenerate basis");
    pts.push_back(PlanarPoint{(*t)[0], (*t)[1], idx[c]});
  }
  std::sort(pts.begin(), pts.end(), angular_less);

  std::vector<int> cycle;
  for (const auto& p : pts) cycle.push_back(p.vertex_index);
  if (orient_sign < 0) std::reverse(cycle.begin(), cycle.end());
  // Deterministic starting corner.
  const auto lo = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), lo, cycle.end());
  return cycle;
}

Rat det_of_columns(const std::vector<RatVec>& cols) { return det(from_columns(cols)); }

std::vector<QuadExt> quad_apply(const QuadMat& m, const RatVec& x) {
  std::vector<QuadExt> q(x.size());
  for (size_t i = 0; i < x.size(); ++i) q[i] = QuadExt(x[i]);
  return m * q;
}

}  // namespace

std::string off_mesh(int n, MeshFrame frame) {
  if (n != 2 && n != 3) throw std::invalid_argument("off_mesh: n must be 2 or 3");
  const auto verts = voronoi_vertices(n);
  std::map<RatVec, int, bool (*)(const RatVec&, const RatVec&)> index(lex_less);
  for (size_t i = 0; i < verts.size(); ++i) index.emplace(verts[i], static_cast<int>(i));

  const int m = n + 1;
  const RatVec ones(static_cast<size_t>(m), Rat(1));

  // Collect faces with their plane bases and outward orientation sign.
  std::vector<std::vector<int>> cycles;
  if (n == 2) {
    std::vector<int> idx(verts.size());
    std::iota(idx.begin(), idx.end(), 0);
    const RatVec b1 = xi_col(n, 0), b2 = xi_col(n, 1);
    int sign;
    if (frame == MeshFrame::Ambient) {
      sign = det_of_columns({b1, b2, ones}).sign();
    } else {
      const QuadMat mp = proj_matrix(2);
      const auto p1 = quad_apply(mp, b1), p2 = quad_apply(mp, b2);
      sign = (p1[0] * p2[1] - p1[1] * p2[0]).sign();
    }
    cycles.push_back(face_cycle(verts, idx, b1, b2, sign));
  } else {
    const RatMat mp3 = proj_matrix_rat(3);
    for (const Facet& f : facets(n)) {
      const auto corners = rhombus_vertex_set(f.geometry, n);
      std::vector<int> idx;
      for (const RatVec& c : corners) idx.push_back(index.at(c));
      const auto free = rhombus_free_indices(f.geometry, n);
      const RatVec b1 = xi_col(n, free[0]), b2 = xi_col(n, free[1]);
      RatVec normal(static_cast<size_t>(m));
      normal[static_cast<size_t>(f.i)] = Rat(1);
      normal[static_cast<size_t>(f.j)] = Rat(-1);
      int sign;
      if (frame == MeshFrame::Ambient) {
        sign = det_of_columns({b1, b2, normal, ones}).sign();
      } else {
        sign = det_of_columns({mp3 * b1, mp3 * b2, mp3 * normal}).sign();
      }
      cycles.push_back(face_cycle(corners, idx, b1, b2, sign));
    }
  }

  const size_t edge_count = k_faces(n, 1).size();
  std::ostringstream os;
  const bool four_dim = (n == 3 && frame == MeshFrame::Ambient);
  if (four_dim) {
    os << "nOFF\n4\n";
  } else {
    os << "OFF\n";
  }
  os << verts.size() << " " << cycles.size() << " " << edge_count << "\n";

  const QuadMat mp2 = (n == 2 && frame == MeshFrame::Projected) ? proj_matrix(2) : QuadMat(1, 1);
  for (const RatVec& v : verts) {
    if (frame == MeshFrame::Ambient) {
      for (size_t c = 0; c < v.size(); ++c)
        os << (c ? " " : "") << format_coord(v[c].to_double());
    } else if (n == 3) {
      const RatVec w = proj_matrix_rat(3) * v;
      for (size_t c = 0; c < w.size(); ++c)
        os << (c ? " " : "") << format_coord(w[c].to_double());
    } else {
      const auto w = quad_apply(mp2, v);
      os << format_coord(w[0].to_double()) << " " << format_coord(w[1].to_double()) << " "
         << format_coord(0.0);
    }
    os << "\n";
  }
  for (const auto& cycle : cycles) {
    os << cycle.size();
    for (int i : cycle) os << " " << i;
    os << "\n";
  }
  return os.str();
}

}  // namespace anvor
