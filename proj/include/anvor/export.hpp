#ifndef ANVOR_EXPORT_HPP
#define ANVOR_EXPORT_HPP

#include <string>

#include "json.hpp"

#include "anvor/dn.hpp"
#include "anvor/zonotope.hpp"

namespace anvor {

using json = nlohmann::json;

// Summary counts of the cell; volume_sq is computed exactly from the
// rhombus decomposition, not assumed.
struct CellReport {
  int n = 0;
  mpz_class vertex_count;   // 2^{n+1} - 2
  long facet_count = 0;     // n(n+1)
  Rat volume_sq;            // (n+1)^2 det(Xi_last^T Xi_last)
  int rhombus_count = 0;    // n+1
  mpz_class simplex_count;  // (n+1)!
  bool enumerable = false;  // simplex enumeration within cap
};
CellReport cell_report(int n);

std::string info_text(const CellReport& r);
json info_json(const CellReport& r);

enum class EnumKind { Vertices, Facets, Faces, Rhombi, Simplices };
EnumKind parse_enum_kind(const std::string& s);  // throws std::invalid_argument

// {"n":..., "kind":..., "items":[...]}; rationals are "p/q" strings and all
// indices are 1-based. Items are emitted in the library's deterministic
// sorted order. Faces additionally carry "k".
json enumerate_json(int n, EnumKind kind, int k = -1, std::optional<int> cap = std::nullopt);
std::string enumerate_text(const json& j);

json ratvec_json(const RatVec& v);
RatVec ratvec_from_json(const json& j);

json locate_json(int n, const LocationReport& rep);
std::string locate_text(int n, const LocationReport& rep);

// OFF polyhedron for n in {2,3}. The ambient frame of n = 3 uses the
// 4-coordinate nOFF extension; the projected frame applies M_proj. Facet
// cycles are angular-sorted around the facet centroid and oriented
// counterclockwise as seen from the outward normal side.
enum class MeshFrame { Ambient, Projected };
std::string off_mesh(int n, MeshFrame frame);

std::string format_coord(double v);  // 12 significant digits

}  // namespace anvor

#endif
