// anvor: exact construction, decomposition and verification of the Voronoi
// cell of the A_n root lattice.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "anvor/export.hpp"
#include "anvor/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitIo = 4;

struct Options {
  bool json = false;
  std::optional<int> cap;
};

int cmd_info(int n, const Options& opt) {
  const anvor::CellReport rep = anvor::cell_report(n);
  if (opt.json)
    std::cout << anvor::info_json(rep).dump(2) << "\n";
  else
    std::cout << anvor::info_text(rep);
  return kExitOk;
}

int cmd_enumerate(const std::vector<std::string>& args, const Options& opt) {
  if (args.size() < 2) throw std::invalid_argument("enumerate: expected KIND [K] N");
  const anvor::EnumKind kind = anvor::parse_enum_kind(args[0]);
  int k = -1;
  size_t pos = 1;
  if (kind == anvor::EnumKind::Faces) {
    if (args.size() < 3) throw std::invalid_argument("enumerate faces: expected K and N");
    k = std::stoi(args[pos++]);
  }
  if (pos + 1 != args.size()) throw std::invalid_argument("enumerate: unexpected arguments");
  const int n = std::stoi(args[pos]);
  const anvor::json j = anvor::enumerate_json(n, kind, k, opt.cap);
  if (opt.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << anvor::enumerate_text(j);
  return kExitOk;
}

int cmd_locate(int n, const std::vector<std::string>& coords, bool project, const Options& opt) {
  if (static_cast<int>(coords.size()) != n + 1)
    throw std::invalid_argument("locate: expected n+1 coordinates");
  anvor::RatVec x;
  for (const std::string& c : coords) x.push_back(anvor::Rat::parse(c));
  if (project) x = anvor::xi_matrix(n) * x;
  const anvor::LocationReport rep = anvor::locate(n, x);
  if (opt.json)
    std::cout << anvor::locate_json(n, rep).dump(2) << "\n";
  else
    std::cout << anvor::locate_text(n, rep);
  return kExitOk;
}

int cmd_verify(int n, const std::string& suite, std::uint64_t seed, int trials,
               const Options& opt) {
  anvor::VerifyOptions vopt;
  vopt.seed = seed;
  vopt.trials = trials;
  vopt.cap = opt.cap;
  const auto results = anvor::run_suite(n, anvor::parse_suite(suite), vopt);
  std::cout << anvor::render_checks(results);
  const bool ok = anvor::all_passed(results);
  std::cout << (ok ? "suite passed" : "suite FAILED") << "\n";
  return ok ? kExitOk : kExitCheckFailure;
}

int cmd_mesh(int n, const std::string& out, const std::string& frame) {
  anvor::MeshFrame f;
  if (frame == "ambient")
    f = anvor::MeshFrame::Ambient;
  else if (frame == "projected")
    f = anvor::MeshFrame::Projected;
  else
    throw std::invalid_argument("mesh: frame must be 'ambient' or 'projected'");
  const std::string data = anvor::off_mesh(n, f);
  if (out == "-") {
    std::cout << data;
    return kExitOk;
  }
  std::ofstream os(out, std::ios::binary);
  if (!os) {
    std::cerr << "error: cannot open '" << out << "' for writing\n";
    return kExitIo;
  }
  os << data;
  os.close();
  if (!os) {
    std::cerr << "error: write to '" << out << "' failed\n";
    return kExitIo;
  }
  return kExitOk;
}

int cmd_section(int n, const Options& opt) {
  const anvor::SectionReport rep = anvor::section_equivalence_check(n);
  if (opt.json) {
    anvor::json o;
    o["n"] = rep.n;
    o["equal"] = rep.equal;
    o["affine_rank"] = rep.affine_rank;
    anvor::json items = anvor::json::array();
    for (const auto& v : rep.section_vertices) items.push_back(anvor::ratvec_json(v));
    o["section_vertices"] = std::move(items);
    std::cout << o.dump(2) << "\n";
  } else {
    std::cout << "D_" << n + 1 << " cell section with x.1 = 0: " << rep.section_vertices.size()
              << " vertices, affine rank " << rep.affine_rank << "\n";
    for (const auto& v : rep.section_vertices) std::cout << "  " << anvor::vec_str(v) << "\n";
    std::cout << "equals A_" << n << " Voronoi cell: " << (rep.equal ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Voronoi cell of the A_n root lattice"};
  app.require_subcommand(1);
  // Global flags (--json, --cap-override) remain usable after a subcommand.
  app.fallthrough();

  Options opt;
  app.add_flag("--json", opt.json, "emit JSON (rationals as \"p/q\" strings)");
  int cap_value = 0;
  auto* cap_opt = app.add_option("--cap-override", cap_value,
                                 "raise an enumeration cap (unvalidated territory)");

  int n_info = 0;
  auto* sc_info = app.add_subcommand("info", "cell summary: counts and exact volume^2");
  sc_info->add_option("n", n_info, "lattice dimension")->required();

  std::vector<std::string> enum_args;
  auto* sc_enum = app.add_subcommand(
      "enumerate", "list vertices | facets | faces K | rhombi | simplices at dimension N");
  sc_enum->add_option("args", enum_args, "KIND [K] N")->expected(-1);

  int n_locate = 0;
  std::vector<std::string> coords;
  bool project = false;
  auto* sc_locate = app.add_subcommand("locate", "locate a rational point relative to the cell");
  sc_locate->add_option("n", n_locate, "lattice dimension")->required();
  sc_locate->add_option("coords", coords, "n+1 rational coordinates (\"p/q\")")->expected(-1);
  sc_locate->add_flag("--project", project, "project the input onto x.1 = 0 first");

  int n_verify = 0;
  std::string suite = "all";
  std::uint64_t seed = 0;
  int trials = 100;
  auto* sc_verify = app.add_subcommand("verify", "run the invariant check suites");
  sc_verify->add_option("n", n_verify, "lattice dimension")->required();
  sc_verify->add_option("--suite", suite, "all | decomp | zonotope | section");
  sc_verify->add_option("--seed", seed, "seed for the randomized checks")->required();
  sc_verify->add_option("--trials", trials, "random points per randomized check");

  int n_mesh = 0;
  std::string out = "-";
  std::string frame = "ambient";
  auto* sc_mesh = app.add_subcommand("mesh", "write the cell as an OFF polyhedron (n = 2 or 3)");
  sc_mesh->add_option("n", n_mesh, "lattice dimension")->required();
  sc_mesh->add_option("--out", out, "output path ('-' for stdout)");
  sc_mesh->add_option("--frame", frame, "ambient | projected (projected applies M_proj)");

  int n_section = 0;
  auto* sc_section = app.add_subcommand("section", "D_{n+1} cell section with the plane x.1 = 0");
  sc_section->add_option("n", n_section, "lattice dimension (1..4)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (cap_opt->count() > 0) opt.cap = cap_value;

  try {
    if (sc_info->parsed()) return cmd_info(n_info, opt);
    if (sc_enum->parsed()) return cmd_enumerate(enum_args, opt);
    if (sc_locate->parsed()) return cmd_locate(n_locate, coords, project, opt);
    if (sc_verify->parsed()) return cmd_verify(n_verify, suite, seed, trials, opt);
    if (sc_mesh->parsed()) return cmd_mesh(n_mesh, out, frame);
    if (sc_section->parsed()) return cmd_section(n_section, opt);
  } catch (const anvor::CapExceeded& e) {
    std::cerr << "cap error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitUsage;
}
