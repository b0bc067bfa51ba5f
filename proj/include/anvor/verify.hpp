#ifndef ANVOR_VERIFY_HPP
#define ANVOR_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "anvor/dn.hpp"
#include "anvor/zonotope.hpp"

namespace anvor {

enum class Suite { All, Decomp, Zonotope, Section };
Suite parse_suite(const std::string& s);

struct CheckResult {
  std::string name;
  bool pass = false;
  bool skipped = false;
  std::string note;
  double millis = 0.0;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  int trials = 100;
  std::optional<int> cap;  // enumeration cap override
};

// Runs the invariant checks of the chosen suite at dimension n. Checks whose
// enumeration caps exclude n are reported as skipped, not failed.
std::vector<CheckResult> run_suite(int n, Suite suite, const VerifyOptions& opt);

bool all_passed(const std::vector<CheckResult>& results);
std::string render_checks(const std::vector<CheckResult>& results);

}  // namespace anvor

#endif
