#ifndef HLZETA_VERIFY_HPP
#define HLZETA_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hlzeta/core.hpp"

namespace hlzeta {

/// Structured outcome of one cross-representation check.
struct IdentityReport {
  std::string id;     // identity family, e.g. "thm4-summation"
  std::string point;  // the parameter/argument combination exercised
  Complex lhs{0.0, 0.0};
  Complex rhs{0.0, 0.0};
  double abs_diff = 0.0;
  double tolerance = 0.0;
  bool pass = false;       // abs_diff <= tolerance
  bool converged = true;   // every evaluation behind lhs and rhs converged
};

struct VerifyOptions {
  bool full_grid = false;
  std::uint64_t seed = 0;
  double tol_override = 0.0;  // > 0 replaces each family's tolerance
  int jobs = 1;
};

struct VerifySummary {
  std::vector<IdentityReport> reports;
  bool all_pass = true;
  bool all_converged = true;
};

/// Runs every registered identity family over its grid.  Deterministic for
/// a fixed seed and grid; points may be evaluated concurrently, the report
/// order never changes.
VerifySummary run_verify_suite(const VerifyOptions& opts);

}  // namespace hlzeta

#endif  // HLZETA_VERIFY_HPP
