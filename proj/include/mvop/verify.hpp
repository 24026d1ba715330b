#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mvop/params.hpp"

namespace mvop {

struct CheckResult {
  std::string name;
  bool passed = false;
  double max_residual = 0.0;
  double tolerance = 0.0;
  double wall_seconds = 0.0;
  std::string detail;
};

struct RunReport {
  Params params;
  int wmax = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  const CheckResult* find(const std::string& name) const;
};

enum class Suite { Eigen, Ortho, Recursion, All };

Suite parse_suite(const std::string& s);
std::string to_string(Suite s);

struct VerifyOptions {
  int wmax = 4;
  Suite suite = Suite::All;
  int conjugation_samples = 50;     // random polynomials per parameter point
  std::int64_t walk_steps = 100000;
  std::uint64_t seed = 42;
};

/// Runs every check of the selected suite for one parameter point.  Each check appears
/// exactly once; a thrown error turns into a failed check carrying the message.
RunReport run_verification(const Params& p, const VerifyOptions& opt);

/// n in {2,3}, k in 1..n-1, ell in {0,1,2}, m in {0,1}.
std::vector<Params> default_grid();

/// Fans out over worker threads; reports come back in input order.
std::vector<RunReport> run_grid(const std::vector<Params>& grid, const VerifyOptions& opt, int threads);

/// MVOP_THREADS if set to a positive integer, else the hardware concurrency (at least 1).
int default_thread_count();

}  // namespace mvop
