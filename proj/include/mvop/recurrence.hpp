#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mvop/linalg.hpp"
#include "mvop/params.hpp"

namespace mvop {

/// a_i^2 at the label (w, r); i in {1, k+1, n+1}.  Jacobi mode uses m -> alpha, n -> beta+1,
/// and "n+1" then names the third index regardless of its numeric value.
enum class Slot { One, KPlusOne, NPlusOne };

double a_sq(const Params& p, Slot i, int w, int r);
/// b_i^2 evaluated at the label shifted by e_j.
double b_sq(const Params& p, Slot i, Slot shift_j, int w, int r);

/// Blocks of (1-u) P_w = A_w P_{w-1} + B_w P_w + C_w P_{w+1}.
struct RecursionBlocks {
  int w = 0;
  MatrixR A, B, C;
};

/// Requires m >= 0.  Each entry is a product a^2 b^2; a product whose a^2 vanishes is 0.
RecursionBlocks blocks(const Params& p, int w);

/// max coefficient norm of (1-u)P_w - A_w P_{w-1} - B_w P_w - C_w P_{w+1}, relative to
/// max(1, largest coefficient of the four terms).  P_{-1} = 0.
double three_term_residual(const Params& p, int w);

struct WalkState {
  int w = 0;
  int r = 0;
  friend bool operator==(const WalkState&, const WalkState&) = default;
};

/// Markov chain on labels: from (w, r) go to (w-1, s), (w, s), (w+1, s) with probabilities
/// (A_w)_rs, (B_w)_rs, (C_w)_rs.  Uses std::mt19937_64 seeded with seed and the uniform
/// (x >> 11) * 2^-53, so trajectories are identical on every platform.
std::vector<WalkState> walk(const Params& p, std::int64_t steps, std::uint64_t seed, WalkState start = {});

/// Pooled calibration of one transition kind (block A/B/C, offset -1/0/+1 in r).
struct TransitionCategory {
  std::string name;
  double observed = 0.0;
  double expected = 0.0;  // sum over visited states of the exact probability
  double stddev = 0.0;    // sqrt(sum p(1-p))
  double z = 0.0;
};

std::vector<TransitionCategory> walk_calibration(const Params& p, const std::vector<WalkState>& trajectory);

}  // namespace mvop
