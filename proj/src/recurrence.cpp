#include "mvop/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "mvop/errors.hpp"
#include "mvop/family.hpp"
#include "mvop/structure.hpp"

namespace mvop {

namespace {

// num/den, with an exactly vanishing numerator short-circuiting possible 0/0 forms.
double ratio(double num, double den) { return num == 0.0 ? 0.0 : num / den; }

struct Vars {
  double n, k, l, m, w, r;
};

Vars vars(const Params& p, int w, int r) {
  return {p.n_eff(), static_cast<double>(p.k), static_cast<double>(p.ell), p.m_eff(), static_cast<double>(w),
          static_cast<double>(r)};
}

}  // namespace

double a_sq(const Params& p, Slot i, int w, int r) {
  const auto [n, k, l, m, W, R] = vars(p, w, r);
  switch (i) {
    case Slot::One:
      return ratio((W + k) * (W + l + n), (W + l - R + k) * (2 * W + m + n + l + R));
    case Slot::KPlusOne:
      return ratio((l - R) * (R + n - k), (W + l - R + k) * (W + m + n + 2 * R - k));
    case Slot::NPlusOne:
      return ratio((W + m + n + l + R - k) * (W + m + R), (W + m + n + 2 * R - k) * (2 * W + m + n + l + R));
  }
  return 0.0;
}

double b_sq(const Params& p, Slot i, Slot j, int w, int r) {
  const auto [n, k, l, m, W, R] = vars(p, w, r);
  switch (i) {
    case Slot::One:
      switch (j) {
        case Slot::One:
          return ratio((W + 1) * (W + l + k + 1), (W + l - R + k + 1) * (2 * W + m + n + l + R + 1));
        case Slot::KPlusOne:
          return ratio(W * (W + l + k), (W + l - R + k - 1) * (2 * W + m + n + l + R));
        case Slot::NPlusOne:
          return ratio(W * (W + l + k), (W + l - R + k) * (2 * W + m + n + l + R - 1));
      }
      break;
    case Slot::KPlusOne:
      switch (j) {
        case Slot::One:
          return ratio(R * (l - R + k), (W + l - R + k + 1) * (W + m + n + 2 * R - k));
        case Slot::KPlusOne:
          return ratio((R + 1) * (l - R + k - 1), (W + l - R + k - 1) * (W + m + n + 2 * R - k + 1));
        case Slot::NPlusOne:
          return ratio(R * (l - R + k), (W + l - R + k) * (W + m + n + 2 * R - k - 1));
      }
      break;
    case Slot::NPlusOne:
      switch (j) {
        case Slot::One:
          return ratio((W + m + n + l + R) * (W + m + n + R - k), (W + m + n + 2 * R - k) * (2 * W + m + n + l + R + 1));
        case Slot::KPlusOne:
          return ratio((W + m + n + l + R) * (W + m + n + R - k),
                       (W + m + n + 2 * R - k + 1) * (2 * W + m + n + l + R));
        case Slot::NPlusOne:
          return ratio((W + m + n + l + R - 1) * (W + m + n + R - k - 1),
                       (W + m + n + 2 * R - k - 1) * (2 * W + m + n + l + R - 1));
      }
      break;
  }
  return 0.0;
}

RecursionBlocks blocks(const Params& p, int w) {
  validate_for_weight(p);
  if (w < 0) throw ParameterError("w >= 0 violated");
  const int l = p.ell;
  const auto N = static_cast<std::size_t>(l + 1);
  RecursionBlocks b{w, MatrixR(N, N), MatrixR(N, N), MatrixR(N, N)};
  for (int r = 0; r <= l; ++r) {
    // a_j^2 times b_i^2 at the label shifted by e_j.
    auto g = [&](Slot j, Slot i) {
      const double a = a_sq(p, j, w, r);
      return a == 0.0 ? 0.0 : a * b_sq(p, i, j, w, r);
    };
    const auto s = static_cast<std::size_t>(r);
    b.A(s, s) = g(Slot::NPlusOne, Slot::One);
    if (r < l) b.A(s, s + 1) = g(Slot::KPlusOne, Slot::One);
    b.C(s, s) = g(Slot::One, Slot::NPlusOne);
    if (r > 0) b.C(s, s - 1) = g(Slot::One, Slot::KPlusOne);
    b.B(s, s) = g(Slot::One, Slot::One) + g(Slot::KPlusOne, Slot::KPlusOne) + g(Slot::NPlusOne, Slot::NPlusOne);
    if (r < l) b.B(s, s + 1) = g(Slot::KPlusOne, Slot::NPlusOne);
    if (r > 0) b.B(s, s - 1) = g(Slot::NPlusOne, Slot::KPlusOne);
  }
  return b;
}

double three_term_residual(const Params& p, int w) {
  validate_for_weight(p);
  const StructureSet S = build_structure(p);
  const RecursionBlocks b = blocks(p, w);
  const MatrixPolynomial Pw = assemble_P(S, w).P;
  const MatrixPolynomial Pnext = assemble_P(S, w + 1).P;
  const MatrixPolynomial lhs = Pw - Pw.shift_mul_by_x(1);
  MatrixPolynomial tB = b.B * Pw;
  MatrixPolynomial tC = b.C * Pnext;
  MatrixPolynomial tA;
  if (w > 0) tA = b.A * assemble_P(S, w - 1).P;
  const double scale = std::max({1.0, lhs.max_coeff_norm(), tA.max_coeff_norm(), tB.max_coeff_norm(),
                                 tC.max_coeff_norm()});
  return (lhs - tA - tB - tC).max_coeff_norm() / scale;
}

namespace {

class BlockCache {
 public:
  explicit BlockCache(const Params& p) : p_(p) {}
  const RecursionBlocks& at(int w) {
    auto it = cache_.find(w);
    if (it == cache_.end()) it = cache_.emplace(w, blocks(p_, w)).first;
    return it->second;
  }

 private:
  Params p_;
  std::map<int, RecursionBlocks> cache_;
};

}  // namespace

std::vector<WalkState> walk(const Params& p, std::int64_t steps, std::uint64_t seed, WalkState start) {
  validate_for_weight(p);
  if (steps < 0) throw ParameterError("steps >= 0 violated");
  require_label(p, start.w, start.r);
  BlockCache cache(p);
  std::mt19937_64 gen(seed);
  std::vector<WalkState> path{start};
  path.reserve(static_cast<std::size_t>(steps) + 1);
  WalkState st = start;
  const auto N = static_cast<std::size_t>(p.dim());
  for (std::int64_t i = 0; i < steps; ++i) {
    const RecursionBlocks& b = cache.at(st.w);
    const double x = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    const auto row = static_cast<std::size_t>(st.r);
    const MatrixR* mats[3] = {&b.A, &b.B, &b.C};
    double cum = 0.0;
    WalkState next = st, last_positive = st;
    bool chosen = false;
    for (int blk = 0; blk < 3 && !chosen; ++blk)
      for (std::size_t s = 0; s < N; ++s) {
        const double prob = (*mats[blk])(row, s);
        if (prob <= 0.0) continue;
        const WalkState cand{st.w + blk - 1, static_cast<int>(s)};
        last_positive = cand;
        cum += prob;
        if (x < cum) {
          next = cand;
          chosen = true;
          break;
        }
      }
    if (!chosen) next = last_positive;
    st = next;
    path.push_back(st);
  }
  return path;
}

std::vector<TransitionCategory> walk_calibration(const Params& p, const std::vector<WalkState>& trajectory) {
  static const char* kBlock[3] = {"A", "B", "C"};
  static const char* kOffset[3] = {"sub", "diag", "super"};
  BlockCache cache(p);
  double obs[3][3] = {}, mean[3][3] = {}, var[3][3] = {};
  const int l = p.ell;
  for (std::size_t i = 0; i + 1 < trajectory.size(); ++i) {
    const WalkState st = trajectory[i], nx = trajectory[i + 1];
    const RecursionBlocks& b = cache.at(st.w);
    const MatrixR* mats[3] = {&b.A, &b.B, &b.C};
    for (int blk = 0; blk < 3; ++blk)
      for (int off = -1; off <= 1; ++off) {
        const int s = st.r + off;
        if (s < 0 || s > l) continue;
        const double prob = (*mats[blk])(static_cast<std::size_t>(st.r), static_cast<std::size_t>(s));
        mean[blk][off + 1] += prob;
        var[blk][off + 1] += prob * (1.0 - prob);
      }
    const int blk = nx.w - st.w + 1, off = nx.r - st.r;
    if (blk >= 0 && blk < 3 && off >= -1 && off <= 1) obs[blk][off + 1] += 1.0;
  }
  std::vector<TransitionCategory> out;
  for (int blk = 0; blk < 3; ++blk)
    for (int o = 0; o < 3; ++o) {
      if (mean[blk][o] == 0.0 && obs[blk][o] == 0.0) continue;
      TransitionCategory c;
      c.name = std::string(kBlock[blk]) + "-" + kOffset[o];
      c.observed = obs[blk][o];
      c.expected = mean[blk][o];
      c.stddev = std::sqrt(var[blk][o]);
      c.z = c.stddev > 0.0 ? (c.observed - c.expected) / c.stddev : (c.observed == c.expected ? 0.0 : INFINITY);
      out.push_back(std::move(c));
    }
  return out;
}

}  // namespace mvop
