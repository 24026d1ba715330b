#include "mvop/params.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "mvop/errors.hpp"

namespace mvop {

Params Params::integer(int n, int k, int ell, int m) {
  Params p;
  p.mode = Mode::Integer;
  p.n = n;
  p.k = k;
  p.ell = ell;
  p.m = m;
  p.alpha = m;
  p.beta = n - 1;
  return p;
}

Params Params::jacobi(double alpha, double beta, int k, int ell) {
  Params p;
  p.mode = Mode::Jacobi;
  p.alpha = alpha;
  p.beta = beta;
  p.k = k;
  p.ell = ell;
  // n and m are meaningless in Jacobi mode; keep them at neutral values.
  p.n = 0;
  p.m = 0;
  return p;
}

double Params::m_eff() const noexcept { return mode == Mode::Integer ? static_cast<double>(m) : alpha; }

double Params::n_eff() const noexcept { return mode == Mode::Integer ? static_cast<double>(n) : beta + 1.0; }

std::string Params::describe() const {
  std::ostringstream os;
  if (mode == Mode::Integer) {
    os << "n=" << n << " k=" << k << " ell=" << ell << " m=" << m;
  } else {
    os.precision(17);
    os << "jacobi alpha=" << alpha << " beta=" << beta << " k=" << k << " ell=" << ell;
  }
  return os.str();
}

bool operator==(const Params& a, const Params& b) {
  if (a.mode != b.mode || a.k != b.k || a.ell != b.ell) return false;
  if (a.mode == Mode::Integer) return a.n == b.n && a.m == b.m;
  return a.alpha == b.alpha && a.beta == b.beta;
}

void validate(const Params& p) {
  if (p.ell < 0) throw ParameterError("ell >= 0 violated (ell=" + std::to_string(p.ell) + ")");
  if (p.k < 1) throw ParameterError("k >= 1 violated (k=" + std::to_string(p.k) + ")");
  if (p.mode == Mode::Integer) {
    if (p.n < 2) throw ParameterError("n >= 2 violated (n=" + std::to_string(p.n) + ")");
    if (p.k > p.n - 1) {
      throw ParameterError("k ≤ n−1 violated (k=" + std::to_string(p.k) + ", n=" + std::to_string(p.n) + ")");
    }
    return;
  }
  if (!std::isfinite(p.alpha) || !(p.alpha > -1.0)) {
    throw ParameterError("alpha > -1 violated (alpha=" + std::to_string(p.alpha) + ")");
  }
  if (!std::isfinite(p.beta) || !(p.beta > -1.0)) {
    throw ParameterError("beta > -1 violated (beta=" + std::to_string(p.beta) + ")");
  }
  if (!(p.beta + 1.0 - p.k > 0.0)) {
    throw ParameterError("beta + 1 - k > 0 violated (beta=" + std::to_string(p.beta) +
                         ", k=" + std::to_string(p.k) + ")");
  }
}

void validate_for_weight(const Params& p) {
  validate(p);
  if (p.mode == Mode::Integer && p.m < 0) {
    throw ParameterError("weight undefined for m<0 (m=" + std::to_string(p.m) + ")");
  }
}

bool in_S(const Params& p, int w, int r) {
  if (w < 0 || r < 0 || r > p.ell) return false;
  if (p.mode == Mode::Integer) return p.m + w + r >= 0;
  return p.alpha + w + r > -1.0;
}

void require_label(const Params& p, int w, int r) {
  if (!in_S(p, w, r)) {
    throw ParameterError("label (w=" + std::to_string(w) + ", r=" + std::to_string(r) +
                         ") is not in S for " + p.describe());
  }
}

namespace {

void require_integer_mode(const Params& p, const char* what) {
  if (p.mode != Mode::Integer) throw ParameterError(std::string(what) + " requires Integer mode");
}

void require_r(const Params& p, int r) {
  if (r < 0 || r > p.ell) throw ParameterError("0 <= r <= ell violated (r=" + std::to_string(r) + ")");
}

}  // namespace

std::int64_t lambda_exact(const Params& p, int w, int r) {
  require_integer_mode(p, "lambda_exact");
  require_r(p, r);
  const std::int64_t W = w, R = r, m = p.m, n = p.n, l = p.ell, k = p.k;
  return -W * (W + m + l + R + n) - R * (m + R - k + n);
}

std::int64_t mu_exact(const Params& p, int w, int r) {
  require_integer_mode(p, "mu_exact");
  require_r(p, r);
  const std::int64_t W = w, R = r, m = p.m, n = p.n, l = p.ell, k = p.k;
  return -W * (m + l - R) * (W + m + l + R + n) - R * (m - k) * (m + R - k + n);
}

std::int64_t mu_of_lambda_exact(const Params& p, int r, std::int64_t lambda) {
  require_integer_mode(p, "mu_of_lambda_exact");
  require_r(p, r);
  const std::int64_t R = r, m = p.m, n = p.n, l = p.ell, k = p.k;
  return lambda * (m + l - R) + R * (m + R - k + n) * (l - R + k);
}

double lambda_eig(const Params& p, int w, int r) {
  if (p.mode == Mode::Integer) return static_cast<double>(lambda_exact(p, w, r));
  require_r(p, r);
  const double m = p.alpha, n = p.beta + 1.0, l = p.ell, k = p.k;
  return -w * (w + m + l + r + n) - r * (m + r - k + n);
}

double mu_eig(const Params& p, int w, int r) {
  if (p.mode == Mode::Integer) return static_cast<double>(mu_exact(p, w, r));
  require_r(p, r);
  const double m = p.alpha, n = p.beta + 1.0, l = p.ell, k = p.k;
  return -w * (m + l - r) * (w + m + l + r + n) - r * (m - k) * (m + r - k + n);
}

double mu_of_lambda(const Params& p, int r, double lambda) {
  require_r(p, r);
  const double m = p.m_eff(), n = p.n_eff(), l = p.ell, k = p.k;
  return lambda * (m + l - r) + r * (m + r - k + n) * (l - r + k);
}

SpectralPair spectral_pair(const Params& p, int w, int r) {
  return SpectralPair{w, r, lambda_eig(p, w, r), mu_eig(p, w, r)};
}

bool spectrum_injectivity_check(const Params& p, int wmax) {
  if (wmax < 0) throw ParameterError("wmax >= 0 violated");
  validate(p);
  if (p.mode == Mode::Integer) {
    struct Entry {
      std::int64_t lambda, mu;
    };
    std::vector<Entry> seen;
    for (int w = 0; w <= wmax; ++w) {
      for (int r = 0; r <= p.ell; ++r) {
        if (!in_S(p, w, r)) continue;
        const Entry e{lambda_exact(p, w, r), mu_exact(p, w, r)};
        for (const auto& s : seen) {
          if (s.lambda == e.lambda && s.mu == e.mu) return false;
        }
        seen.push_back(e);
      }
    }
    return true;
  }
  std::vector<SpectralPair> seen;
  for (int w = 0; w <= wmax; ++w) {
    for (int r = 0; r <= p.ell; ++r) {
      if (!in_S(p, w, r)) continue;
      const auto e = spectral_pair(p, w, r);
      for (const auto& s : seen) {
        const double tl = 1e-12 * std::max(1.0, std::abs(e.lambda));
        const double tm = 1e-12 * std::max(1.0, std::abs(e.mu));
        if (std::abs(s.lambda - e.lambda) <= tl && std::abs(s.mu - e.mu) <= tm) return false;
      }
      seen.push_back(e);
    }
  }
  return true;
}

}  // namespace mvop
