#pragma once

#include <cstdint>
#include <string>

namespace mvop {

enum class Mode { Integer, Jacobi };

/// Model parameters.
///
/// Integer mode carries the discrete data (n, k, ell, m) of a one-step K-type
/// (m+ell, ..., m+ell, m, ..., m) with k leading entries.  Jacobi mode replaces
/// m by a real alpha and n-1 by a real beta; k and ell stay integral.
struct Params {
  Mode mode = Mode::Integer;
  int n = 2;
  int k = 1;
  int ell = 0;
  int m = 0;
  double alpha = 0.0;
  double beta = 1.0;

  static Params integer(int n, int k, int ell, int m);
  static Params jacobi(double alpha, double beta, int k, int ell);

  /// m in Integer mode, alpha in Jacobi mode.
  double m_eff() const noexcept;
  /// n in Integer mode, beta + 1 in Jacobi mode.
  double n_eff() const noexcept;
  int dim() const noexcept { return ell + 1; }
  bool is_integer() const noexcept { return mode == Mode::Integer; }

  std::string describe() const;
};

bool operator==(const Params& a, const Params& b);

/// Throws ParameterError naming the first violated constraint.
void validate(const Params& p);

/// validate() plus the extra requirement of the weight and the P_w packaging:
/// m >= 0 in Integer mode (alpha, beta > -1 is already part of Jacobi validity).
void validate_for_weight(const Params& p);

/// Membership in S = {(w, r) : w >= 0, 0 <= r <= ell, m + w + r >= 0}.
bool in_S(const Params& p, int w, int r);

/// Throws ParameterError unless (w, r) is in S.
void require_label(const Params& p, int w, int r);

// Exact eigenvalue formulas; Integer mode only (ParameterError otherwise).
std::int64_t lambda_exact(const Params& p, int w, int r);
std::int64_t mu_exact(const Params& p, int w, int r);
std::int64_t mu_of_lambda_exact(const Params& p, int r, std::int64_t lambda);

/// lambda(w, r) = -w(w+m+ell+r+n) - r(m+r-k+n).
double lambda_eig(const Params& p, int w, int r);
/// mu(w, r) = -w(m+ell-r)(w+m+ell+r+n) - r(m-k)(m+r-k+n).
double mu_eig(const Params& p, int w, int r);
/// mu_r(lambda) = lambda(m+ell-r) + r(m+r-k+n)(ell-r+k): the spectrum of M(lambda).
double mu_of_lambda(const Params& p, int r, double lambda);

struct SpectralPair {
  int w = 0;
  int r = 0;
  double lambda = 0.0;
  double mu = 0.0;
};

SpectralPair spectral_pair(const Params& p, int w, int r);

/// True iff (w, r) -> (lambda, mu) is injective on {0..wmax} x {0..ell} intersected with S.
/// Integer mode compares exact integers; Jacobi mode compares doubles with a relative tolerance.
bool spectrum_injectivity_check(const Params& p, int wmax);

}  // namespace mvop
