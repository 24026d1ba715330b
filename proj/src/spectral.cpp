#include "mvop/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mvop/errors.hpp"

namespace mvop {

MLambda build_M(const StructureSet& S, double lambda) {
  const MatrixR UC = S.U - S.C;
  const MatrixR UCinv = UC.inverse();
  const MatrixR VL = S.V.shifted(lambda);
  const double mk = S.params.m_eff() - S.params.k;
  MatrixR M = (S.M0 - S.M1) * UC.shifted(1.0).inverse() * (S.U + S.V).shifted(lambda) * UCinv * VL;
  M += (S.P1 - S.P0) * UCinv * VL;
  M -= mk * S.V;
  return MLambda{lambda, std::move(M)};
}

double m_superdiagonal(const Params& p, int s) {
  if (s < 0 || s >= p.ell) throw ParameterError("superdiagonal index out of range");
  const double n = p.n_eff(), k = p.k, l = p.ell, sd = s;
  return -(l - sd) * (n + sd - k) * (n + sd - 1) * (n + sd + l) * (sd + k) / ((n + 2 * sd - 1) * (n + 2 * sd));
}

VectorR eigvec(const StructureSet& S, double lambda, int r) {
  const Params& p = S.params;
  if (r < 0 || r > p.ell) throw ParameterError("0 <= r <= ell violated (r=" + std::to_string(r) + ")");
  const double mu = mu_of_lambda(p, r, lambda);
  for (int q = 0; q <= p.ell; ++q) {
    if (q != r && std::abs(mu_of_lambda(p, q, lambda) - mu) <= 1e-8) {
      throw NumericError("degenerate eigenvalue collision at lambda=" + std::to_string(lambda));
    }
  }
  const MatrixR M = build_M(S, lambda).matrix;
  const auto N = static_cast<std::size_t>(p.dim());
  VectorR v(N);
  v[0] = 1.0;
  for (std::size_t s = 0; s + 1 < N; ++s) {
    double acc = mu * v[s];
    for (std::size_t j = 0; j <= s; ++j) acc -= M(s, j) * v[j];
    v[s + 1] = acc / M(s, s + 1);
  }
  double last = -mu * v[N - 1];
  for (std::size_t j = 0; j < N; ++j) last += M(N - 1, j) * v[j];
  if (std::abs(last) > 1e-8 * v.norm_inf()) {
    throw NumericError("residual too large in eigenvector extraction (" + std::to_string(std::abs(last)) + ")");
  }
  return v;
}

CharpolyReport charpoly_report(const StructureSet& S, double lambda, double tol) {
  const Params& p = S.params;
  CharpolyReport rep;
  for (int r = 0; r <= p.ell; ++r) rep.expected.push_back(mu_of_lambda(p, r, lambda));
  for (const auto& z : build_M(S, lambda).matrix.eigenvalues()) {
    rep.computed.push_back(z.real());
    rep.max_imaginary = std::max(rep.max_imaginary, std::abs(z.imag()));
  }
  std::sort(rep.expected.begin(), rep.expected.end());
  std::sort(rep.computed.begin(), rep.computed.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < rep.expected.size(); ++i) {
    const double scale = std::max(1.0, std::abs(rep.expected[i]));
    worst = std::max(worst, std::abs(rep.computed[i] - rep.expected[i]) / scale);
  }
  worst = std::max(worst, rep.max_imaginary / std::max(1.0, std::abs(rep.expected.back())));
  rep.max_error = worst;
  rep.ok = worst <= tol;
  return rep;
}

bool charpoly_check(const StructureSet& S, double lambda) { return charpoly_report(S, lambda).ok; }

}  // namespace mvop
