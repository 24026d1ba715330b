#include "mvop/family.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <string>

#include "mvop/errors.hpp"
#include "mvop/hypergeom.hpp"
#include "mvop/spectral.hpp"

namespace mvop {

EigenFunction f_wr(const StructureSet& S, int w, int r) {
  const Params& p = S.params;
  require_label(p, w, r);
  EigenFunction ef;
  ef.w = w;
  ef.r = r;
  ef.spectral = spectral_pair(p, w, r);
  const double lambda = ef.spectral.lambda;
  const VectorR v0 = eigvec(S, lambda, r);
  ef.poly = h1_polynomial(S.U - S.C, S.U, S.V.shifted(lambda), v0, w + 10);
  return ef;
}

EigenFunction f_wr(const Params& p, int w, int r) { return f_wr(build_structure(p), w, r); }

PolynomialPackage assemble_P(const StructureSet& S, int w) {
  const Params& p = S.params;
  const auto N = static_cast<std::size_t>(p.dim());
  std::vector<VectorPolynomial> rows;
  for (int r = 0; r <= p.ell; ++r) {
    require_label(p, w, r);
    rows.push_back(f_wr(S, w, r).poly);
  }
  std::size_t len = 0;
  for (const auto& f : rows) len = std::max(len, f.size());
  std::vector<MatrixR> coeffs(len, MatrixR(N, N));
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t j = 0; j < rows[r].size(); ++j)
      for (std::size_t c = 0; c < N; ++c) coeffs[j](r, c) = rows[r][j][c];
  MatrixPolynomial P(std::move(coeffs));

  const MatrixR& lead = P[P.size() - 1];
  const double tol = 1e-10 * std::max(1.0, P.max_coeff_norm());
  for (std::size_t r = 0; r < N; ++r) {
    if (std::abs(lead(r, r)) <= tol) throw NumericError("leading coefficient of P_w is singular");
    for (std::size_t c = r + 1; c < N; ++c) {
      if (std::abs(lead(r, c)) > tol) throw NumericError("leading coefficient of P_w is not lower triangular");
    }
  }
  return PolynomialPackage{w, std::move(P)};
}

PolynomialPackage assemble_P(const Params& p, int w) { return assemble_P(build_structure(p), w); }

VectorPolynomial h_from_f(const Params& p, const VectorPolynomial& F) { return psi_poly(p.ell) * F; }

std::vector<std::vector<double>> spherical_profile(const Params& p, int w, int r, const std::vector<double>& thetas) {
  const auto F = f_wr(p, w, r).poly;
  const auto Ht = h_from_f(p, F).substitute_one_minus();
  const double m = p.m_eff();
  std::vector<std::vector<double>> out;
  for (double theta : thetas) {
    const double c = std::cos(theta);
    const double t = c * c;
    const VectorR h = Ht.evaluate_at(t);
    std::vector<double> row;
    for (int s = 0; s <= p.ell; ++s) row.push_back(std::pow(t, (m + p.ell - s) / 2.0) * h[static_cast<std::size_t>(s)]);
    out.push_back(std::move(row));
  }
  return out;
}

double t_recursion_residual(const StructureSet& S, const VectorPolynomial& F, double lambda) {
  if (F.is_zero()) return 0.0;
  const Params& p = S.params;
  const auto Ht = h_from_f(p, F).substitute_one_minus();
  const int d = Ht.degree();
  const double n = p.n_eff();
  const double L = -lambda;
  const MatrixR I = MatrixR::identity(p.dim());
  auto H = [&](int j) { return (j < 0 || j > d) ? zero_like(Ht[0]) : Ht[static_cast<std::size_t>(j)]; };

  double worst = 0.0, scale = 1.0;
  for (int j = 0; j <= d + 1; ++j) {
    const double jd = j;
    const MatrixR c_prev = (((jd - 1) * (jd - 2)) * I + (jd - 1) * S.A0.shifted(n) + S.B1).shifted(-L);
    const MatrixR c_here = ((2 * jd * (jd - 1)) * I + jd * (2.0 * S.A0).shifted(n) - S.B0).shifted(-L);
    const MatrixR c_next = (jd + 1) * S.A0.shifted(jd);
    const VectorR a = c_prev * H(j - 1), b = c_here * H(j), c = c_next * H(j + 1);
    scale = std::max({scale, a.norm_inf(), b.norm_inf(), c.norm_inf()});
    worst = std::max(worst, (a - b + c).norm_inf());
  }
  return worst / scale;
}

double t_recursion_residual(const Params& p, const VectorPolynomial& F, double lambda) {
  return t_recursion_residual(build_structure(p), F, lambda);
}

std::vector<int> vanishing_orders(const Params& p, const VectorPolynomial& F) {
  if (p.m_eff() >= 0.0) throw ParameterError("vanishing orders not applicable for m >= 0");
  const auto Ht = h_from_f(p, F).substitute_one_minus();
  const double tol = 1e-10 * std::max(1.0, Ht.max_coeff_norm());
  std::vector<int> orders;
  for (int s = 0; s <= p.ell; ++s) {
    int order = INT_MAX;
    for (std::size_t j = 0; j < Ht.size(); ++j) {
      if (std::abs(Ht[j][static_cast<std::size_t>(s)]) > tol) {
        order = static_cast<int>(j);
        break;
      }
    }
    orders.push_back(order);
  }
  return orders;
}

}  // namespace mvop
