#pragma once

#include <vector>

#include "mvop/linalg.hpp"
#include "mvop/params.hpp"
#include "mvop/structure.hpp"

namespace mvop {

struct EigenFunction {
  int w = 0;
  int r = 0;
  SpectralPair spectral;
  VectorPolynomial poly;  // in u, degree w, poly[0][0] == 1
};

/// Matrix polynomial whose row r is F_{w,r}.
struct PolynomialPackage {
  int w = 0;
  MatrixPolynomial P;
};

/// F_{w,r}(u) = 2H1(U; V+lambda; U-C; u) F(0), F(0) the normalized eigenvector of M(lambda).
/// The series must terminate within w+10 terms.
EigenFunction f_wr(const StructureSet& S, int w, int r);
EigenFunction f_wr(const Params& p, int w, int r);

/// Throws NumericError if the leading coefficient is not lower triangular and nonsingular.
PolynomialPackage assemble_P(const StructureSet& S, int w);
PolynomialPackage assemble_P(const Params& p, int w);

/// H = Psi F as a polynomial in u.
VectorPolynomial h_from_f(const Params& p, const VectorPolynomial& F);

/// out[i][s] = t^{(m+ell-s)/2} h_s(t) with t = cos^2(theta_i).
std::vector<std::vector<double>> spherical_profile(const Params& p, int w, int r, const std::vector<double>& thetas);

/// Residual of the three-term relation among the t-power coefficients H_j of H = Psi F:
///   [(j-1)(j-2) + (j-1)(A0+n) + B1 - L] H_{j-1} - [2j(j-1) + j(2A0+n) - B0 - L] H_j + (j+1)(j+A0) H_{j+1}
/// with L = -lambda, where lambda is the eigenvalue of F under the u-form D.
/// Returned relative to max(1, largest of the three terms over all j).
double t_recursion_residual(const StructureSet& S, const VectorPolynomial& F, double lambda);
double t_recursion_residual(const Params& p, const VectorPolynomial& F, double lambda);

/// Order of vanishing at t = 0 of each component h_s of H = Psi F (INT_MAX for a zero component).
/// Only meaningful for m < 0; ParameterError("not applicable") otherwise.
std::vector<int> vanishing_orders(const Params& p, const VectorPolynomial& F);

}  // namespace mvop
