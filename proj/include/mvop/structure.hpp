#pragma once

#include <cstdint>

#include "mvop/linalg.hpp"
#include "mvop/params.hpp"

namespace mvop {

/// Every constant (ell+1)x(ell+1) matrix attached to a parameter set.
///
///   A0, B0, B1        coefficients of the first operator in the t-variable
///   Mdiag, C0, C1,
///   D0, D1            coefficients of the second operator in the t-variable
///   C, U, V           hypergeometric data of the conjugated first operator
///   M0, M1, P0, P1    coefficients of the conjugated second operator
///   X                 Pascal matrix, X_ij = binomial(i, j)
struct StructureSet {
  Params params;
  MatrixR A0, B0, B1;
  MatrixR Mdiag, C0, C1, D0, D1;
  MatrixR C, U, V;
  MatrixR M0, M1, P0, P1;
  MatrixR X;

  int dim() const noexcept { return params.dim(); }
};

/// Validates params and fills every matrix (m -> alpha, n -> beta+1 in Jacobi mode).
StructureSet build_structure(const Params& p);

std::int64_t binomial_int(int n, int k);

MatrixR pascal(int ell);
/// (-1)^(i-j) binomial(i, j).
MatrixR pascal_inverse(int ell);

/// Psi(u) = X * diag(u^0, ..., u^ell).  Singular at u = 0 when ell >= 1.
MatrixR psi_at(int ell, double u);
/// Psi as a matrix polynomial in u: coefficient s is X * E_ss.
MatrixPolynomial psi_poly(int ell);

}  // namespace mvop
