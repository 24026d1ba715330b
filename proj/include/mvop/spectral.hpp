#pragma once

#include <vector>

#include "mvop/linalg.hpp"
#include "mvop/structure.hpp"

namespace mvop {

/// Matrix of the second operator on the lambda-eigenspace of the first, in the
/// basis given by the value at u = 0.
struct MLambda {
  double lambda = 0.0;
  MatrixR matrix;
};

/// (M0-M1)(U-C+1)^{-1}(U+V+lambda)(U-C)^{-1}(V+lambda) + (P1-P0)(U-C)^{-1}(V+lambda) - (m-k)V
MLambda build_M(const StructureSet& S, double lambda);

/// Closed form of the superdiagonal entry M(lambda)_{s,s+1}, which does not depend on lambda:
///   -(ell-s)(n+s-k) (n+s-1)(n+s+ell)(s+k) / ((n+2s-1)(n+2s)).
double m_superdiagonal(const Params& p, int s);

/// Eigenvector of M(lambda) for mu_r(lambda), normalized so v_0 = 1, by forward
/// substitution on the lower-Hessenberg structure.
/// Errors: NumericError("degenerate eigenvalue collision") when another mu_r'(lambda) lies
/// within 1e-8, NumericError("residual too large") when the last row misses by more than 1e-8 |v|.
VectorR eigvec(const StructureSet& S, double lambda, int r);

struct CharpolyReport {
  bool ok = false;
  double max_error = 0.0;           // max |computed - expected| / max(1, |expected|)
  std::vector<double> expected;     // mu_r(lambda), sorted
  std::vector<double> computed;     // real parts of the eigenvalues of M(lambda), sorted
  double max_imaginary = 0.0;
};

CharpolyReport charpoly_report(const StructureSet& S, double lambda, double tol = 1e-7);
bool charpoly_check(const StructureSet& S, double lambda);

}  // namespace mvop
