#pragma once

#include <vector>

#include "mvop/linalg.hpp"

namespace mvop {

/// Distance from the spectrum of C to {0, -1, -2, ...}.
double spectrum_distance_to_nonpositive_integers(const MatrixR& C);

/// (C;A;B)_j / j! for j = 0..N, where (C;A;B)_{j+1} = (C+j)^{-1}(A+j)(B+j)(C;A;B)_j.
/// Throws NumericError("C-spectrum hits -N0") when the spectrum of C is within 1e-8 of a nonpositive integer.
std::vector<MatrixR> f1_coeffs(const MatrixR& C, const MatrixR& A, const MatrixR& B, int N);

/// [C;U;V]_j / j! for j = 0..N, where [C;U;V]_{j+1} = (C+j)^{-1}(j^2 + j(U-1) + V)[C;U;V]_j.
std::vector<MatrixR> h1_coeffs(const MatrixR& C, const MatrixR& U, const MatrixR& V, int N);

/// Truncated series of the solution of u(1-u)F'' + (C - uU)F' - VF = 0 analytic at u = 0.
struct H1Series {
  MatrixR Cmat, Umat, Vmat;
  std::vector<MatrixR> coeffs;
};

H1Series h1_series(const MatrixR& C, const MatrixR& U, const MatrixR& V, int N);

/// sum_{j <= N} u^j coeffs[j] v0, trimmed.  With must_terminate the series has to show two
/// consecutive negligible terms (1e-10 of the largest) before index N, otherwise
/// NumericError("series did not terminate by N").  The result then stops before those terms.
VectorPolynomial h1_apply(const H1Series& series, const VectorR& v0, int N, bool must_terminate = false);

/// Vector form of the same recursion, F_{j+1} = (C+j)^{-1}(j^2 + j(U-1) + V)F_j / (j+1) with F_0 = v0,
/// run until termination is detected (two consecutive negligible terms) or the index exceeds cap.
VectorPolynomial h1_polynomial(const MatrixR& C, const MatrixR& U, const MatrixR& V, const VectorR& v0, int cap);

/// Max over samples of |u(1-u)F'' + (C - uU)F' - VF|_inf relative to max(1, largest term).
double hypergeometric_ode_residual(const MatrixR& C, const MatrixR& U, const MatrixR& V, const VectorPolynomial& F,
                                   const std::vector<double>& samples);

}  // namespace mvop
