#pragma once

#include <vector>

#include "mvop/linalg.hpp"
#include "mvop/structure.hpp"

namespace mvop {

// u-variable operators.  Exact coefficient transforms; the input dimension must be ell+1.

/// DF = u(1-u)F'' + (U - C - uU)F' - VF
VectorPolynomial apply_D_u(const StructureSet& S, const VectorPolynomial& F);
/// EF = (1-u)(M0 - M1 + uM1)F'' + (P1 - P0 - uP1)F' - (m-k)VF
VectorPolynomial apply_E_u(const StructureSet& S, const VectorPolynomial& F);

// t-variable forms.  H is a polynomial in t = 1-u.

/// -[t(1-t)H'' + (A0 - t(A0+n))H' + (1-t)^{-1}(B0 + tB1)H]
/// Throws NumericError("not divisible by (1-t)") when the rational part does not cancel.
VectorPolynomial apply_D_t(const StructureSet& S, const VectorPolynomial& H);
/// -[t(1-t)M H'' + (C0 - tC1)H' + (1-t)^{-1}(D0 + tD1)H]
VectorPolynomial apply_E_t(const StructureSet& S, const VectorPolynomial& H);

/// t(1-t)F'' + (C - tU)F' - VF, F a polynomial in t.
VectorPolynomial apply_Dtilde_t(const StructureSet& S, const VectorPolynomial& F);
/// t(M0 - tM1)F'' + (P0 - tP1)F' - (m-k)VF, F a polynomial in t.
VectorPolynomial apply_Etilde_t(const StructureSet& S, const VectorPolynomial& F);

/// Exact quotient Q / (1-t).  The remainder Q(1) must vanish to 1e-9 times 1 + sum of coefficient norms.
VectorPolynomial divide_by_one_minus_t(const VectorPolynomial& Q);

enum class OperatorKind { D, E };

/// Max over u in samples of |Psi(u) (Dtilde F)(t) + (D_t (Psi F))(t)|_inf, t = 1-u, divided by
/// max(1, the larger of the two terms).  F is given in u.
double conjugation_residual(const StructureSet& S, const VectorPolynomial& F, const std::vector<double>& samples,
                            OperatorKind kind = OperatorKind::D);

}  // namespace mvop
