#include "mvop/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mvop/errors.hpp"

namespace mvop {

namespace {

void require_dim(const StructureSet& S, const VectorPolynomial& F) {
  if (!F.is_zero() && F[0].size() != static_cast<std::size_t>(S.dim())) {
    throw std::invalid_argument("polynomial dimension does not match ell+1");
  }
}

// Sum of x^p * M * G over the given terms; zero operands are skipped.
struct Term {
  int power;
  MatrixR mat;
  const VectorPolynomial* g;
};

VectorPolynomial combine(std::initializer_list<Term> terms) {
  VectorPolynomial out;
  for (const auto& t : terms) {
    if (t.g->is_zero()) continue;
    out += (t.mat * *t.g).shift_mul_by_x(t.power);
  }
  return out;
}

}  // namespace

VectorPolynomial apply_D_u(const StructureSet& S, const VectorPolynomial& F) {
  require_dim(S, F);
  const auto d1 = F.derivative();
  const auto d2 = d1.derivative();
  const auto I = MatrixR::identity(S.dim());
  return combine({{1, I, &d2}, {2, -1.0 * I, &d2}, {0, S.U - S.C, &d1}, {1, -1.0 * S.U, &d1}, {0, -1.0 * S.V, &F}});
}

VectorPolynomial apply_E_u(const StructureSet& S, const VectorPolynomial& F) {
  require_dim(S, F);
  const auto d1 = F.derivative();
  const auto d2 = d1.derivative();
  const double mk = S.params.m_eff() - S.params.k;
  // (1-u)(M0 - M1 + uM1) = (M0 - M1) + u(2M1 - M0) - u^2 M1
  return combine({{0, S.M0 - S.M1, &d2},
                  {1, 2.0 * S.M1 - S.M0, &d2},
                  {2, -1.0 * S.M1, &d2},
                  {0, S.P1 - S.P0, &d1},
                  {1, -1.0 * S.P1, &d1},
                  {0, -mk * S.V, &F}});
}

VectorPolynomial divide_by_one_minus_t(const VectorPolynomial& Q) {
  if (Q.is_zero()) return Q;
  // Synthetic division by (t - 1), then flip the sign.
  const std::size_t n = Q.size();
  std::vector<VectorR> quot(n > 1 ? n - 1 : 0, zero_like(Q[0]));
  VectorR carry = Q[n - 1];
  for (std::size_t j = n - 1; j-- > 0;) {
    quot[j] = carry;
    carry = Q[j] + carry;
  }
  double scale = 1.0;
  for (const auto& c : Q.coeffs()) scale += c.norm_inf();
  if (carry.norm_inf() > 1e-9 * scale) {
    throw NumericError("not divisible by (1-t): remainder " + std::to_string(carry.norm_inf()));
  }
  VectorPolynomial out(std::move(quot));
  out *= -1.0;
  return out;
}

VectorPolynomial apply_D_t(const StructureSet& S, const VectorPolynomial& H) {
  require_dim(S, H);
  const auto d1 = H.derivative();
  const auto d2 = d1.derivative();
  const auto I = MatrixR::identity(S.dim());
  const double n = S.params.n_eff();
  auto rational = divide_by_one_minus_t(combine({{0, S.B0, &H}, {1, S.B1, &H}}));
  auto out = combine({{1, I, &d2}, {2, -1.0 * I, &d2}, {0, S.A0, &d1}, {1, -1.0 * S.A0.shifted(n), &d1}});
  out += rational;
  out *= -1.0;
  return out;
}

VectorPolynomial apply_E_t(const StructureSet& S, const VectorPolynomial& H) {
  require_dim(S, H);
  const auto d1 = H.derivative();
  const auto d2 = d1.derivative();
  auto rational = divide_by_one_minus_t(combine({{0, S.D0, &H}, {1, S.D1, &H}}));
  auto out = combine({{1, S.Mdiag, &d2}, {2, -1.0 * S.Mdiag, &d2}, {0, S.C0, &d1}, {1, -1.0 * S.C1, &d1}});
  out += rational;
  out *= -1.0;
  return out;
}

VectorPolynomial apply_Dtilde_t(const StructureSet& S, const VectorPolynomial& F) {
  require_dim(S, F);
  const auto d1 = F.derivative();
  const auto d2 = d1.derivative();
  const auto I = MatrixR::identity(S.dim());
  return combine({{1, I, &d2}, {2, -1.0 * I, &d2}, {0, S.C, &d1}, {1, -1.0 * S.U, &d1}, {0, -1.0 * S.V, &F}});
}

VectorPolynomial apply_Etilde_t(const StructureSet& S, const VectorPolynomial& F) {
  require_dim(S, F);
  const auto d1 = F.derivative();
  const auto d2 = d1.derivative();
  const double mk = S.params.m_eff() - S.params.k;
  return combine({{1, S.M0, &d2}, {2, -1.0 * S.M1, &d2}, {0, S.P0, &d1}, {1, -1.0 * S.P1, &d1}, {0, -mk * S.V, &F}});
}

double conjugation_residual(const StructureSet& S, const VectorPolynomial& F, const std::vector<double>& samples,
                            OperatorKind kind) {
  require_dim(S, F);
  if (F.is_zero()) return 0.0;
  const auto Ft = F.substitute_one_minus();
  const auto Ht = (psi_poly(S.params.ell) * F).substitute_one_minus();
  const auto lhs = kind == OperatorKind::D ? apply_Dtilde_t(S, Ft) : apply_Etilde_t(S, Ft);
  const auto rhs = kind == OperatorKind::D ? apply_D_t(S, Ht) : apply_E_t(S, Ht);

  double worst = 0.0;
  for (double u : samples) {
    const double t = 1.0 - u;
    const VectorR zero(static_cast<std::size_t>(S.dim()));
    const VectorR a = lhs.is_zero() ? zero : psi_at(S.params.ell, u) * lhs.evaluate_at(t);
    const VectorR b = rhs.is_zero() ? zero : rhs.evaluate_at(t);
    const double scale = std::max({1.0, a.norm_inf(), b.norm_inf()});
    worst = std::max(worst, (a + b).norm_inf() / scale);
  }
  return worst;
}

}  // namespace mvop
