#include "mvop/structure.hpp"

#include <stdexcept>

#include "mvop/errors.hpp"

namespace mvop {

std::int64_t binomial_int(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

MatrixR pascal(int ell) {
  if (ell < 0) throw ParameterError("ell >= 0 violated");
  const auto N = static_cast<std::size_t>(ell + 1);
  MatrixR x(N, N);
  for (int i = 0; i <= ell; ++i)
    for (int j = 0; j <= i; ++j) x(i, j) = static_cast<double>(binomial_int(i, j));
  return x;
}

MatrixR pascal_inverse(int ell) {
  MatrixR x = pascal(ell);
  for (int i = 0; i <= ell; ++i)
    for (int j = 0; j <= i; ++j)
      if ((i - j) % 2 != 0) x(i, j) = -x(i, j);
  return x;
}

MatrixR psi_at(int ell, double u) {
  MatrixR x = pascal(ell);
  double pw = 1.0;
  for (int s = 0; s <= ell; ++s) {
    for (int i = 0; i <= ell; ++i) x(i, s) *= pw;
    pw *= u;
  }
  return x;
}

MatrixPolynomial psi_poly(int ell) {
  const MatrixR x = pascal(ell);
  const auto N = static_cast<std::size_t>(ell + 1);
  std::vector<MatrixR> coeffs;
  for (int s = 0; s <= ell; ++s) {
    MatrixR c(N, N);
    for (int i = 0; i <= ell; ++i) c(i, s) = x(i, s);
    coeffs.push_back(std::move(c));
  }
  return MatrixPolynomial(std::move(coeffs));
}

StructureSet build_structure(const Params& p) {
  validate(p);
  const int l = p.ell;
  const double n = p.n_eff(), m = p.m_eff(), k = p.k, L = l;
  const auto N = static_cast<std::size_t>(l + 1);

  StructureSet S;
  S.params = p;
  for (MatrixR* mat : {&S.A0, &S.B0, &S.B1, &S.Mdiag, &S.C0, &S.C1, &S.D0, &S.D1, &S.C, &S.U, &S.V, &S.M0,
                       &S.M1, &S.P0, &S.P1}) {
    *mat = MatrixR(N, N);
  }

  for (int si = 0; si <= l; ++si) {
    const auto i = static_cast<std::size_t>(si);
    const double s = si;
    const bool up = si < l, down = si > 0;

    S.A0(i, i) = m + L - s + 1;

    const double b0 = (L - s) * (n + s - k);
    S.B0(i, i) -= b0;
    if (up) S.B0(i, i + 1) += b0;
    const double b1 = s * (L - s + k);
    S.B1(i, i) -= b1;
    if (down) S.B1(i, i - 1) += b1;

    S.Mdiag(i, i) = m + L - s;
    S.C0(i, i) = (m + L - s) * (m + L - s + 1);
    if (up) S.C0(i, i + 1) = (L - s) * (n - k + s);
    S.C1(i, i) = (m + L - s) * (m + L - s + n + 1);
    if (down) S.C1(i, i - 1) = s * (L + k - s);

    const double d0a = (L - s) * (n - k + s) * (m + s - k + 1);
    S.D0(i, i) -= d0a;
    if (up) S.D0(i, i + 1) += d0a;
    const double d0b = s * (L + k - s) * (m + L - s + 1);
    S.D0(i, i) += d0b;
    if (down) S.D0(i, i - 1) -= d0b;
    const double d1 = s * (L - s + k) * (2 * m + L + n - k);
    S.D1(i, i) -= d1;
    if (down) S.D1(i, i - 1) += d1;

    S.C(i, i) = m + L - s + 1;
    if (down) S.C(i, i - 1) = -s;
    S.U(i, i) = n + m + L + s + 1;
    S.V(i, i) = s * (n + m + s - k);
    if (up) S.V(i, i + 1) = -(L - s) * (n + s - k);

    S.M0(i, i) = m + L - s;
    if (down) S.M0(i, i - 1) = -s;
    S.M1(i, i) = m + L - s;
    S.P0(i, i) = (m + L) * (m + L + 1) + L * (n - k) - 2 * s * (n + m - k + s);
    if (down) S.P0(i, i - 1) = -s * (n - k + L + 2 * m + s);
    if (up) S.P0(i, i + 1) = (L - s) * (n - k + s);
    S.P1(i, i) = (m + L - s) * (m + n + L + s + 1);
    if (up) S.P1(i, i + 1) = (L - s) * (n - k + s);
  }
  S.X = pascal(l);
  return S;
}

}  // namespace mvop
