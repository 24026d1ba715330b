#include "mvop/hypergeom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mvop/errors.hpp"

namespace mvop {

namespace {

constexpr double kSpectrumGap = 1e-8;
constexpr double kNegligible = 1e-10;

void require_regular(const MatrixR& C) {
  if (spectrum_distance_to_nonpositive_integers(C) <= kSpectrumGap) throw NumericError("C-spectrum hits -N0");
}

void require_square_same(const MatrixR& a, const MatrixR& b) {
  if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("hypergeometric data must be square matrices of equal size");
  }
}

}  // namespace

double spectrum_distance_to_nonpositive_integers(const MatrixR& C) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& z : C.eigenvalues()) {
    const double re = z.real() > 0.0 ? 0.0 : std::round(z.real());
    best = std::min(best, std::abs(z - std::complex<double>(re, 0.0)));
  }
  return best;
}

std::vector<MatrixR> f1_coeffs(const MatrixR& C, const MatrixR& A, const MatrixR& B, int N) {
  require_square_same(C, A);
  require_square_same(C, B);
  if (N < 0) throw std::invalid_argument("N >= 0 violated");
  require_regular(C);
  std::vector<MatrixR> out{MatrixR::identity(C.rows())};
  for (int j = 0; j < N; ++j) {
    const MatrixR step = C.shifted(j).inverse() * A.shifted(j) * B.shifted(j);
    out.push_back((1.0 / (j + 1)) * (step * out.back()));
  }
  return out;
}

std::vector<MatrixR> h1_coeffs(const MatrixR& C, const MatrixR& U, const MatrixR& V, int N) {
  require_square_same(C, U);
  require_square_same(C, V);
  if (N < 0) throw std::invalid_argument("N >= 0 violated");
  require_regular(C);
  const std::size_t n = C.rows();
  std::vector<MatrixR> out{MatrixR::identity(n)};
  for (int j = 0; j < N; ++j) {
    const double jd = j;
    const MatrixR middle = (U.shifted(-1.0) * jd + V).shifted(jd * jd);
    const MatrixR step = C.shifted(jd).inverse() * middle;
    out.push_back((1.0 / (j + 1)) * (step * out.back()));
  }
  return out;
}

H1Series h1_series(const MatrixR& C, const MatrixR& U, const MatrixR& V, int N) {
  return H1Series{C, U, V, h1_coeffs(C, U, V, N)};
}

namespace {

// Index d such that terms d+1 and d+2 are negligible, or -2 when no such pair exists.
int detect_termination(const std::vector<VectorR>& terms) {
  double big = 0.0;
  for (const auto& t : terms) big = std::max(big, t.norm_inf());
  const double cut = kNegligible * big;
  for (std::size_t j = 0; j + 1 < terms.size(); ++j) {
    if (terms[j].norm_inf() <= cut && terms[j + 1].norm_inf() <= cut) return static_cast<int>(j) - 1;
  }
  return -2;
}

VectorPolynomial finish(std::vector<VectorR> terms, bool must_terminate, int N) {
  if (must_terminate) {
    const int d = detect_termination(terms);
    if (d == -2) throw NumericError("series did not terminate by N=" + std::to_string(N));
    terms.resize(static_cast<std::size_t>(d + 1));
  }
  return VectorPolynomial(std::move(terms)).trimmed(kNegligible);
}

}  // namespace

VectorPolynomial h1_apply(const H1Series& series, const VectorR& v0, int N, bool must_terminate) {
  if (v0.size() != series.Cmat.rows()) throw std::invalid_argument("start vector dimension mismatch");
  if (N < 0 || static_cast<std::size_t>(N) >= series.coeffs.size()) {
    throw std::invalid_argument("N outside the computed series length");
  }
  std::vector<VectorR> terms;
  for (int j = 0; j <= N; ++j) terms.push_back(series.coeffs[static_cast<std::size_t>(j)] * v0);
  return finish(std::move(terms), must_terminate, N);
}

VectorPolynomial h1_polynomial(const MatrixR& C, const MatrixR& U, const MatrixR& V, const VectorR& v0, int cap) {
  require_square_same(C, U);
  require_square_same(C, V);
  if (v0.size() != C.rows()) throw std::invalid_argument("start vector dimension mismatch");
  require_regular(C);
  std::vector<VectorR> terms{v0};
  double big = v0.norm_inf();
  for (int j = 0; j < cap + 1; ++j) {
    const double jd = j;
    const MatrixR middle = (U.shifted(-1.0) * jd + V).shifted(jd * jd);
    terms.push_back((1.0 / (j + 1)) * (C.shifted(jd).inverse() * (middle * terms.back())));
    big = std::max(big, terms.back().norm_inf());
    const std::size_t n = terms.size();
    if (n >= 2 && terms[n - 1].norm_inf() <= kNegligible * big && terms[n - 2].norm_inf() <= kNegligible * big) {
      break;
    }
  }
  return finish(std::move(terms), true, cap);
}

double hypergeometric_ode_residual(const MatrixR& C, const MatrixR& U, const MatrixR& V, const VectorPolynomial& F,
                                   const std::vector<double>& samples) {
  if (F.is_zero()) return 0.0;
  const auto d1 = F.derivative();
  const auto d2 = d1.derivative();
  const VectorR zero(F[0].size());
  double worst = 0.0;
  for (double u : samples) {
    const VectorR f = F.evaluate_at(u);
    const VectorR f1 = d1.is_zero() ? zero : d1.evaluate_at(u);
    const VectorR f2 = d2.is_zero() ? zero : d2.evaluate_at(u);
    const VectorR a = (u * (1.0 - u)) * f2;
    const VectorR b = (C - u * U) * f1;
    const VectorR c = V * f;
    const double scale = std::max({1.0, a.norm_inf(), b.norm_inf(), c.norm_inf()});
    worst = std::max(worst, (a + b - c).norm_inf() / scale);
  }
  return worst;
}

}  // namespace mvop
