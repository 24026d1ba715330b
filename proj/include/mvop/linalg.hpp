#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <span>
#include <vector>

namespace mvop {

/// Dense real column vector.
class VectorR {
 public:
  VectorR() = default;
  explicit VectorR(std::size_t size, double fill = 0.0) : data_(size, fill) {}
  VectorR(std::initializer_list<double> values) : data_(values) {}
  explicit VectorR(std::vector<double> values) : data_(std::move(values)) {}

  static VectorR unit(std::size_t size, std::size_t index);

  std::size_t size() const noexcept { return data_.size(); }
  double& operator[](std::size_t i) { return data_[i]; }
  double operator[](std::size_t i) const { return data_[i]; }
  std::span<const double> values() const noexcept { return data_; }
  const std::vector<double>& std_vector() const noexcept { return data_; }

  VectorR& operator+=(const VectorR& o);
  VectorR& operator-=(const VectorR& o);
  VectorR& operator*=(double s);

  double norm_inf() const noexcept;
  double dot(const VectorR& o) const;

  friend bool operator==(const VectorR&, const VectorR&) = default;

 private:
  std::vector<double> data_;
};

VectorR operator+(VectorR a, const VectorR& b);
VectorR operator-(VectorR a, const VectorR& b);
VectorR operator*(double s, VectorR a);
VectorR operator*(VectorR a, double s);

/// Dense real matrix with row-major storage.  Sizes in this library are at most
/// a few dozen, so every algorithm is the plain dense one.
class MatrixR {
 public:
  MatrixR() = default;
  MatrixR(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  MatrixR(std::size_t rows, std::size_t cols, std::vector<double> row_major);
  MatrixR(std::initializer_list<std::initializer_list<double>> rows);

  static MatrixR identity(std::size_t n);
  static MatrixR zeros(std::size_t rows, std::size_t cols) { return MatrixR(rows, cols); }
  static MatrixR diagonal(std::span<const double> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const double> row_major() const noexcept { return data_; }

  VectorR row(std::size_t i) const;
  VectorR col(std::size_t j) const;

  MatrixR& operator+=(const MatrixR& o);
  MatrixR& operator-=(const MatrixR& o);
  MatrixR& operator*=(double s);

  MatrixR transpose() const;
  /// Adds s to every diagonal entry.
  MatrixR shifted(double s) const;

  /// Throws SingularMatrixError when the reciprocal condition estimate falls below 1e-12.
  MatrixR inverse() const;
  /// Eigenvalues of a general real square matrix (unordered).
  std::vector<std::complex<double>> eigenvalues() const;

  double max_abs() const noexcept;
  double norm_inf() const noexcept;

  friend bool operator==(const MatrixR&, const MatrixR&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

MatrixR operator+(MatrixR a, const MatrixR& b);
MatrixR operator-(MatrixR a, const MatrixR& b);
MatrixR operator*(double s, MatrixR a);
MatrixR operator*(MatrixR a, double s);
MatrixR operator*(const MatrixR& a, const MatrixR& b);
VectorR operator*(const MatrixR& a, const VectorR& v);

/// Largest |a_ij - b_ij| divided by max(1, max|a_ij|, max|b_ij|).
double relative_difference(const MatrixR& a, const MatrixR& b);

inline double max_abs(const VectorR& v) { return v.norm_inf(); }
inline double max_abs(const MatrixR& m) { return m.max_abs(); }

inline VectorR zero_like(const VectorR& v) { return VectorR(v.size()); }
inline MatrixR zero_like(const MatrixR& m) { return MatrixR(m.rows(), m.cols()); }

/// Polynomial in one real variable with vector or matrix coefficients,
/// coeffs()[j] multiplying x^j.  The zero polynomial has no coefficients.
///
/// Arithmetic is exact at the coefficient level; nothing is trimmed unless
/// trimmed() is called.
template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {}

  static Polynomial constant(Coeff c) { return Polynomial(std::vector<Coeff>{std::move(c)}); }

  const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }
  std::vector<Coeff>& coeffs() noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::size_t size() const noexcept { return coeffs_.size(); }
  /// Storage degree (size - 1); -1 for the zero polynomial.  Call trimmed() first for the true degree.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Coeff& operator[](std::size_t j) const { return coeffs_[j]; }
  Coeff& operator[](std::size_t j) { return coeffs_[j]; }

  /// Coefficient j, or a zero of matching shape past the end (needs a nonzero polynomial).
  Coeff coeff_or_zero(std::size_t j) const {
    if (j < coeffs_.size()) return coeffs_[j];
    if (coeffs_.empty()) throw std::logic_error("coeff_or_zero on the zero polynomial");
    return zero_like(coeffs_.front());
  }

  double max_coeff_norm() const noexcept {
    double r = 0.0;
    for (const auto& c : coeffs_) r = std::max(r, max_abs(c));
    return r;
  }

  /// Drops trailing coefficients whose max-norm is at most rel_tol times the largest one.
  Polynomial trimmed(double rel_tol = 1e-10) const {
    const double cut = rel_tol * max_coeff_norm();
    std::size_t n = coeffs_.size();
    while (n > 0 && max_abs(coeffs_[n - 1]) <= cut) --n;
    return Polynomial(std::vector<Coeff>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n)));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) {
      for (std::size_t j = coeffs_.size(); j < o.coeffs_.size(); ++j) coeffs_.push_back(zero_like(o.coeffs_[j]));
    }
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) {
      for (std::size_t j = coeffs_.size(); j < o.coeffs_.size(); ++j) coeffs_.push_back(zero_like(o.coeffs_[j]));
    }
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
    return *this;
  }
  Polynomial& operator*=(double s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(double s, Polynomial a) { return a *= s; }

  Polynomial derivative() const {
    std::vector<Coeff> d;
    for (std::size_t j = 1; j < coeffs_.size(); ++j) d.push_back(static_cast<double>(j) * coeffs_[j]);
    return Polynomial(std::move(d));
  }

  /// x^p * this.
  Polynomial shift_mul_by_x(int p = 1) const {
    if (coeffs_.empty() || p == 0) return *this;
    std::vector<Coeff> out(static_cast<std::size_t>(p), zero_like(coeffs_.front()));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(out));
  }

  /// Horner evaluation.  The zero polynomial needs a shape, so it evaluates to an empty value.
  Coeff evaluate_at(double x) const {
    if (coeffs_.empty()) return Coeff{};
    Coeff acc = coeffs_.back();
    for (std::size_t j = coeffs_.size() - 1; j-- > 0;) {
      acc *= x;
      acc += coeffs_[j];
    }
    return acc;
  }

  /// q(x) = p(1 - x), by exact binomial re-expansion.
  Polynomial substitute_one_minus() const {
    if (coeffs_.empty()) return *this;
    const std::size_t n = coeffs_.size();
    std::vector<Coeff> out(n, zero_like(coeffs_.front()));
    std::vector<double> row{1.0};  // binomial(j, i)
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0) {
        std::vector<double> next(j + 1, 1.0);
        for (std::size_t i = 1; i < j; ++i) next[i] = row[i - 1] + row[i];
        row = std::move(next);
      }
      for (std::size_t i = 0; i <= j; ++i) {
        const double c = (i % 2 == 0 ? 1.0 : -1.0) * row[i];
        out[i] += c * coeffs_[j];
      }
    }
    return Polynomial(std::move(out));
  }

 private:
  std::vector<Coeff> coeffs_;
};

using VectorPolynomial = Polynomial<VectorR>;
using MatrixPolynomial = Polynomial<MatrixR>;

/// M * p(x), coefficientwise.
VectorPolynomial operator*(const MatrixR& m, const VectorPolynomial& p);
MatrixPolynomial operator*(const MatrixR& m, const MatrixPolynomial& p);
/// Product of two matrix-valued polynomials (vector case: matrix polynomial times vector polynomial).
MatrixPolynomial operator*(const MatrixPolynomial& a, const MatrixPolynomial& b);
VectorPolynomial operator*(const MatrixPolynomial& a, const VectorPolynomial& b);

/// Largest coefficient max-norm of a - b (shorter one padded with zeros).
template <class Coeff>
double max_coeff_difference(const Polynomial<Coeff>& a, const Polynomial<Coeff>& b) {
  return (a - b).max_coeff_norm();
}

}  // namespace mvop
