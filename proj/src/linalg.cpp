#include "mvop/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mvop/errors.hpp"

namespace mvop {

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* op) {
  if (a != b) throw std::invalid_argument(std::string(op) + ": size mismatch");
}

using EigenRowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const EigenRowMajor> as_eigen(const MatrixR& m) {
  return {m.row_major().data(), static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols())};
}

}  // namespace

VectorR VectorR::unit(std::size_t size, std::size_t index) {
  VectorR v(size);
  v[index] = 1.0;
  return v;
}

VectorR& VectorR::operator+=(const VectorR& o) {
  require_same_size(size(), o.size(), "VectorR +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

VectorR& VectorR::operator-=(const VectorR& o) {
  require_same_size(size(), o.size(), "VectorR -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

VectorR& VectorR::operator*=(double s) {
  for (auto& x : data_) x *= s;
  return *this;
}

double VectorR::norm_inf() const noexcept {
  double r = 0.0;
  for (double x : data_) r = std::max(r, std::abs(x));
  return r;
}

double VectorR::dot(const VectorR& o) const {
  require_same_size(size(), o.size(), "VectorR dot");
  double s = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) s += data_[i] * o.data_[i];
  return s;
}

VectorR operator+(VectorR a, const VectorR& b) { return a += b; }
VectorR operator-(VectorR a, const VectorR& b) { return a -= b; }
VectorR operator*(double s, VectorR a) { return a *= s; }
VectorR operator*(VectorR a, double s) { return a *= s; }

MatrixR::MatrixR(std::size_t rows, std::size_t cols, std::vector<double> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (data_.size() != rows_ * cols_) throw std::invalid_argument("MatrixR: entries length != rows*cols");
}

MatrixR::MatrixR(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("MatrixR: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

MatrixR MatrixR::identity(std::size_t n) {
  MatrixR m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

MatrixR MatrixR::diagonal(std::span<const double> diag) {
  MatrixR m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

VectorR MatrixR::row(std::size_t i) const {
  return VectorR(std::vector<double>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)));
}

VectorR MatrixR::col(std::size_t j) const {
  VectorR v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

MatrixR& MatrixR::operator+=(const MatrixR& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("MatrixR +: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

MatrixR& MatrixR::operator-=(const MatrixR& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("MatrixR -: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

MatrixR& MatrixR::operator*=(double s) {
  for (auto& x : data_) x *= s;
  return *this;
}

MatrixR MatrixR::transpose() const {
  MatrixR t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

MatrixR MatrixR::shifted(double s) const {
  if (!is_square()) throw std::invalid_argument("MatrixR::shifted: not square");
  MatrixR r = *this;
  for (std::size_t i = 0; i < rows_; ++i) r(i, i) += s;
  return r;
}

MatrixR MatrixR::inverse() const {
  if (!is_square()) throw std::invalid_argument("MatrixR::inverse: not square");
  if (rows_ == 0) return {};
  const Eigen::MatrixXd a = as_eigen(*this);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  const double rcond = lu.rcond();
  if (!(rcond >= 1e-12)) {
    throw SingularMatrixError("matrix is singular to working precision (rcond=" + std::to_string(rcond) + ")",
                              std::isfinite(rcond) ? rcond : 0.0);
  }
  const EigenRowMajor inv = lu.inverse();
  return MatrixR(rows_, cols_, std::vector<double>(inv.data(), inv.data() + inv.size()));
}

std::vector<std::complex<double>> MatrixR::eigenvalues() const {
  if (!is_square()) throw std::invalid_argument("MatrixR::eigenvalues: not square");
  if (rows_ == 0) return {};
  const Eigen::MatrixXd a = as_eigen(*this);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(a, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw NumericError("eigenvalue iteration did not converge");
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double MatrixR::max_abs() const noexcept {
  double r = 0.0;
  for (double x : data_) r = std::max(r, std::abs(x));
  return r;
}

double MatrixR::norm_inf() const noexcept {
  double r = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) s += std::abs((*this)(i, j));
    r = std::max(r, s);
  }
  return r;
}

MatrixR operator+(MatrixR a, const MatrixR& b) { return a += b; }
MatrixR operator-(MatrixR a, const MatrixR& b) { return a -= b; }
MatrixR operator*(double s, MatrixR a) { return a *= s; }
MatrixR operator*(MatrixR a, double s) { return a *= s; }

MatrixR operator*(const MatrixR& a, const MatrixR& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("MatrixR *: inner dimension mismatch");
  MatrixR c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const double x = a(i, l);
      if (x == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += x * b(l, j);
    }
  return c;
}

VectorR operator*(const MatrixR& a, const VectorR& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("MatrixR * VectorR: dimension mismatch");
  VectorR r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

double relative_difference(const MatrixR& a, const MatrixR& b) {
  const double scale = std::max({1.0, a.max_abs(), b.max_abs()});
  return (a - b).max_abs() / scale;
}


VectorPolynomial operator*(const MatrixR& m, const VectorPolynomial& p) {
  std::vector<VectorR> out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) out.push_back(m * c);
  return VectorPolynomial(std::move(out));
}

MatrixPolynomial operator*(const MatrixR& m, const MatrixPolynomial& p) {
  std::vector<MatrixR> out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) out.push_back(m * c);
  return MatrixPolynomial(std::move(out));
}

MatrixPolynomial operator*(const MatrixPolynomial& a, const MatrixPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<MatrixR> out(a.size() + b.size() - 1, MatrixR(a[0].rows(), b[0].cols()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return MatrixPolynomial(std::move(out));
}

VectorPolynomial operator*(const MatrixPolynomial& a, const VectorPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<VectorR> out(a.size() + b.size() - 1, VectorR(a[0].rows()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return VectorPolynomial(std::move(out));
}

}  // namespace mvop
