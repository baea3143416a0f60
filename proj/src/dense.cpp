#include "fcg/dense.hpp"

#include <cmath>
#include <utility>

#include "fcg/kernels.hpp"

namespace fcg {

void Vector::validate() const {
  if (e_.empty()) throw InvalidValueError("vector must have length >= 1");
  for (double v : e_)
    if (!std::isfinite(v)) throw InvalidValueError("vector entry not finite");
}

Vector::Vector(std::size_t n) : e_(n, 0.0) { validate(); }

Vector::Vector(std::initializer_list<double> xs) : e_(xs) { validate(); }

Vector::Vector(std::vector<double> xs) : e_(std::move(xs)) { validate(); }

void Matrix::validate() const {
  if (m_ == 0 || n_ == 0) throw InvalidValueError("matrix dimensions must be >= 1");
  if (e_.size() != m_ * n_) throw DimensionError("matrix entry count does not match dimensions");
  for (double v : e_)
    if (!std::isfinite(v)) throw InvalidValueError("matrix entry not finite");
}

Matrix::Matrix(std::size_t m, std::size_t n) : m_(m), n_(n), e_(m * n, 0.0) { validate(); }

Matrix::Matrix(std::size_t m, std::size_t n, std::vector<double> row_major)
    : m_(m), n_(n), e_(std::move(row_major)) {
  validate();
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  m_ = rows.size();
  n_ = m_ ? rows.begin()->size() : 0;
  e_.reserve(m_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw DimensionError("ragged matrix initializer");
    e_.insert(e_.end(), r.begin(), r.end());
  }
  validate();
}

Matrix Matrix::identity(std::size_t n) {
  Matrix I(n, n);
  for (std::size_t i = 0; i < n; ++i) I(i, i) = 1.0;
  return I;
}

LinearSystem::LinearSystem(Matrix A_, Vector b_) : A(std::move(A_)), b(std::move(b_)) {
  if (A.rows() != b.size())
    throw DimensionError("right-hand side length does not match matrix rows");
}

Vector matvec(const Matrix& A, const Vector& x, FlopCounter* fc) {
  const std::size_t m = A.rows(), n = A.cols();
  if (n != x.size()) throw DimensionError("matvec: A.cols != x.length");
  Vector y(m);
  for (std::size_t i = 0; i < m; ++i) y[i] = kernels::dot(A.row(i), x.data(), n);
  if (fc) {
    fc->muls += static_cast<std::uint64_t>(m) * n;
    fc->adds += static_cast<std::uint64_t>(m) * (n - 1);
  }
  return y;
}

Vector transpose_matvec(const Matrix& A, const Vector& y, FlopCounter* fc) {
  const std::size_t m = A.rows(), n = A.cols();
  if (m != y.size()) throw DimensionError("transpose_matvec: A.rows != y.length");
  Vector r(n);
  for (std::size_t i = 0; i < m; ++i) kernels::axpy(r.data(), y[i], A.row(i), n);
  if (fc) {
    fc->muls += static_cast<std::uint64_t>(m) * n;
    fc->adds += static_cast<std::uint64_t>(n) * (m - 1);
  }
  return r;
}

Vector normal_apply(const Matrix& A, const Vector& d, FlopCounter* fc) {
  return transpose_matvec(A, matvec(A, d, fc), fc);
}

double dot(const Vector& u, const Vector& v, FlopCounter* fc) {
  if (u.size() != v.size()) throw DimensionError("dot: length mismatch");
  if (fc) {
    fc->muls += u.size();
    fc->adds += u.size() - 1;
  }
  return kernels::dot(u.data(), v.data(), u.size());
}

double norm2(const Vector& u, FlopCounter* fc) { return std::sqrt(dot(u, u, fc)); }

double norm_inf(const Vector& u) {
  double m = 0.0;
  for (double v : u) m = std::max(m, std::fabs(v));
  return m;
}

void axpy(Vector& y, double a, const Vector& x, FlopCounter* fc) {
  if (y.size() != x.size()) throw DimensionError("axpy: length mismatch");
  kernels::axpy(y.data(), a, x.data(), y.size());
  if (fc) {
    fc->muls += y.size();
    fc->adds += y.size();
  }
}

void scale(Vector& x, double a, FlopCounter* fc) {
  kernels::scale(x.data(), a, x.size());
  if (fc) fc->muls += x.size();
}

Vector sub(const Vector& u, const Vector& v, FlopCounter* fc) {
  if (u.size() != v.size()) throw DimensionError("sub: length mismatch");
  Vector r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] - v[i];
  if (fc) fc->adds += u.size();
  return r;
}

SystemKind classify(const LinearSystem& sys) {
  const std::size_t m = sys.A.rows(), n = sys.A.cols();
  if (n == m) return SystemKind::ExactlyDetermined;
  return n > m ? SystemKind::Underdetermined : SystemKind::Overdetermined;
}

Vector residual(const LinearSystem& sys, const Vector& x, FlopCounter* fc) {
  Vector r = matvec(sys.A, x, fc);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= sys.b[i];
  if (fc) fc->adds += r.size();
  return r;
}

}  // namespace fcg
