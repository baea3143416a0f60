#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "fcg/errors.hpp"

namespace fcg {

// Logical add/mul tally for the complexity study. Counted from operand
// dimensions at the dense-op level, so scalar and SIMD paths report the same
// totals. Divisions count as multiplications; sqrt and comparisons are free.
struct FlopCounter {
  std::uint64_t adds = 0;
  std::uint64_t muls = 0;
  void reset() { adds = 0; muls = 0; }
};

class Vector {
 public:
  explicit Vector(std::size_t n);  // zeros
  Vector(std::initializer_list<double> xs);
  explicit Vector(std::vector<double> xs);

  std::size_t size() const { return e_.size(); }
  double& operator[](std::size_t i) { return e_[i]; }
  double operator[](std::size_t i) const { return e_[i]; }
  double* data() { return e_.data(); }
  const double* data() const { return e_.data(); }
  auto begin() { return e_.begin(); }
  auto end() { return e_.end(); }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

  bool operator==(const Vector& o) const { return e_ == o.e_; }

 private:
  std::vector<double> e_;
  void validate() const;
};

class Matrix {
 public:
  Matrix(std::size_t m, std::size_t n);  // zeros
  Matrix(std::size_t m, std::size_t n, std::vector<double> row_major);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
  double* row(std::size_t i) { return e_.data() + i * n_; }
  const double* row(std::size_t i) const { return e_.data() + i * n_; }
  const std::vector<double>& entries() const { return e_; }

  bool operator==(const Matrix& o) const {
    return m_ == o.m_ && n_ == o.n_ && e_ == o.e_;
  }

 private:
  std::size_t m_, n_;
  std::vector<double> e_;
  void validate() const;
};

struct LinearSystem {
  Matrix A;
  Vector b;
  LinearSystem(Matrix A_, Vector b_);  // requires A.rows() == b.size()
};

enum class SystemKind { ExactlyDetermined, Underdetermined, Overdetermined };

Vector matvec(const Matrix& A, const Vector& x, FlopCounter* fc = nullptr);
Vector transpose_matvec(const Matrix& A, const Vector& y, FlopCounter* fc = nullptr);
// A^T(A·d) as two matrix-vector products; A^T A is never formed
Vector normal_apply(const Matrix& A, const Vector& d, FlopCounter* fc = nullptr);

double dot(const Vector& u, const Vector& v, FlopCounter* fc = nullptr);
double norm2(const Vector& u, FlopCounter* fc = nullptr);
double norm_inf(const Vector& u);

void axpy(Vector& y, double a, const Vector& x, FlopCounter* fc = nullptr);  // y += a·x
void scale(Vector& x, double a, FlopCounter* fc = nullptr);
Vector sub(const Vector& u, const Vector& v, FlopCounter* fc = nullptr);

SystemKind classify(const LinearSystem& sys);
Vector residual(const LinearSystem& sys, const Vector& x, FlopCounter* fc = nullptr);

}  // namespace fcg
