#include "fcg/svd.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>

namespace fcg {

namespace {

// Column-major workspace so the Jacobi rotations touch contiguous memory.
struct Cols {
  std::size_t p, q;  // p rows, q columns
  std::vector<double> e;
  Cols(std::size_t p_, std::size_t q_) : p(p_), q(q_), e(p_ * q_, 0.0) {}
  double* col(std::size_t j) { return e.data() + j * p; }
  const double* col(std::size_t j) const { return e.data() + j * p; }
};

double col_dot(const Cols& w, std::size_t a, std::size_t b) {
  const double* x = w.col(a);
  const double* y = w.col(b);
  double s = 0.0;
  for (std::size_t i = 0; i < w.p; ++i) s += x[i] * y[i];
  return s;
}

void rotate_pair(Cols& w, std::size_t a, std::size_t b, double cs, double sn) {
  double* x = w.col(a);
  double* y = w.col(b);
  for (std::size_t i = 0; i < w.p; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = cs * xi - sn * yi;
    y[i] = sn * xi + cs * yi;
  }
}

// One-sided Jacobi on a tall matrix B (p ≥ q): orthogonalize the columns of
// W = B·V by plane rotations, accumulate V, read off sigma = column norms.
void jacobi_svd_tall(const Cols& B, Cols& W, Cols& V, std::vector<double>& sigma) {
  const std::size_t q = B.q;
  W = B;
  for (std::size_t j = 0; j < q; ++j) V.col(j)[j] = 1.0;

  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (std::size_t a = 0; a + 1 < q; ++a) {
      for (std::size_t b = a + 1; b < q; ++b) {
        const double app = col_dot(W, a, a);
        const double aqq = col_dot(W, b, b);
        const double apq = col_dot(W, a, b);
        const double denom = std::sqrt(app) * std::sqrt(aqq);
        if (!(denom > 0.0)) continue;  // a zero column is already orthogonal
        const double rel = std::fabs(apq) / denom;
        off = std::max(off, rel);
        if (rel <= 1e-15) continue;
        const double zeta = (aqq - app) / (2.0 * apq);
        // hypot keeps zeta^2 from overflowing when the columns' scales differ wildly
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::fabs(zeta) + std::hypot(1.0, zeta));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = cs * t;
        rotate_pair(W, a, b, cs, sn);
        rotate_pair(V, a, b, cs, sn);
      }
    }
    if (off < 1e-14) break;
  }

  sigma.resize(q);
  for (std::size_t j = 0; j < q; ++j) sigma[j] = std::sqrt(col_dot(W, j, j));
}

}  // namespace

SVDResult svd(const Matrix& A) {
  const std::size_t m = A.rows(), n = A.cols();
  const bool tall = m >= n;
  const std::size_t p = tall ? m : n;  // working shape: p×q with p ≥ q
  const std::size_t q = tall ? n : m;

  Cols B(p, q);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (tall)
        B.col(j)[i] = A(i, j);
      else
        B.col(i)[j] = A(i, j);  // work on A^T
    }

  Cols W(p, q), V(q, q);
  std::vector<double> sigma;
  jacobi_svd_tall(B, W, V, sigma);

  std::vector<std::size_t> order(q);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return sigma[a] > sigma[b]; });

  // left factor of the working decomposition: normalized columns of W
  Cols U(p, q);
  for (std::size_t j = 0; j < q; ++j) {
    const double s = sigma[order[j]];
    if (s > 0.0) {
      const double* w = W.col(order[j]);
      double* u = U.col(j);
      for (std::size_t i = 0; i < p; ++i) u[i] = w[i] / s;
    }
  }

  SVDResult r{std::vector<double>(q), Matrix(m, q), Matrix(n, q), 0.0, 0};
  for (std::size_t j = 0; j < q; ++j) r.singular_values[j] = sigma[order[j]];

  // working result is (A if tall else A^T) = U Sigma V^T; swap factors back
  for (std::size_t j = 0; j < q; ++j) {
    const double* u = U.col(j);
    const double* v = V.col(order[j]);
    if (tall) {
      for (std::size_t i = 0; i < m; ++i) r.U(i, j) = u[i];
      for (std::size_t i = 0; i < n; ++i) r.V(i, j) = v[i];
    } else {
      for (std::size_t i = 0; i < m; ++i) r.U(i, j) = v[i];
      for (std::size_t i = 0; i < n; ++i) r.V(i, j) = u[i];
    }
  }

  const double smax = r.singular_values.empty() ? 0.0 : r.singular_values.front();
  r.rank_threshold = static_cast<double>(std::max(m, n)) * DBL_EPSILON * smax;
  for (double s : r.singular_values)
    if (s > r.rank_threshold) ++r.rank;
  return r;
}

Vector pinv_solve(const LinearSystem& sys) {
  const SVDResult r = svd(sys.A);
  const std::size_t m = sys.A.rows(), n = sys.A.cols();
  Vector x(n);
  for (std::size_t j = 0; j < r.singular_values.size(); ++j) {
    const double s = r.singular_values[j];
    if (!(s > r.rank_threshold)) break;  // sorted, the rest are below too
    double c = 0.0;
    for (std::size_t i = 0; i < m; ++i) c += r.U(i, j) * sys.b[i];
    c /= s;
    for (std::size_t i = 0; i < n; ++i) x[i] += c * r.V(i, j);
  }
  return x;
}

}  // namespace fcg
