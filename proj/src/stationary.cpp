#include "fcg/stationary.hpp"

#include <cmath>
#include <utility>

#include "fcg/fuzzy_cg.hpp"
#include "fcg/kernels.hpp"

namespace fcg {

namespace {

void check(const LinearSystem& sys, const StationaryOptions& opts) {
  if (sys.A.rows() != sys.A.cols())
    throw DimensionError("stationary methods require a square system");
  if (!(opts.tolerance > 0.0)) throw InvalidValueError("tolerance must be > 0");
  if (opts.max_iterations == 0) throw InvalidValueError("max_iterations must be >= 1");
  for (std::size_t i = 0; i < sys.A.rows(); ++i)
    if (sys.A(i, i) == 0.0) throw InvalidValueError("zero diagonal entry blocks the sweep");
  if (opts.x0 && opts.x0->size() != sys.A.cols())
    throw DimensionError("x0 length must equal the unknown count");
}

// component update shared by both sweeps: (b_i - sum_{j != i} a_ij x_j) / a_ii,
// with the full-row dot corrected by the diagonal term (Gauss-Seidel passes
// the partially updated x, which is exactly its in-place semantics)
double sweep_component(const LinearSystem& sys, const Vector& x, std::size_t i, FlopCounter& fc) {
  const std::size_t n = x.size();
  const double full = kernels::dot(sys.A.row(i), x.data(), n);
  fc.muls += n + 2;  // row dot + diagonal correction + division
  fc.adds += n + 1;
  return (sys.b[i] - full + sys.A(i, i) * x[i]) / sys.A(i, i);
}

SolveReport run(const LinearSystem& sys, const StationaryOptions& opts, bool in_place) {
  check(sys, opts);
  const std::size_t n = sys.A.cols();
  FlopCounter fc;
  SolveReport rep;
  Vector x = opts.x0 ? *opts.x0 : Vector(n);
  double first_step = -1.0;

  for (std::size_t k = 0; k < opts.max_iterations; ++k) {
    double step = 0.0;
    if (in_place) {
      for (std::size_t i = 0; i < n; ++i) {
        const double xi = sweep_component(sys, x, i, fc);
        step = std::max(step, std::fabs(xi - x[i]));
        x[i] = xi;
      }
    } else {
      Vector xn(n);
      for (std::size_t i = 0; i < n; ++i) {
        xn[i] = sweep_component(sys, x, i, fc);
        step = std::max(step, std::fabs(xn[i] - x[i]));
      }
      x = std::move(xn);
    }
    rep.trace.push_back({k, cost(sys, x, &fc), step, 0.0, 0.0, 1.0});
    if (first_step < 0.0) first_step = step;
    if (step < opts.tolerance) {
      rep.converged = true;
      break;
    }
    if (first_step > 0.0 && step > 1e6 * first_step) break;  // diverging
  }

  rep.iterations = rep.trace.size();
  rep.solution = std::move(x);
  rep.residual_norm = norm2(residual(sys, rep.solution, &fc), &fc);
  rep.flops = fc;
  return rep;
}

}  // namespace

SolveReport jacobi(const LinearSystem& sys, const StationaryOptions& opts) {
  return run(sys, opts, false);
}

SolveReport gauss_seidel(const LinearSystem& sys, const StationaryOptions& opts) {
  return run(sys, opts, true);
}

}  // namespace fcg
