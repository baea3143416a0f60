#pragma once

#include <vector>

#include "fcg/dense.hpp"

namespace fcg {

// One solver iteration. E and d_norm are taken at the iterate the step starts
// from; alpha and v are the scalars used in the update; beta is the
// Polak-Ribiere coefficient computed at the iteration's end (it shapes the
// next direction). Stationary solvers reuse the shape with one record per
// sweep: d_norm holds the max-norm successive step, alpha=beta=0, v=1.
struct IterationRecord {
  std::size_t k;
  double E;
  double d_norm;
  double alpha;
  double beta;
  double v;
};

struct SolveReport {
  Vector solution = Vector(1);
  std::size_t iterations = 0;
  std::size_t restarts = 0;
  double residual_norm = 0.0;
  FlopCounter flops;
  bool converged = false;
  std::vector<IterationRecord> trace;  // length == iterations
};

}  // namespace fcg
