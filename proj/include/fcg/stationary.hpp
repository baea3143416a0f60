#pragma once

#include <optional>

#include "fcg/dense.hpp"
#include "fcg/report.hpp"

namespace fcg {

struct StationaryOptions {
  double tolerance = 5e-5;  // max-norm of the successive-iterate difference
  std::size_t max_iterations = 10000;
  std::optional<Vector> x0;  // zero vector when absent
};

// Square systems with nonzero diagonal only. A sweep whose step grows to 1e6
// times the first step is reported as diverged (converged=false).
SolveReport jacobi(const LinearSystem& sys, const StationaryOptions& opts = {});
SolveReport gauss_seidel(const LinearSystem& sys, const StationaryOptions& opts = {});

}  // namespace fcg
