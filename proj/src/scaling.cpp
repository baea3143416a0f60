#include "fcg/scaling.hpp"

#include <algorithm>
#include <cmath>

#include "fcg/fuzzy_cg.hpp"

namespace fcg {

double uniform_pm1(std::mt19937_64& rng) {
  // top 53 bits -> [0,1), affine to [-1,1); stable across library versions
  const double u = static_cast<double>(rng() >> 11) * 0x1p-53;
  return 2.0 * u - 1.0;
}

Vector random_vector(std::size_t n, std::mt19937_64& rng) {
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = uniform_pm1(rng);
  return v;
}

Matrix random_matrix(std::size_t m, std::size_t n, std::mt19937_64& rng) {
  Matrix A(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) A(i, j) = uniform_pm1(rng);
  return A;
}

LinearSystem random_shifted_system(std::size_t n, std::mt19937_64& rng) {
  Matrix A = random_matrix(n, n, rng);
  for (std::size_t i = 0; i < n; ++i) A(i, i) += static_cast<double>(n);
  return LinearSystem(std::move(A), random_vector(n, rng));
}

ScalingStudyResult scaling_study(const std::vector<std::size_t>& sizes_in, std::size_t trials) {
  std::vector<std::size_t> sizes = sizes_in;
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  if (sizes.size() < 2) throw InvalidValueError("scaling study needs at least two distinct sizes");
  if (sizes.front() < 2) throw InvalidValueError("scaling study sizes must be >= 2");
  if (trials == 0) throw InvalidValueError("scaling study needs at least one trial");

  ScalingStudyResult res{sizes, {}, {}, 0.0, 0.0};
  std::mt19937_64 rng(kScalingSeed);
  for (std::size_t n : sizes) {
    double flops_acc = 0.0, iter_acc = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
      const LinearSystem sys = random_shifted_system(n, rng);
      const SolveReport rep = solve(sys, SolverOptions{});
      const double it = static_cast<double>(std::max<std::size_t>(rep.iterations, 1));
      flops_acc += static_cast<double>(rep.flops.adds + rep.flops.muls) / it;
      iter_acc += static_cast<double>(rep.iterations);
    }
    res.mean_flops_per_iter.push_back(flops_acc / static_cast<double>(trials));
    res.mean_iterations.push_back(iter_acc / static_cast<double>(trials));
  }

  // least-squares line through (log n, log flops/iter)
  const std::size_t k = sizes.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const double x = std::log(static_cast<double>(sizes[i]));
    const double y = std::log(res.mean_flops_per_iter[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = static_cast<double>(k) * sxx - sx * sx;
  res.slope = (static_cast<double>(k) * sxy - sx * sy) / denom;
  res.intercept = (sy - res.slope * sx) / static_cast<double>(k);
  return res;
}

}  // namespace fcg
