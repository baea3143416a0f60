#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fcg/dense.hpp"

namespace fcg {

struct ScalingStudyResult {
  std::vector<std::size_t> sizes;            // strictly increasing
  std::vector<double> mean_flops_per_iter;   // counted adds+muls per iteration
  std::vector<double> mean_iterations;
  double slope;      // least-squares fit of log(flops/iter) vs log(n)
  double intercept;
};

// deterministic uniforms built from raw mt19937_64 bits
double uniform_pm1(std::mt19937_64& rng);                              // [-1, 1)
Vector random_vector(std::size_t n, std::mt19937_64& rng);             // entries in [-1,1)
Matrix random_matrix(std::size_t m, std::size_t n, std::mt19937_64& rng);
// entries uniform in [-1,1) plus n added to the diagonal: well conditioned,
// so iteration counts stay flat and flops-per-iteration is the signal
LinearSystem random_shifted_system(std::size_t n, std::mt19937_64& rng);

inline constexpr std::uint64_t kScalingSeed = 0x5eedf00dULL;

// Runs the v≡1 solver on `trials` random shifted systems per size and fits
// the log-log slope. Needs at least two distinct sizes, each >= 2.
ScalingStudyResult scaling_study(const std::vector<std::size_t>& sizes, std::size_t trials);

}  // namespace fcg
