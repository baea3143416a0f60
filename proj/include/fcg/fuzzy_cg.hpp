#pragma once

#include <functional>
#include <optional>
#include <variant>

#include "fcg/dense.hpp"
#include "fcg/report.hpp"
#include "fcg/tsk.hpp"

namespace fcg {

struct ConstantWeight {};  // v ≡ 1

// v = max unnormalized rule activation at the iterate, clamped to [v_min, 1].
// The model's input count must equal the system's unknown count.
struct MaxActivationWeight {
  TSKModel model;
};

using FuzzyWeightSource = std::variant<ConstantWeight, MaxActivationWeight>;

struct SolverOptions {
  double epsilon = 1e-10;  // relative: threshold is epsilon * max(1, ||A^T b||)
  std::size_t max_restarts = 100;
  FuzzyWeightSource weight_source = ConstantWeight{};
  double v_min = 1e-6;
  std::optional<Vector> x0;  // zero vector when absent
};

// Working state of one solve; handed to observers at the end of each
// iteration, when x/g/d already hold the post-update values and alpha, beta,
// v are the scalars of the iteration just finished.
struct SolverState {
  std::size_t k;  // global iteration index, 0-based
  Vector x;
  Vector g;  // scaled gradient, grad E(x) / v
  Vector d;
  double v;
  double alpha;
  double beta;
};

// Diagnostic hook: x_before and d_used are the pre-update iterate and the
// direction the step was taken along (state.d is already the next direction).
using IterationObserver =
    std::function<void(const SolverState& state, const Vector& x_before, const Vector& d_used)>;

// E(x) = 1/2 ||Ax - b||^2
double cost(const LinearSystem& sys, const Vector& x, FlopCounter* fc = nullptr);

double fuzzy_weight(const FuzzyWeightSource& source, const Vector& x, double v_min);

// (A^T A x - A^T b) / v, assembled from normal_apply and transpose_matvec
Vector scaled_gradient(const LinearSystem& sys, const Vector& x, double v,
                       FlopCounter* fc = nullptr);

// alpha = -dot(g, d) / (v * dot(Ad, Ad)) where g is the gradient of E at x.
// The step x + alpha*d*v then minimizes E along d exactly. Throws
// NullSpaceDirection when A·d vanishes.
double line_search_alpha(const LinearSystem& sys, const Vector& g, const Vector& d, double v,
                         FlopCounter* fc = nullptr);

// Polak-Ribiere beta = g+^T (g+ - g) / g^T g; nullopt when the previous
// gradient has vanished (converged signal, not an error).
std::optional<double> pr_beta(const Vector& g_next, const Vector& g_prev,
                              FlopCounter* fc = nullptr);

SolveReport solve(const LinearSystem& sys, const SolverOptions& opts = {});
SolveReport solve_observed(const LinearSystem& sys, const SolverOptions& opts,
                           const IterationObserver& observer);

}  // namespace fcg
