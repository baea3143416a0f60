#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "fcg/dense.hpp"

namespace fcg {

struct GaussianMF {
  double center;
  double width;  // strictly positive
  GaussianMF(double c, double w);
  // exp(-(x-center)^2 / width^2), no factor 2 in the denominator
  double operator()(double x) const;
};

// Zeroth-order TSK model: M rules over S inputs, Gaussian antecedents,
// constant consequents. Output = sum_i v_i(x) * c_i with v the normalized
// firing strengths.
class TSKModel {
 public:
  TSKModel(std::size_t input_count, std::size_t rule_count,
           std::vector<GaussianMF> antecedents,  // M×S row-major (rule-major)
           std::vector<double> consequents);     // length M

  std::size_t input_count() const { return S_; }
  std::size_t rule_count() const { return M_; }
  const GaussianMF& mf(std::size_t rule, std::size_t input) const {
    return ante_[rule * S_ + input];
  }
  GaussianMF& mf(std::size_t rule, std::size_t input) { return ante_[rule * S_ + input]; }
  double consequent(std::size_t rule) const { return cons_[rule]; }
  double& consequent(std::size_t rule) { return cons_[rule]; }

  // centers spread uniformly over [lo,hi] per input, widths = range/M,
  // consequents 0 (training demo initialization)
  static TSKModel spread(std::size_t input_count, std::size_t rule_count, double lo, double hi);

 private:
  std::size_t S_, M_;
  std::vector<GaussianMF> ante_;
  std::vector<double> cons_;
};

struct LearningRates {
  double eta1;  // consequents
  double eta2;  // centers
  double eta3;  // widths
  LearningRates(double e1, double e2, double e3);
};

struct TrainingSample {
  Vector x;
  double y;
};

// unnormalized rule activations, each prod_j exp(-(x_j - m_ij)^2 / sigma_ij^2)
Vector rule_activations(const TSKModel& model, const Vector& x);

// normalized firing strengths; DegenerateActivation if the activation sum
// falls below 1e-300
Vector firing_strengths(const TSKModel& model, const Vector& x);

double model_output(const TSKModel& model, const Vector& x);

double prediction_error(const TSKModel& model, const TrainingSample& s);

struct Gradients {
  Vector c;      // length M
  Matrix m;      // M×S
  Matrix sigma;  // M×S
};

// True derivatives of J = 1/2 (y - yhat)^2 with respect to consequents,
// centers and widths (finite-difference gated; the printed update rules'
// constant factors are absorbed into the learning rates).
Gradients gradients(const TSKModel& model, const TrainingSample& s);

// One gradient step evaluated at the pre-update parameters; widths clamped
// below at sigma_min = 1e-6.
TSKModel sgd_step(const TSKModel& model, const TrainingSample& s, const LearningRates& rates);

// Online SGD, samples in presentation order; per-epoch trace of mean squared
// prediction error, each error measured just before its sample's update.
std::pair<TSKModel, std::vector<double>> train(const TSKModel& model,
                                               const std::vector<TrainingSample>& samples,
                                               const LearningRates& rates, std::size_t epochs);

inline constexpr double kSigmaMin = 1e-6;
inline constexpr double kActivationFloor = 1e-300;

}  // namespace fcg
