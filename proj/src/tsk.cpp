#include "fcg/tsk.hpp"

#include <cmath>
#include <string>

namespace fcg {

GaussianMF::GaussianMF(double c, double w) : center(c), width(w) {
  if (!std::isfinite(c) || !std::isfinite(w)) throw InvalidValueError("membership parameters must be finite");
  if (w <= 0.0) throw InvalidValueError("membership width must be > 0");
}

double GaussianMF::operator()(double x) const {
  const double z = (x - center) / width;
  return std::exp(-z * z);
}

TSKModel::TSKModel(std::size_t input_count, std::size_t rule_count,
                   std::vector<GaussianMF> antecedents, std::vector<double> consequents)
    : S_(input_count), M_(rule_count), ante_(std::move(antecedents)), cons_(std::move(consequents)) {
  if (S_ == 0 || M_ == 0) throw InvalidValueError("model needs at least one rule and one input");
  if (ante_.size() != M_ * S_)
    throw DimensionError("antecedent grid must be rule_count x input_count");
  if (cons_.size() != M_) throw DimensionError("need one consequent per rule");
  for (double c : cons_)
    if (!std::isfinite(c)) throw InvalidValueError("consequent not finite");
}

TSKModel TSKModel::spread(std::size_t input_count, std::size_t rule_count, double lo, double hi) {
  if (!(hi > lo)) throw InvalidValueError("spread: need hi > lo");
  const double width = (hi - lo) / static_cast<double>(rule_count);
  std::vector<GaussianMF> ante;
  ante.reserve(rule_count * input_count);
  for (std::size_t i = 0; i < rule_count; ++i) {
    const double t = rule_count == 1 ? 0.5
                                     : static_cast<double>(i) / static_cast<double>(rule_count - 1);
    const double c = lo + t * (hi - lo);
    for (std::size_t j = 0; j < input_count; ++j) ante.emplace_back(c, width);
  }
  return TSKModel(input_count, rule_count, std::move(ante), std::vector<double>(rule_count, 0.0));
}

LearningRates::LearningRates(double e1, double e2, double e3) : eta1(e1), eta2(e2), eta3(e3) {
  if (!(e1 > 0.0) || !(e2 > 0.0) || !(e3 > 0.0))
    throw InvalidValueError("learning rates must be strictly positive");
}

Vector rule_activations(const TSKModel& model, const Vector& x) {
  if (x.size() != model.input_count())
    throw DimensionError("input length does not match model input count");
  Vector a(model.rule_count());
  for (std::size_t i = 0; i < model.rule_count(); ++i) {
    double prod = 1.0;
    for (std::size_t j = 0; j < model.input_count(); ++j) prod *= model.mf(i, j)(x[j]);
    a[i] = prod;
  }
  return a;
}

Vector firing_strengths(const TSKModel& model, const Vector& x) {
  Vector a = rule_activations(model, x);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i];
  if (sum < kActivationFloor)
    throw DegenerateActivation("all rule activations underflowed at this input");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] /= sum;
  return a;
}

double model_output(const TSKModel& model, const Vector& x) {
  Vector v = firing_strengths(model, x);
  double y = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) y += v[i] * model.consequent(i);
  return y;
}

double prediction_error(const TSKModel& model, const TrainingSample& s) {
  return s.y - model_output(model, s.x);
}

Gradients gradients(const TSKModel& model, const TrainingSample& s) {
  const std::size_t M = model.rule_count(), S = model.input_count();
  Vector v = firing_strengths(model, s.x);
  double yhat = 0.0;
  for (std::size_t i = 0; i < M; ++i) yhat += v[i] * model.consequent(i);
  const double e = s.y - yhat;

  Gradients g{Vector(M), Matrix(M, S), Matrix(M, S)};
  for (std::size_t i = 0; i < M; ++i) {
    g.c[i] = -e * v[i];
    // d yhat / d(theta_ij) = v_i (c_i - yhat) * d log(activation_i) / d(theta_ij)
    const double common = -e * v[i] * (model.consequent(i) - yhat);
    for (std::size_t j = 0; j < S; ++j) {
      const GaussianMF& mf = model.mf(i, j);
      const double diff = s.x[j] - mf.center;
      const double w2 = mf.width * mf.width;
      g.m(i, j) = common * 2.0 * diff / w2;
      g.sigma(i, j) = common * 2.0 * diff * diff / (w2 * mf.width);
    }
  }
  return g;
}

TSKModel sgd_step(const TSKModel& model, const TrainingSample& s, const LearningRates& rates) {
  Gradients g = gradients(model, s);
  const std::size_t M = model.rule_count(), S = model.input_count();
  std::vector<GaussianMF> ante;
  ante.reserve(M * S);
  std::vector<double> cons(M);
  for (std::size_t i = 0; i < M; ++i) {
    cons[i] = model.consequent(i) - rates.eta1 * g.c[i];
    for (std::size_t j = 0; j < S; ++j) {
      const GaussianMF& mf = model.mf(i, j);
      const double m = mf.center - rates.eta2 * g.m(i, j);
      double w = mf.width - rates.eta3 * g.sigma(i, j);
      if (w < kSigmaMin) w = kSigmaMin;
      ante.emplace_back(m, w);
    }
  }
  return TSKModel(S, M, std::move(ante), std::move(cons));
}

std::pair<TSKModel, std::vector<double>> train(const TSKModel& model,
                                               const std::vector<TrainingSample>& samples,
                                               const LearningRates& rates, std::size_t epochs) {
  TSKModel m = model;
  std::vector<double> mse;
  mse.reserve(epochs);
  for (std::size_t ep = 0; ep < epochs; ++ep) {
    double acc = 0.0;
    std::size_t idx = 0;
    for (const TrainingSample& s : samples) {
      double e;
      try {
        e = prediction_error(m, s);
        m = sgd_step(m, s, rates);
      } catch (const DegenerateActivation&) {
        throw DegenerateActivation("sample " + std::to_string(idx) +
                                   " lies outside all rules' support");
      }
      acc += e * e;
      ++idx;
    }
    if (!samples.empty()) acc /= static_cast<double>(samples.size());
    mse.push_back(acc);
  }
  return {std::move(m), std::move(mse)};
}

}  // namespace fcg
