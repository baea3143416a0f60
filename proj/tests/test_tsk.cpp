#include <doctest.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "fcg/tsk.hpp"
#include "fcg/tsk_json.hpp"

using namespace fcg;

namespace {

std::mt19937_64& rng() {
  static std::mt19937_64 r(0xf00d);
  return r;
}

double uni(double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  return u(rng());
}

// random model whose rules comfortably cover [-1,1]^S, so nothing underflows
TSKModel random_model(std::size_t S, std::size_t M) {
  std::vector<GaussianMF> ante;
  ante.reserve(M * S);
  for (std::size_t i = 0; i < M * S; ++i) ante.emplace_back(uni(-1, 1), uni(0.4, 1.5));
  std::vector<double> cons(M);
  for (double& c : cons) c = uni(-1, 1);
  return TSKModel(S, M, std::move(ante), std::move(cons));
}

TrainingSample random_sample(std::size_t S) {
  std::vector<double> x(S);
  for (double& xi : x) xi = uni(-1, 1);
  return {Vector(std::move(x)), uni(-1, 1)};
}

double loss(const TSKModel& m, const TrainingSample& s) {
  const double e = prediction_error(m, s);
  return 0.5 * e * e;
}

}  // namespace

TEST_CASE("gaussian membership") {
  GaussianMF mf(2.0, 1.0);
  CHECK(mf(2.0) == 1.0);
  CHECK(mf(3.0) == doctest::Approx(0.36787944117144233).epsilon(1e-15));  // exp(-1)
  CHECK(mf(1.0) == mf(3.0));  // symmetric about the center

  GaussianMF wide(0.0, 2.0);
  CHECK(wide(2.0) == doctest::Approx(0.36787944117144233).epsilon(1e-15));

  CHECK_THROWS_AS(GaussianMF(0.0, 0.0), InvalidValueError);
  CHECK_THROWS_AS(GaussianMF(0.0, -1.0), InvalidValueError);
  CHECK_THROWS_AS(GaussianMF(NAN, 1.0), InvalidValueError);
}

TEST_CASE("model construction") {
  CHECK_THROWS_AS(TSKModel(2, 2, {GaussianMF(0, 1)}, {1.0, 2.0}), DimensionError);
  CHECK_THROWS_AS(TSKModel(1, 2, {GaussianMF(0, 1), GaussianMF(1, 1)}, {1.0}), DimensionError);

  const TSKModel m = TSKModel::spread(2, 3, -1.0, 1.0);
  CHECK(m.input_count() == 2);
  CHECK(m.rule_count() == 3);
  CHECK(m.mf(0, 0).center == -1.0);
  CHECK(m.mf(1, 0).center == 0.0);
  CHECK(m.mf(2, 1).center == 1.0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(m.mf(i, j).width == doctest::Approx(2.0 / 3.0));
  for (std::size_t i = 0; i < 3; ++i) CHECK(m.consequent(i) == 0.0);
}

TEST_CASE("activations multiply across inputs") {
  // rule 0 at (0,0), rule 1 at (1,-1), all widths 1
  TSKModel m(2, 2, {GaussianMF(0, 1), GaussianMF(0, 1), GaussianMF(1, 1), GaussianMF(-1, 1)},
             {2.0, 4.0});
  const Vector a = rule_activations(m, Vector{0.0, 0.0});
  CHECK(a[0] == 1.0);
  CHECK(a[1] == doctest::Approx(std::exp(-2.0)).epsilon(1e-15));

  const Vector v = firing_strengths(m, Vector{0.0, 0.0});
  CHECK(v[0] + v[1] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(v[0] == doctest::Approx(1.0 / (1.0 + std::exp(-2.0))).epsilon(1e-14));

  // symmetric point between two rules: equal shares, output = mean consequent
  TSKModel sym(1, 2, {GaussianMF(-1, 1), GaussianMF(1, 1)}, {2.0, 4.0});
  const Vector vs = firing_strengths(sym, Vector{0.0});
  CHECK(vs[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(model_output(sym, Vector{0.0}) == doctest::Approx(3.0).epsilon(1e-13));

  CHECK_THROWS_AS(rule_activations(m, Vector{0.0}), DimensionError);
}

TEST_CASE("normalized strengths sum to one on random models") {
  for (int t = 0; t < 200; ++t) {
    const std::size_t S = 1 + static_cast<std::size_t>(t % 4);
    const std::size_t M = 1 + static_cast<std::size_t>(t % 5);
    const TSKModel m = random_model(S, M);
    const Vector v = firing_strengths(m, random_sample(S).x);
    double sum = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      CHECK(v[i] >= 0.0);
      CHECK(v[i] <= 1.0);
      sum += v[i];
    }
    CHECK(std::fabs(sum - 1.0) <= 1e-12);
  }
}

TEST_CASE("inputs outside every rule's support are rejected") {
  TSKModel far(1, 1, {GaussianMF(1e4, 1e-2)}, {1.0});
  CHECK_THROWS_AS(firing_strengths(far, Vector{0.0}), DegenerateActivation);
  CHECK_THROWS_AS(model_output(far, Vector{0.0}), DegenerateActivation);
  // the unnormalized activations themselves are fine (exactly zero)
  CHECK(rule_activations(far, Vector{0.0})[0] == 0.0);
}

TEST_CASE("analytic gradients match central differences") {
  const double h = 1e-6;
  for (int t = 0; t < 100; ++t) {
    const std::size_t S = 1 + static_cast<std::size_t>(t % 4);
    const std::size_t M = 1 + static_cast<std::size_t>((t * 7) % 5);
    const TSKModel m = random_model(S, M);
    const TrainingSample s = random_sample(S);
    const Gradients g = gradients(m, s);

    auto check_fd = [&](double analytic, double plus, double minus) {
      const double fd = (plus - minus) / (2.0 * h);
      CHECK(std::fabs(analytic - fd) <= std::max(1e-8, 1e-5 * std::fabs(analytic)));
    };

    for (std::size_t i = 0; i < M; ++i) {
      TSKModel p = m, q = m;
      p.consequent(i) += h;
      q.consequent(i) -= h;
      check_fd(g.c[i], loss(p, s), loss(q, s));
      for (std::size_t j = 0; j < S; ++j) {
        TSKModel pc = m, qc = m;
        pc.mf(i, j).center += h;
        qc.mf(i, j).center -= h;
        check_fd(g.m(i, j), loss(pc, s), loss(qc, s));
        TSKModel pw = m, qw = m;
        pw.mf(i, j).width += h;
        qw.mf(i, j).width -= h;
        check_fd(g.sigma(i, j), loss(pw, s), loss(qw, s));
      }
    }
  }
}

TEST_CASE("sgd step direction and width clamp") {
  TSKModel m(1, 1, {GaussianMF(0.0, 1.0)}, {0.0});
  const TrainingSample s{Vector{0.0}, 2.0};  // error 2, push consequent up
  const TSKModel next = sgd_step(m, s, LearningRates(0.1, 0.1, 0.1));
  CHECK(next.consequent(0) == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(next.mf(0, 0).center == 0.0);  // x at the center: no antecedent pull

  // huge width rate drives one width into the clamp (with a single rule the
  // normalized strength is constantly 1 and antecedents never move)
  TSKModel off(1, 2, {GaussianMF(0.0, 0.5), GaussianMF(1.0, 0.5)}, {0.0, 5.0});
  const TrainingSample s2{Vector{0.6}, -3.0};
  const TSKModel clamped = sgd_step(off, s2, LearningRates(1e-3, 1e-3, 1e6));
  CHECK(clamped.mf(1, 0).width == kSigmaMin);
  CHECK(clamped.mf(0, 0).width > 0.5);

  CHECK_THROWS_AS(LearningRates(0.0, 0.1, 0.1), InvalidValueError);
  CHECK_THROWS_AS(LearningRates(0.1, -0.1, 0.1), InvalidValueError);
}

TEST_CASE("training drives the error down and traces one mse per epoch") {
  // one-dimensional target y = x^2 on a handful of points
  std::vector<TrainingSample> samples;
  for (double x : {-1.0, -0.5, 0.0, 0.5, 1.0}) samples.push_back({Vector{x}, x * x});

  const TSKModel m0 = TSKModel::spread(1, 3, -1.0, 1.0);
  const auto [trained, mse] = train(m0, samples, LearningRates(0.5, 0.05, 0.05), 60);
  REQUIRE(mse.size() == 60);
  CHECK(mse.back() < 0.25 * mse.front());
  for (const TrainingSample& s : samples)
    CHECK(std::fabs(prediction_error(trained, s)) < 0.25);
}

TEST_CASE("training surfaces the offending sample index") {
  TSKModel far(1, 1, {GaussianMF(1e4, 1e-2)}, {1.0});
  std::vector<TrainingSample> samples{{Vector{1e4}, 1.0}, {Vector{0.0}, 1.0}};
  try {
    train(far, samples, LearningRates(0.1, 0.1, 0.1), 1);
    CHECK(false);
  } catch (const DegenerateActivation& e) {
    CHECK(std::string(e.what()).find("sample 1") != std::string::npos);
  }
}

TEST_CASE("model json round-trip is exact") {
  const TSKModel m = random_model(3, 4);
  const TSKModel back = tsk_from_json(tsk_to_json(m));
  REQUIRE(back.input_count() == m.input_count());
  REQUIRE(back.rule_count() == m.rule_count());
  for (std::size_t i = 0; i < m.rule_count(); ++i) {
    CHECK(back.consequent(i) == m.consequent(i));
    for (std::size_t j = 0; j < m.input_count(); ++j) {
      CHECK(back.mf(i, j).center == m.mf(i, j).center);
      CHECK(back.mf(i, j).width == m.mf(i, j).width);
    }
  }
}

TEST_CASE("model json rejects malformed input") {
  CHECK_THROWS_AS(tsk_from_json("not json"), InvalidValueError);
  CHECK_THROWS_AS(tsk_from_json("{}"), InvalidValueError);
  CHECK_THROWS_AS(tsk_from_json(R"({"S":2,"M":1,"centers":[[0,0]],"widths":[[1]],"consequents":[0]})"),
                  InvalidValueError);
  CHECK_THROWS_AS(tsk_from_json(R"({"S":1,"M":2,"centers":[[0]],"widths":[[1]],"consequents":[0,0]})"),
                  InvalidValueError);
  CHECK_THROWS_AS(tsk_from_json(R"({"S":1,"M":1,"centers":[[0]],"widths":[[-1]],"consequents":[0]})"),
                  InvalidValueError);
  CHECK_THROWS_AS(load_tsk_file("/nonexistent/model.json"), InvalidValueError);
}
