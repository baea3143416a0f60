#include "fcg/fuzzy_cg.hpp"

#include <cfloat>
#include <cmath>
#include <utility>

namespace fcg {

double cost(const LinearSystem& sys, const Vector& x, FlopCounter* fc) {
  Vector r = residual(sys, x, fc);
  if (fc) fc->muls += 1;
  return 0.5 * dot(r, r, fc);
}

double fuzzy_weight(const FuzzyWeightSource& source, const Vector& x, double v_min) {
  if (std::holds_alternative<ConstantWeight>(source)) return 1.0;
  const auto& w = std::get<MaxActivationWeight>(source);
  Vector a = rule_activations(w.model, x);
  double best = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) best = std::max(best, a[i]);
  return std::min(std::max(best, v_min), 1.0);
}

Vector scaled_gradient(const LinearSystem& sys, const Vector& x, double v, FlopCounter* fc) {
  if (!(v > 0.0)) throw InvalidValueError("fuzzy weight must be positive");
  Vector g = normal_apply(sys.A, x, fc);
  Vector atb = transpose_matvec(sys.A, sys.b, fc);
  for (std::size_t j = 0; j < g.size(); ++j) g[j] = (g[j] - atb[j]) / v;
  if (fc) {
    fc->adds += g.size();
    fc->muls += g.size();
  }
  return g;
}

double line_search_alpha(const LinearSystem& sys, const Vector& g, const Vector& d, double v,
                         FlopCounter* fc) {
  Vector Ad = matvec(sys.A, d, fc);
  const double den = dot(Ad, Ad, fc);
  if (!(den > DBL_MIN)) throw NullSpaceDirection("direction lies in the null space of A");
  if (fc) fc->muls += 2;
  return -dot(g, d, fc) / (v * den);
}

std::optional<double> pr_beta(const Vector& g_next, const Vector& g_prev, FlopCounter* fc) {
  const double den = dot(g_prev, g_prev, fc);
  if (!(den > DBL_MIN)) return std::nullopt;
  Vector z = sub(g_next, g_prev, fc);
  if (fc) fc->muls += 1;
  return dot(g_next, z, fc) / den;
}

namespace {

Vector negated(const Vector& g, FlopCounter* fc) {
  Vector d = g;
  scale(d, -1.0, fc);
  return d;
}

}  // namespace

SolveReport solve_observed(const LinearSystem& sys, const SolverOptions& opts,
                           const IterationObserver& observer) {
  const std::size_t n = sys.A.cols();
  if (!(opts.epsilon > 0.0)) throw InvalidValueError("epsilon must be > 0");
  if (opts.max_restarts == 0) throw InvalidValueError("max_restarts must be >= 1");
  if (!(opts.v_min > 0.0) || opts.v_min > 1.0) throw InvalidValueError("v_min must be in (0, 1]");
  if (const auto* w = std::get_if<MaxActivationWeight>(&opts.weight_source))
    if (w->model.input_count() != n)
      throw DimensionError("fuzzy model input count must equal the unknown count");
  if (opts.x0 && opts.x0->size() != n)
    throw DimensionError("x0 length must equal the unknown count");

  FlopCounter fc;
  SolveReport rep;

  // convergence threshold, made scale-free by the data norm
  const double eps_eff =
      opts.epsilon * std::max(1.0, norm2(transpose_matvec(sys.A, sys.b, &fc), &fc));

  SolverState st{0, opts.x0 ? *opts.x0 : Vector(n), Vector(n), Vector(n), 1.0, 0.0, 0.0};
  st.v = fuzzy_weight(opts.weight_source, st.x, opts.v_min);
  st.g = scaled_gradient(sys, st.x, st.v, &fc);
  st.d = negated(st.g, &fc);

  const std::size_t budget = opts.max_restarts * n;
  std::size_t inner = 0;
  bool converged = false;

  while (true) {
    if (inner == n) {  // periodic restart: back to steepest descent from here
      st.d = negated(st.g, &fc);
      inner = 0;
      ++rep.restarts;
    }
    const double d_norm = norm2(st.d, &fc);
    if (d_norm < eps_eff) {
      converged = true;
      break;
    }
    if (st.k >= budget) break;

    double alpha;
    try {
      // grad E = v * g, so this equals -dot(g,d)/dot(Ad,Ad): the step
      // alpha*v*d below is the exact minimizer of E along d for any v
      Vector raw_g = st.g;
      scale(raw_g, st.v, &fc);
      alpha = line_search_alpha(sys, raw_g, st.d, st.v, &fc);
    } catch (const NullSpaceDirection&) {
      if (inner == 0) {  // d = -g and A^T(A g) = 0 force g = 0: already at a minimizer
        converged = true;
        break;
      }
      st.d = negated(st.g, &fc);
      inner = 0;
      ++rep.restarts;
      continue;
    }

    IterationRecord rec{st.k, cost(sys, st.x, &fc), d_norm, alpha, 0.0, st.v};

    Vector x_before = observer ? st.x : Vector(1);
    Vector d_used = observer ? st.d : Vector(1);

    fc.muls += 1;
    axpy(st.x, alpha * st.v, st.d, &fc);
    const double v_next = fuzzy_weight(opts.weight_source, st.x, opts.v_min);
    Vector g_next = scaled_gradient(sys, st.x, v_next, &fc);
    const double beta = pr_beta(g_next, st.g, &fc).value_or(0.0);
    scale(st.d, beta, &fc);
    axpy(st.d, -1.0, g_next, &fc);  // d = -g_next + beta * d

    rec.beta = beta;
    rep.trace.push_back(rec);
    st.alpha = alpha;
    st.beta = beta;
    st.g = std::move(g_next);
    if (observer) observer(st, x_before, d_used);
    st.v = v_next;
    ++st.k;
    ++inner;
  }

  rep.solution = std::move(st.x);
  rep.iterations = st.k;
  rep.residual_norm = norm2(residual(sys, rep.solution, &fc), &fc);
  rep.converged = converged;
  rep.flops = fc;
  return rep;
}

SolveReport solve(const LinearSystem& sys, const SolverOptions& opts) {
  return solve_observed(sys, opts, IterationObserver{});
}

}  // namespace fcg
