#include "fcg/fixtures.hpp"

#include <cmath>

#include "fcg/stationary.hpp"
#include "fcg/svd.hpp"

namespace fcg {

std::optional<SolverId> solver_from_name(std::string_view name) {
  if (name == "fcg") return SolverId::fcg;
  if (name == "jacobi") return SolverId::jacobi;
  if (name == "gs") return SolverId::gs;
  if (name == "svd") return SolverId::svd;
  return std::nullopt;
}

const char* solver_name(SolverId id) {
  switch (id) {
    case SolverId::fcg: return "fcg";
    case SolverId::jacobi: return "jacobi";
    case SolverId::gs: return "gs";
    case SolverId::svd: return "svd";
  }
  return "?";
}

const Fixture& fixture(int id) {
  static const Fixture f1{
      1,
      LinearSystem(Matrix{{10, -2, -1, -1}, {-2, 10, -1, -1}, {-1, -1, 10, -2}, {-1, -1, -2, 10}},
                   Vector{3, 15, 27, -9}),
      Vector{1, 2, 3, 0}, 1e-6, 1e-4};
  static const Fixture f2{
      2, LinearSystem(Matrix{{20, 1, -2}, {3, 20, -1}, {2, -3, 20}}, Vector{17, -18, 25}),
      Vector{1, -1, 1}, 1e-6, 1e-4};
  static const Fixture f3{
      3,
      LinearSystem(Matrix{{6, 2, 4, -9, -12, 2, -12, 0, 1},
                          {8, -10, 1, 8, -22, 0, -11, -11, 7},
                          {9, -7, -6, 6, 10, -10, 15, -13, -12},
                          {-10, 11, -6, -8, -5, -9, 1, -3, -5},
                          {2, -1, 4, -3, 3, -4, -12, 10, -3}},
                   Vector{-12, -13, 9, 0, -6}),
      Vector{-0.1886, 0.4444, -0.1066, 0.1450, 0.3418, -0.0678, 0.4396, -0.0186, 0.0060}, 5e-5,
      1e-4};
  static const Fixture f4{
      4,
      LinearSystem(Matrix{{1, 2, 3}, {3, 2, 1}, {1, 1, 1}, {2, 3, -1}, {1, 1, 0}},
                   Vector{14, 10, 6, 5, 3}),
      Vector{1, 2, 3}, 1e-6, 1e-4};
  switch (id) {
    case 1: return f1;
    case 2: return f2;
    case 3: return f3;
    case 4: return f4;
    default: throw InvalidValueError("fixture id must be 1..4");
  }
}

FixtureOutcome run_fixture(int id, SolverId solver, const SolverOptions& fcg_opts) {
  const Fixture& fx = fixture(id);
  FixtureOutcome out;
  switch (solver) {
    case SolverId::fcg:
      out.report = solve(fx.system, fcg_opts);
      out.tolerance = fx.tol_exact;
      break;
    case SolverId::jacobi:
      out.report = jacobi(fx.system);
      out.tolerance = fx.tol_stationary;
      break;
    case SolverId::gs:
      out.report = gauss_seidel(fx.system);
      out.tolerance = fx.tol_stationary;
      break;
    case SolverId::svd: {
      out.report.solution = pinv_solve(fx.system);
      out.report.converged = true;
      FlopCounter fc;
      out.report.residual_norm = norm2(residual(fx.system, out.report.solution, &fc));
      out.tolerance = fx.tol_exact;
      break;
    }
  }
  out.expected = fx.expected;
  double err = 0.0;
  for (std::size_t i = 0; i < fx.expected.size(); ++i)
    err = std::max(err, std::fabs(out.report.solution[i] - fx.expected[i]));
  out.max_error = err;
  out.pass = out.report.converged && err <= out.tolerance;
  return out;
}

}  // namespace fcg
