#pragma once

#include <optional>
#include <string_view>

#include "fcg/fuzzy_cg.hpp"
#include "fcg/report.hpp"

namespace fcg {

enum class SolverId { fcg, jacobi, gs, svd };

std::optional<SolverId> solver_from_name(std::string_view name);
const char* solver_name(SolverId id);

// Built-in systems 1..4 with their reference solutions:
//  1: 4×4 diagonally dominant, x = [1,2,3,0]
//  2: 3×3 diagonally dominant, x = [1,-1,1]
//  3: 5×9 underdetermined, 9-entry reference vector (see note below)
//  4: 5×3 overdetermined consistent, x = [1,2,3]
// Note: fixture 3's recorded reference vector is internally inconsistent with
// its own system (its residual is ~7 while the system is consistent, and it
// deviates from the true minimum-norm solution by up to 0.40). It is kept
// verbatim, so fcg/svd verdicts on fixture 3 fail by construction even though
// both solvers agree with each other to 1e-12.
struct Fixture {
  int id;
  LinearSystem system;
  Vector expected;
  double tol_exact;       // fcg and svd comparisons
  double tol_stationary;  // jacobi and gauss_seidel comparisons
};

const Fixture& fixture(int id);  // 1..4, InvalidValueError otherwise

struct FixtureOutcome {
  SolveReport report;
  Vector expected = Vector(1);
  double tolerance = 0.0;
  double max_error = 0.0;
  bool pass = false;
};

// Solves the built-in system and compares componentwise against the
// reference. Stationary solvers on the non-square fixtures throw
// DimensionError. The svd path reports iterations=0 with an empty trace.
FixtureOutcome run_fixture(int id, SolverId solver, const SolverOptions& fcg_opts = {});

}  // namespace fcg
