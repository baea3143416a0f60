#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fcg/fixtures.hpp"
#include "fcg/fuzzy_cg.hpp"
#include "fcg/report_io.hpp"
#include "fcg/scaling.hpp"
#include "fcg/stationary.hpp"
#include "fcg/svd.hpp"
#include "fcg/system_io.hpp"
#include "fcg/tsk_json.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNotConverged = 1;
constexpr int kUsage = 2;

fcg::SolveReport svd_report(const fcg::LinearSystem& sys) {
  fcg::SolveReport rep;
  rep.solution = fcg::pinv_solve(sys);
  rep.converged = true;
  rep.residual_norm = fcg::norm2(fcg::residual(sys, rep.solution));
  return rep;
}

int run_solve(const std::string& input, const std::string& solver, double epsilon,
              bool epsilon_set, std::size_t max_restarts, const std::string& fuzzy_model,
              bool as_json) {
  const auto id = fcg::solver_from_name(solver);
  if (!id) {
    std::fprintf(stderr, "unknown solver '%s'\n", solver.c_str());
    return kUsage;
  }
  const fcg::LinearSystem sys = fcg::load_system_file(input);

  fcg::SolveReport rep;
  switch (*id) {
    case fcg::SolverId::fcg: {
      fcg::SolverOptions opts;
      if (epsilon_set) opts.epsilon = epsilon;
      opts.max_restarts = max_restarts;
      if (!fuzzy_model.empty())
        opts.weight_source = fcg::MaxActivationWeight{fcg::load_tsk_file(fuzzy_model)};
      rep = fcg::solve(sys, opts);
      break;
    }
    case fcg::SolverId::jacobi:
    case fcg::SolverId::gs: {
      fcg::StationaryOptions opts;
      if (epsilon_set) opts.tolerance = epsilon;
      rep = *id == fcg::SolverId::jacobi ? fcg::jacobi(sys, opts) : fcg::gauss_seidel(sys, opts);
      break;
    }
    case fcg::SolverId::svd:
      rep = svd_report(sys);
      break;
  }
  std::fputs((as_json ? fcg::report_to_json(rep) + "\n" : fcg::report_to_text(rep)).c_str(),
             stdout);
  return rep.converged ? kOk : kNotConverged;
}

int run_fixture_cmd(int id, const std::string& solver, bool as_json) {
  const auto sid = fcg::solver_from_name(solver);
  if (!sid) {
    std::fprintf(stderr, "unknown solver '%s'\n", solver.c_str());
    return kUsage;
  }
  const fcg::FixtureOutcome out = fcg::run_fixture(id, *sid);
  if (as_json) {
    nlohmann::json j{{"fixture", id},
                     {"solver", solver},
                     {"pass", out.pass},
                     {"max_error", out.max_error},
                     {"tolerance", out.tolerance},
                     {"report", nlohmann::json::parse(fcg::report_to_json(out.report))}};
    std::fputs((j.dump(2) + "\n").c_str(), stdout);
  } else {
    std::fputs(fcg::report_to_text(out.report).c_str(), stdout);
    std::printf("fixture %d %s: %s (max error %.6e, tolerance %.1e)\n", id, solver.c_str(),
                out.pass ? "PASS" : "FAIL", out.max_error, out.tolerance);
  }
  return out.pass ? kOk : kNotConverged;
}

int run_bench(const std::string& sizes_csv, std::size_t trials, bool as_json) {
  std::vector<std::size_t> sizes;
  std::string tok;
  for (std::size_t i = 0; i <= sizes_csv.size(); ++i) {
    if (i == sizes_csv.size() || sizes_csv[i] == ',') {
      if (!tok.empty()) {
        try {
          const long v = std::stol(tok);
          if (v < 2) throw std::invalid_argument("size");
          sizes.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
          std::fprintf(stderr, "invalid size '%s'\n", tok.c_str());
          return kUsage;
        }
        tok.clear();
      }
    } else {
      tok += sizes_csv[i];
    }
  }
  if (sizes.size() < 2) {
    std::fprintf(stderr, "need at least two sizes\n");
    return kUsage;
  }
  const fcg::ScalingStudyResult res = fcg::scaling_study(sizes, trials);
  if (as_json) {
    nlohmann::json j{{"sizes", res.sizes},
                     {"mean_flops_per_iteration", res.mean_flops_per_iter},
                     {"mean_iterations", res.mean_iterations},
                     {"slope", res.slope},
                     {"intercept", res.intercept}};
    std::fputs((j.dump(2) + "\n").c_str(), stdout);
  } else {
    std::printf("%8s  %22s  %16s\n", "n", "mean flops/iteration", "mean iterations");
    for (std::size_t i = 0; i < res.sizes.size(); ++i)
      std::printf("%8zu  %22.1f  %16.2f\n", res.sizes[i], res.mean_flops_per_iter[i],
                  res.mean_iterations[i]);
    std::printf("log-log slope: %.4f (intercept %.4f)\n", res.slope, res.intercept);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fuzzy-weighted conjugate gradient solver and benchmarks"};
  app.require_subcommand(1);

  std::string input, solver = "fcg", fuzzy_model, sizes_csv = "16,32,64,128";
  double epsilon = 1e-10;
  std::size_t max_restarts = 100, trials = 5;
  int fixture_id = 1;
  bool as_json = false;

  CLI::App* solve_cmd = app.add_subcommand("solve", "solve a system from a file");
  solve_cmd->add_option("--input", input, "system file")->required();
  solve_cmd->add_option("--solver", solver, "fcg|jacobi|gs|svd");
  CLI::Option* eps_opt =
      solve_cmd->add_option("--epsilon", epsilon, "fcg epsilon / stationary tolerance");
  solve_cmd->add_option("--max-restarts", max_restarts, "fcg restart budget");
  solve_cmd->add_option("--fuzzy-model", fuzzy_model, "TSK model JSON for the fcg weight");
  solve_cmd->add_flag("--json", as_json, "emit JSON");

  CLI::App* fixture_cmd = app.add_subcommand("fixture", "run a built-in example");
  fixture_cmd->add_option("--id", fixture_id, "fixture id")->required()->check(CLI::Range(1, 4));
  fixture_cmd->add_option("--solver", solver, "fcg|jacobi|gs|svd");
  fixture_cmd->add_flag("--json", as_json, "emit JSON");

  CLI::App* bench_cmd = app.add_subcommand("bench", "flops-per-iteration scaling study");
  bench_cmd->add_option("--sizes", sizes_csv, "comma-separated system sizes");
  bench_cmd->add_option("--trials", trials, "trials per size");
  bench_cmd->add_flag("--json", as_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (solve_cmd->parsed())
      return run_solve(input, solver, epsilon, eps_opt->count() > 0, max_restarts, fuzzy_model,
                       as_json);
    if (fixture_cmd->parsed()) return run_fixture_cmd(fixture_id, solver, as_json);
    if (bench_cmd->parsed()) return run_bench(sizes_csv, trials, as_json);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  }
  return kUsage;
}
