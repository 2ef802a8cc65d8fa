// Command-line front end: computes the local Chern obstruction of a
// collection of 1-forms on a complete-intersection germ, the algebraic
// index, the special-scheme ideal, and the numeric conservation check.
//
// Exit codes: 0 success / check PASS, 1 validation error, 2 computation
// error, 3 check FAIL.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <string>

#include "chernob/errors.hpp"
#include "chernob/obstruction.hpp"
#include "chernob/oracle.hpp"
#include "chernob/report.hpp"
#include "chernob/stdbasis.hpp"

namespace {

struct Options {
  std::string file;
  std::uint64_t seed = 0;
  int trials = 3;
  int height = 10'000;
  double lambda = 1e-2;
  double radius = 0.5;
  int starts = 0;
  double tol = 1e-12;
  std::string format = "text";
  std::uint64_t pair_limit = 50'000;
};

chernob::TrialConfig trial_config(const Options& opt) {
  chernob::TrialConfig cfg;
  cfg.seed = opt.seed;
  cfg.trials = opt.trials;
  cfg.coefficient_height = opt.height;
  cfg.limits.pair_limit = opt.pair_limit;
  cfg.limits.reduction_step_limit = opt.pair_limit * 40;
  return cfg;
}

chernob::OracleConfig oracle_config(const Options& opt) {
  chernob::OracleConfig cfg;
  cfg.seed = opt.seed;
  cfg.lambda_magnitude = opt.lambda;
  cfg.ball_radius = opt.radius;
  cfg.starts = opt.starts;
  cfg.newton_tol = opt.tol;
  return cfg;
}

void add_common_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("file", opt.file, "problem file")->required();
  cmd->add_option("--seed", opt.seed, "random seed (default 0)");
  cmd->add_option("--trials", opt.trials, "baseline trials (default 3)")
      ->check(CLI::Range(2, 1000));
  cmd->add_option("--height", opt.height, "baseline coefficient height (default 10000)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--lambda", opt.lambda, "deformation magnitude (default 1e-2)");
  cmd->add_option("--radius", opt.radius, "acceptance ball radius (default 0.5)");
  cmd->add_option("--starts", opt.starts, "Newton starts (default 50 x Bezout bound)");
  cmd->add_option("--tol", opt.tol, "Newton residual tolerance (default 1e-12)");
  cmd->add_option("--format", opt.format, "output format: text|machine")
      ->check(CLI::IsMember({"text", "machine"}));
  cmd->add_option("--pair-limit", opt.pair_limit,
                  "standard-basis pair reduction limit (default 50000)");
}

void emit(const chernob::RunReport& report, const Options& opt) {
  if (opt.format == "machine") {
    std::cout << chernob::render_machine(report);
  } else {
    std::cout << chernob::render_text(report);
  }
  std::cerr << "wall time: " << report.wall_time_ms << " ms\n";
}

std::function<void(const std::string&)> stderr_notice() {
  return [](const std::string& message) { std::cerr << "notice: " << message << "\n"; };
}

int cmd_chern(const Options& opt, bool index_only) {
  const auto t0 = std::chrono::steady_clock::now();
  const chernob::Problem problem = chernob::build_problem(chernob::load_problem_file(opt.file));
  chernob::RunReport report;
  report.command = index_only ? "index" : "chern";
  report.problem = problem.echo;
  report.seed = opt.seed;

  const chernob::TrialConfig cfg = trial_config(opt);
  if (index_only) {
    const chernob::Colength index =
        chernob::alg_index(problem.variety, problem.collection, cfg.limits);
    if (!index.is_finite()) throw chernob::NonIsolatedSchemeError();
    report.alg_index = index;
  } else {
    const chernob::ObstructionReport result =
        chernob::chern_obstruction(problem.variety, problem.collection, cfg, stderr_notice());
    report.alg_index = result.alg_index;
    report.baseline = result.baseline;
    report.chern = result.chern;
    report.negative_flag = result.negative_flag;
    for (const chernob::Colength& v : result.trial_values) report.trial_values.push_back(v.value());
  }
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  emit(report, opt);
  return 0;
}

int cmd_scheme(const Options& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  const chernob::Problem problem = chernob::build_problem(chernob::load_problem_file(opt.file));
  chernob::RunReport report;
  report.command = "scheme";
  report.problem = problem.echo;
  report.seed = opt.seed;

  const chernob::TrialConfig cfg = trial_config(opt);
  const chernob::Ideal ideal =
      chernob::special_scheme_ideal(problem.variety, problem.collection);
  for (const chernob::Polynomial& g : ideal.generators) {
    report.scheme_generators.push_back(chernob::to_string(g, problem.echo.variables));
  }
  const chernob::StandardBasis basis =
      chernob::standard_basis(ideal, chernob::MonomialOrder::LocalNegDegRevLex, cfg.limits);
  for (const chernob::Polynomial& g : basis.elements) {
    const chernob::Term& lt = g.leading_term(basis.order);
    report.leading_ideal.push_back(chernob::to_string(
        chernob::Polynomial::from_term(chernob::Rational(1), lt.monomial),
        problem.echo.variables));
  }
  report.scheme_colength = chernob::colength(basis);
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  emit(report, opt);
  return 0;
}

int cmd_check(const Options& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  const chernob::Problem problem = chernob::build_problem(chernob::load_problem_file(opt.file));
  chernob::RunReport report;
  report.command = "check";
  report.problem = problem.echo;
  report.seed = opt.seed;

  try {
    const chernob::ConservationReport result = chernob::verify_conservation(
        problem.variety, problem.collection, trial_config(opt), oracle_config(opt),
        stderr_notice());
    report.alg_index = result.chern.alg_index;
    report.baseline = result.chern.baseline;
    report.chern = result.chern.chern;
    report.negative_flag = result.chern.negative_flag;
    for (const chernob::Colength& v : result.chern.trial_values) {
      report.trial_values.push_back(v.value());
    }
    report.oracle_count = result.oracle.count;
    for (std::size_t c : result.oracle.per_deformation_counts) {
      report.per_deformation_counts.push_back(c);
    }
    report.pass = result.pass;
    if (!result.pass) {
      report.failure_cause = "chern " + std::to_string(result.chern.chern) +
                             " != oracle count " + std::to_string(result.oracle.count);
    }
  } catch (const chernob::ComputationError& e) {
    report.pass = false;
    report.failure_cause = e.what();
  }
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  emit(report, opt);
  return *report.pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"local Chern obstruction of 1-form collections on complete-intersection germs"};
  app.require_subcommand(1);

  Options opt;
  CLI::App* chern = app.add_subcommand("chern", "compute Ch = alg_index - generic baseline");
  CLI::App* index = app.add_subcommand("index", "compute the algebraic index only");
  CLI::App* scheme =
      app.add_subcommand("scheme", "print the special-scheme ideal and its leading ideal");
  CLI::App* check =
      app.add_subcommand("check", "compare Ch against the numeric special-point count");
  for (CLI::App* cmd : {chern, index, scheme, check}) add_common_flags(cmd, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (chern->parsed()) return cmd_chern(opt, false);
    if (index->parsed()) return cmd_chern(opt, true);
    if (scheme->parsed()) return cmd_scheme(opt);
    if (check->parsed()) return cmd_check(opt);
  } catch (const chernob::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const chernob::ComputationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
