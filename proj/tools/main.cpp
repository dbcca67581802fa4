#include "cli.hpp"

#include "CLI11.hpp"

#include <iostream>

namespace {

void add_param_flags(CLI::App* cmd, padovan::cli::Options& opts) {
  cmd->add_option("--alpha", opts.alpha, "coefficient alpha (rational text, e.g. 2 or 1/3)");
  cmd->add_option("--beta", opts.beta, "coefficient beta");
  cmd->add_option("--gamma", opts.gamma, "coefficient gamma (nonzero)");
  cmd->add_option("--p", opts.p, "reduced coefficient p = beta/gamma");
  cmd->add_option("--q", opts.q, "reduced coefficient q = alpha/gamma");
}

void add_output_flags(CLI::App* cmd, padovan::cli::Options& opts) {
  cmd->add_option("--format", opts.format, "output format: csv or json");
  cmd->add_option("--precision", opts.precision, "decimal digits for rendered values");
  cmd->add_option("--out", opts.out_path, "write the report to this file instead of stdout");
}

void add_scalar_initial_flags(CLI::App* cmd, padovan::cli::Options& opts) {
  cmd->add_option("--x-1", opts.x_m1, "initial value x_{-1} (rational text)");
  cmd->add_option("--x0", opts.x_0, "initial value x_0 (rational text)");
}

void add_system_flags(CLI::App* cmd, padovan::cli::Options& opts) {
  cmd->add_option("--y-1", opts.y_m1, "initial value y_{-1} (system mode)");
  cmd->add_option("--y0", opts.y_0, "initial value y_0 (system mode)");
  cmd->add_flag("--system", opts.system, "analyze the symmetric two-equation system");
}

}  // namespace

int main(int argc, char** argv) {
  padovan::cli::Options opts;

  CLI::App app{
      "Generalized Padovan sequences and the difference equation "
      "x_{n+1} = (p*x_{n-1} + q)/(x_n*x_{n-1})"};
  app.require_subcommand(1);

  CLI::App* sequence = app.add_subcommand(
      "sequence", "print S_n with decimal approximations (optionally a Binet reconstruction)");
  add_param_flags(sequence, opts);
  add_output_flags(sequence, opts);
  sequence->add_option("--n", opts.n, "highest index to print (rows run 0..n)");
  sequence->add_flag("--binet", opts.binet, "add Binet reconstruction columns");

  CLI::App* iterate =
      app.add_subcommand("iterate", "run the recurrence and print the orbit table");
  add_param_flags(iterate, opts);
  add_output_flags(iterate, opts);
  add_scalar_initial_flags(iterate, opts);
  add_system_flags(iterate, opts);
  iterate->add_option("--steps", opts.steps, "number of new terms to compute (default 100)");
  iterate->add_option("--backend", opts.backend, "arithmetic backend: exact or float");
  iterate->add_flag("--strict", opts.strict, "exit 3 when the orbit hits a forbidden value");

  CLI::App* compare = app.add_subcommand(
      "compare", "closed form vs direct iteration, with per-step deviations");
  add_param_flags(compare, opts);
  add_output_flags(compare, opts);
  add_scalar_initial_flags(compare, opts);
  add_system_flags(compare, opts);
  compare->add_option("--steps", opts.steps, "number of terms to compare (default 100)");
  compare->add_option("--backend", opts.backend, "arithmetic backend: exact or float");
  compare->add_flag("--strict", opts.strict, "exit 3 when the initials are forbidden");

  CLI::App* stability =
      app.add_subcommand("stability", "equilibrium, linearization and stability verdicts (JSON)");
  add_param_flags(stability, opts);
  add_output_flags(stability, opts);
  stability->add_flag("--system", opts.system,
                      "include the system equilibrium and its residual checks");

  CLI::App* forbidden = app.add_subcommand(
      "forbidden", "scan the denominator families for zeros up to a horizon");
  add_param_flags(forbidden, opts);
  add_output_flags(forbidden, opts);
  add_scalar_initial_flags(forbidden, opts);
  add_system_flags(forbidden, opts);
  forbidden->add_option("--horizon", opts.horizon, "largest index scanned (default 1000)");
  forbidden->add_flag("--strict", opts.strict, "exit 3 when the scan finds a zero");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "random-initials convergence experiment around the equilibrium (JSON)");
  add_param_flags(sweep, opts);
  add_output_flags(sweep, opts);
  sweep->add_option("--trials", opts.trials, "number of random trials (default 500)");
  sweep->add_option("--steps", opts.steps, "iterations per trial (default 300)");
  sweep->add_option("--tol", opts.tolerance, "convergence tolerance on the final error");
  sweep->add_option("--seed", opts.seed, "base seed for the per-trial generators");
  sweep->add_option("--lo", opts.lo, "lower end of the initial-value range (exclusive)");
  sweep->add_option("--hi", opts.hi, "upper end of the initial-value range (inclusive)");
  sweep->add_option("--threads", opts.threads, "worker threads (never changes the report)");
  sweep->add_flag("--system", opts.system, "sweep the two-equation system");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? padovan::cli::kExitOk : padovan::cli::kExitConfig;
  }

  opts.command = app.get_subcommands().front()->get_name();
  return padovan::cli::run(opts, std::cout, std::cerr);
}
