#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "avstab/density.hpp"
#include "avstab/piecewise.hpp"
#include "avstab/rational.hpp"
#include "cli/json_io.hpp"

namespace avstab::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 2,
  kExitOracleMismatch = 3,
  kExitDegenerate = 4,
};

enum class Command { average, stability, sweep, oracle_check };

/// Parsed input document. The optional interval restricts the function
/// before any command runs.
struct ProblemSpec {
  PiecewisePoly function;
  StepDensity density;
  std::optional<Rat> alpha;
  std::optional<std::vector<Rat>> alphas;
  std::optional<Interval> interval;
};

/// Validates the document for the given command: unknown keys are rejected,
/// "function" and "density" are always required, "alpha" is required by
/// average.
ProblemSpec parse_problem_spec(const Json& doc, Command command);

struct Options {
  std::optional<std::string> plot_path;
  int grid = 0;  // 0: command default
  std::optional<std::vector<Rat>> alphas;
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  int jobs = 1;
};

/// Report document plus exit status for a command.
struct CommandResult {
  Json report;
  int exit_code = kExitOk;
};

inline constexpr const char* kVersionTag = "avstab 0.1.0";

CommandResult cmd_average(const ProblemSpec& spec, const Options& opt);
CommandResult cmd_stability(const ProblemSpec& spec, const Options& opt);
CommandResult cmd_sweep(const ProblemSpec& spec, const Options& opt);
CommandResult cmd_oracle(const ProblemSpec& spec, const Options& opt);

/// Delimited table "x,f,f_alpha" on a uniform grid of `points` samples.
std::string plot_table(const PiecewisePoly& f, const PiecewisePoly& fa, int points);

/// Full front end: argument parsing, dispatch, error mapping. Reports go to
/// the -o file or `out`; usage errors go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace avstab::cli
