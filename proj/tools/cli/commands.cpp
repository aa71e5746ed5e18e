#include "cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "avstab/averaging.hpp"
#include "avstab/error.hpp"
#include "avstab/quadrature.hpp"
#include "avstab/stability.hpp"
#include "avstab/sweep.hpp"

namespace avstab::cli {

namespace {

constexpr int kDefaultPlotPoints = 201;
constexpr int kDefaultSweepGrid = 12;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::degree_too_high:
    case ErrorCode::plateau_detected:
    case ErrorCode::non_generic:
      return kExitDegenerate;
    default:
      return kExitInvalidInput;
  }
}

Json error_object(std::string_view code, const std::string& message, int exit_code) {
  return Json{{"error", Json{{"code", std::string(code)}, {"message", message}, {"exit_code", exit_code}}}};
}

Json header(const char* command) { return Json{{"version", kVersionTag}, {"command", command}}; }

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

}  // namespace

ProblemSpec parse_problem_spec(const Json& doc, Command command) {
  if (!doc.is_object()) throw Error(ErrorCode::parse_error, "problem spec must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "function" && key != "density" && key != "alpha" && key != "alphas" && key != "interval") {
      throw Error(ErrorCode::parse_error, "unexpected top-level key '" + key + "'");
    }
  }
  if (!doc.contains("function")) throw Error(ErrorCode::parse_error, "missing key 'function'");
  if (!doc.contains("density")) throw Error(ErrorCode::parse_error, "missing key 'density'");
  if (command == Command::average && !doc.contains("alpha")) {
    throw Error(ErrorCode::parse_error, "average requires 'alpha'");
  }

  auto function = function_from_json(doc.at("function"));
  std::optional<Interval> interval;
  if (doc.contains("interval")) {
    interval = interval_from_json(doc.at("interval"), "interval");
    function = function.restricted(*interval);
  }
  ProblemSpec spec{std::move(function), density_from_json(doc.at("density")), std::nullopt, std::nullopt, interval};
  if (doc.contains("alpha")) spec.alpha = rat_from_json(doc.at("alpha"), "alpha");
  if (doc.contains("alphas")) spec.alphas = rats_from_json(doc.at("alphas"), "alphas");
  return spec;
}

std::string plot_table(const PiecewisePoly& f, const PiecewisePoly& fa, int points) {
  if (points < 2) throw Error(ErrorCode::invalid_argument, "plot grid needs at least 2 points");
  Rat lo;
  Rat hi;
  if (fa.domain()) {
    lo = fa.domain()->lo;
    hi = fa.domain()->hi;
  } else {
    lo = fa.breakpoints().empty() ? Rat(0) : fa.breakpoints().front();
    hi = fa.breakpoints().empty() ? Rat(0) : fa.breakpoints().back();
    const Rat pad = max(Rat(1), (hi - lo) / Rat(4));
    lo -= pad;
    hi += pad;
  }
  std::ostringstream os;
  os << "x,f,f_alpha\n";
  for (int k = 0; k < points; ++k) {
    const Rat x = lo + (hi - lo) * Rat(k) / Rat(points - 1);
    os << format_double(x.to_double()) << ',' << format_double(pw_eval(f, x).to_double()) << ','
       << format_double(pw_eval(fa, x).to_double()) << '\n';
  }
  return os.str();
}

CommandResult cmd_average(const ProblemSpec& spec, const Options& opt) {
  if (!spec.alpha) throw Error(ErrorCode::parse_error, "average requires 'alpha'");
  const auto res = average(spec.function, spec.density, *spec.alpha);
  Json report = header("average");
  report["alpha"] = rat_to_json(res.alpha);
  report["source_breakpoints"] = rats_to_json(res.source_breakpoints);
  report["density_knots"] = rats_to_json(res.density_knots);
  report["f_alpha"] = function_to_json(res.f_alpha);
  if (opt.plot_path) {
    std::ofstream plot(*opt.plot_path);
    if (!plot) throw Error(ErrorCode::invalid_argument, "cannot write " + *opt.plot_path);
    plot << plot_table(spec.function, res.f_alpha, opt.grid > 0 ? opt.grid : kDefaultPlotPoints);
  }
  return {std::move(report), kExitOk};
}

CommandResult cmd_stability(const ProblemSpec& spec, const Options&) {
  const auto rep = global_stability_report(spec.function, spec.density);
  Json report = header("stability");
  Json extrema = Json::array();
  for (std::size_t i = 0; i < rep.verdicts.size(); ++i) {
    Json e = to_json(rep.verdicts[i]);
    e["value"] = rat_to_json(rep.extrema.extrema[i].value);
    e["kind"] = std::string(to_string(rep.extrema.extrema[i].kind));
    extrema.push_back(std::move(e));
  }
  report["extrema"] = std::move(extrema);
  report["left_limit"] = to_json(rep.extrema.left_limit);
  report["right_limit"] = to_json(rep.extrema.right_limit);
  report["genericity"] = Json{{"distinct_values", rep.genericity.distinct_values},
                              {"differ_from_limits", rep.genericity.differ_from_limits}};
  report["overall"] = rep.overall_stable ? "stable" : "unstable";
  return {std::move(report), kExitOk};
}

CommandResult cmd_sweep(const ProblemSpec& spec, const Options& opt) {
  std::vector<Rat> alphas;
  if (opt.alphas) {
    alphas = *opt.alphas;
  } else if (spec.alphas) {
    alphas = *spec.alphas;
  } else {
    alphas = default_alpha_grid(spec.function, opt.grid > 0 ? opt.grid : kDefaultSweepGrid);
  }
  const auto rep = run_sweep(spec.function, spec.density, std::move(alphas), opt.jobs);

  Json report = header("sweep");
  report["alpha_max"] = rat_to_json(rep.alpha_max);
  report["alphas"] = rats_to_json(rep.alphas);
  report["source"] = to_json(rep.source);
  Json predicted = Json::array();
  for (const auto& v : rep.predicted.verdicts) predicted.push_back(to_json(v));
  report["predicted"] = std::move(predicted);
  report["predicted_overall"] = rep.predicted.overall_stable ? "stable" : "unstable";

  Json per_alpha = Json::array();
  for (const auto& o : rep.per_alpha) {
    Json windows = Json::array();
    for (const auto& w : o.germ_windows) windows.push_back(to_json(w));
    per_alpha.push_back(Json{{"alpha", rat_to_json(o.alpha)},
                             {"fingerprint", o.fingerprint ? to_json(*o.fingerprint) : Json(nullptr)},
                             {"plateau", o.plateau ? to_json(*o.plateau) : Json(nullptr)},
                             {"failure", o.failure.empty() ? Json(nullptr) : Json(o.failure)},
                             {"equivalent_to_source", o.equivalent_to_source},
                             {"witness_plateaus_observed", o.witness_plateaus_observed},
                             {"germ_windows", std::move(windows)}});
  }
  report["per_alpha"] = std::move(per_alpha);
  report["agreement"] = rep.agreement;
  return {std::move(report), kExitOk};
}

CommandResult cmd_oracle(const ProblemSpec& spec, const Options& opt) {
  if (opt.samples < 1) throw Error(ErrorCode::invalid_argument, "--samples must be at least 1");
  if (!std::isfinite(opt.tol) || opt.tol < 0) throw Error(ErrorCode::invalid_argument, "--tol must be a finite value >= 0");

  const auto& f = spec.function;
  Rat cap = spec.alpha ? *spec.alpha : Rat(1);
  if (f.domain()) cap = min(cap, f.domain()->width() / Rat(2));

  std::mt19937_64 rng(opt.seed);
  double worst = -1.0;
  Json worst_case;
  for (std::size_t s = 0; s < opt.samples; ++s) {
    const Rat alpha = cap * Rat(static_cast<long>(1 + rng() % 999), 1000);
    Rat lo;
    Rat hi;
    if (f.domain()) {
      lo = f.domain()->lo + alpha;
      hi = f.domain()->hi - alpha;
    } else {
      lo = (f.breakpoints().empty() ? Rat(0) : f.breakpoints().front()) - Rat(2);
      hi = (f.breakpoints().empty() ? Rat(0) : f.breakpoints().back()) + Rat(2);
    }
    const Rat x = lo + (hi - lo) * Rat(static_cast<long>(rng() % 10001), 10000);

    const double exact = pw_eval(average(f, spec.density, alpha).f_alpha, x).to_double();
    const double oracle = quadrature_oracle(f, spec.density, alpha, x);
    const double deviation = std::abs(exact - oracle) / (1.0 + std::abs(exact));
    if (deviation > worst) {
      worst = deviation;
      worst_case = Json{{"x", rat_to_json(x)}, {"alpha", rat_to_json(alpha)}, {"exact", exact}, {"oracle", oracle}};
    }
  }

  // Strict comparison: a zero tolerance can never be met in floating point.
  const bool pass = worst < opt.tol;
  Json report = header("oracle-check");
  report["samples"] = opt.samples;
  report["seed"] = opt.seed;
  report["tol"] = opt.tol;
  report["max_deviation"] = worst;
  report["worst"] = std::move(worst_case);
  report["pass"] = pass;
  return {std::move(report), pass ? kExitOk : kExitOracleMismatch};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact alpha-averaging of piecewise polynomials and stability of their extrema", "avstab"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  std::string plot;
  std::string alphas;
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-i,--input", input, "Problem specification (JSON)")->required();
    sub->add_option("-o,--output", output, "Report destination (default: stdout)");
  };
  auto* average_cmd = app.add_subcommand("average", "Exact f_alpha for the given alpha");
  add_common(average_cmd);
  average_cmd->add_option("--plot", plot, "Write an x,f,f_alpha table");
  average_cmd->add_option("--grid", opt.grid, "Plot resolution")->check(CLI::PositiveNumber);

  auto* stability_cmd = app.add_subcommand("stability", "Per-extremum stability verdicts");
  add_common(stability_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "Empirical alpha sweep against the predicted verdicts");
  add_common(sweep_cmd);
  sweep_cmd->add_option("--alphas", alphas, "Comma separated alphas (overrides the spec)");
  sweep_cmd->add_option("--grid", opt.grid, "Size of the default geometric grid")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* oracle_cmd = app.add_subcommand("oracle-check", "Compare exact values with quadrature");
  add_common(oracle_cmd);
  oracle_cmd->add_option("--samples", opt.samples, "Number of (x, alpha) samples");
  oracle_cmd->add_option("--seed", opt.seed, "Sampling seed");
  oracle_cmd->add_option("--tol", opt.tol, "Relative tolerance");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    const int rc = app.exit(e, msg, err);
    out << msg.str();
    return rc == 0 ? kExitOk : kExitInvalidInput;
  }

  auto emit = [&](const Json& doc) {
    const std::string text = doc.dump(2) + "\n";
    if (output.empty()) {
      out << text;
    } else {
      std::ofstream file(output);
      file << text;
    }
  };

  Command command = Command::average;
  if (stability_cmd->parsed()) command = Command::stability;
  if (sweep_cmd->parsed()) command = Command::sweep;
  if (oracle_cmd->parsed()) command = Command::oracle_check;

  try {
    std::ifstream in(input);
    if (!in) throw Error(ErrorCode::invalid_argument, "cannot read " + input);
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::parse_error, std::string("malformed JSON: ") + e.what());
    }
    const auto spec = parse_problem_spec(doc, command);
    if (!plot.empty()) opt.plot_path = plot;
    if (!alphas.empty()) opt.alphas = rats_from_list(alphas);

    CommandResult result;
    switch (command) {
      case Command::average: result = cmd_average(spec, opt); break;
      case Command::stability: result = cmd_stability(spec, opt); break;
      case Command::sweep: result = cmd_sweep(spec, opt); break;
      case Command::oracle_check: result = cmd_oracle(spec, opt); break;
    }
    emit(result.report);
    return result.exit_code;
  } catch (const Error& e) {
    const int rc = exit_code_for(e.code());
    emit(error_object(to_string(e.code()), e.what(), rc));
    return rc;
  } catch (const std::exception& e) {
    emit(error_object("InternalError", e.what(), kExitDegenerate));
    return kExitDegenerate;
  }
}

}  // namespace avstab::cli
