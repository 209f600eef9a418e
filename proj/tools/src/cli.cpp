#include "seqnorm_cli/cli.hpp"

#include <cmath>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "seqnorm/error.hpp"
#include "seqnorm/expression.hpp"
#include "seqnorm/norm.hpp"
#include "seqnorm/probes.hpp"
#include "seqnorm/report.hpp"
#include "seqnorm/suites.hpp"
#include "seqnorm/wire.hpp"

namespace seqnorm::cli {

namespace {

using nlohmann::ordered_json;

// Raised for bad user input that CLI11 cannot see (vector files, suite
// names, formats).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string text_number(double v) {
  if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
  return fmt::format("{:.7g}", v);
}

ordered_json json_number(double v) {
  if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
  return v;
}

FiniteVector read_vector(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '[') return vector_from_json(arg);
  std::ifstream in(arg);
  if (!in) throw UsageError("cannot read vector file '" + arg + "'");
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return vector_from_json(text);
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw UsageError("unsupported format '" + format + "'");
}

struct EvalArgs {
  std::string space;
  std::string vector;
  Index truncate = EvalOptions{}.tail_truncation;
  std::size_t terms = EvalOptions{}.series_terms;
  std::string format = "text";
};

int run_eval(const EvalArgs& a, std::ostream& out) {
  check_format(a.format, {"text", "json"});
  const NormDescriptor norm = parse_space(a.space);
  const FiniteVector v = read_vector(a.vector);
  EvalOptions options;
  options.tail_truncation = a.truncate;
  options.series_terms = a.terms;
  const IntervalValue value = enclose(norm, v, options);
  const bool exact = norm.is_exact();

  if (a.format == "json") {
    ordered_json j = {{"space", print_space(norm)}, {"vector", ordered_json::parse(vector_to_json(v))}};
    if (exact) {
      j["value"] = json_number(value.lo());
    } else {
      j["lo"] = json_number(value.lo());
      j["hi"] = json_number(value.hi());
      j["truncate"] = a.truncate;
      j["terms"] = a.terms;
    }
    out << j.dump(2) << "\n";
    return kOk;
  }
  if (exact) {
    out << text_number(value.lo()) << "\n";
  } else {
    out << "[" << text_number(value.lo()) << ", " << text_number(value.hi()) << "] (truncate " << a.truncate
        << ", terms " << a.terms << ")\n";
  }
  return kOk;
}

struct VerifyArgs {
  std::string suite;
  std::string space;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  double tolerance = Tolerance{}.rel;
  std::string format = "json";
  std::string scenario;
  Index truncate = EvalOptions{}.tail_truncation;
  std::string output;
};

int run_verify(const VerifyArgs& a, std::ostream& out) {
  check_format(a.format, {"json", "csv", "text"});
  if (!has_suite(a.suite)) throw UsageError("unknown suite '" + a.suite + "'");
  const NormDescriptor norm = parse_space(a.space);
  SuiteConfig config;
  config.samples = a.samples;
  config.seed = a.seed;
  config.tolerance.rel = a.tolerance;
  config.eval.tail_truncation = a.truncate;
  if (!a.scenario.empty()) {
    if (a.scenario != "random-convergent" && a.scenario != "c0-witness" && a.scenario != "decaying" &&
        a.scenario != "normalized-blocks") {
      throw UsageError("unknown scenario '" + a.scenario + "'");
    }
    config.scenario = a.scenario;
  }
  const ProbeReport report = run_suite(a.suite, norm, config);
  const std::string text = a.format == "json"  ? report_to_json(report)
                           : a.format == "csv" ? report_to_csv(report)
                                               : report_to_text(report);
  if (a.output.empty()) {
    out << text;
  } else {
    std::ofstream file(a.output, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + a.output + "'");
    file << text;
  }
  switch (report.verdict) {
    case Verdict::kPass:
      return kOk;
    case Verdict::kFail:
      return kVerifyFailed;
    case Verdict::kInconclusive:
      return kInconclusive;
  }
  return kInconclusive;
}

struct BoydArgs {
  std::string space;
  Index max_m = 16;
  Index dim = 8;
  std::size_t samples = 32;
  std::uint64_t seed = 1;
  std::string format = "text";
};

int run_boyd(const BoydArgs& a, std::ostream& out) {
  check_format(a.format, {"text", "json"});
  const NormDescriptor norm = parse_space(a.space);
  BoydOptions options;
  options.max_m = a.max_m;
  options.dim = a.dim;
  options.samples = a.samples;
  options.seed = a.seed;
  const BoydEstimate estimate = boyd_estimate(norm, options);
  if (a.format == "json") {
    ordered_json rows = ordered_json::array();
    for (const BoydRow& r : estimate.rows) {
      rows.push_back({{"m", r.m}, {"bound", json_number(r.bound)}, {"ratio", json_number(r.ratio)}});
    }
    const ordered_json j = {{"space", print_space(norm)}, {"rows", rows}, {"pEstimate", json_number(estimate.p_estimate)}};
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << fmt::format("{:>4}  {:>14}  {:>14}\n", "m", "bound", "ratio");
  for (const BoydRow& r : estimate.rows) {
    out << fmt::format("{:>4}  {:>14}  {:>14}\n", r.m, text_number(r.bound), text_number(r.ratio));
  }
  out << "pEstimate: " << text_number(estimate.p_estimate) << "\n";
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sequence-space norms, renormings and inequality probes", "seqnorm"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate a norm (value or certified enclosure)");
  eval_cmd->add_option("space", eval_args.space, "Space expression, e.g. \"sym2R(lp(2))\"")->required();
  eval_cmd->add_option("vector", eval_args.vector, "Vector JSON, inline or a file path")->required();
  eval_cmd->add_option("--truncate", eval_args.truncate, "Tail truncation index M")->check(CLI::PositiveNumber);
  eval_cmd->add_option("--terms", eval_args.terms, "Interpolation terms K for Y-spaces")->check(CLI::PositiveNumber);
  eval_cmd->add_option("--format", eval_args.format, "text or json");

  VerifyArgs verify_args;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run an inequality suite or probe");
  verify_cmd->add_option("suite", verify_args.suite, "Suite name")->required();
  verify_cmd->add_option("space", verify_args.space, "Space expression")->required();
  verify_cmd->add_option("--samples", verify_args.samples, "Number of samples");
  verify_cmd->add_option("--seed", verify_args.seed, "Random seed");
  verify_cmd->add_option("--tolerance", verify_args.tolerance, "Relative tolerance")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--format", verify_args.format, "json, csv or text");
  verify_cmd->add_option("--scenario", verify_args.scenario,
                         "two-r scenario: random-convergent, c0-witness, decaying, normalized-blocks");
  verify_cmd->add_option("--truncate", verify_args.truncate, "Tail truncation index M")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--output", verify_args.output, "Write the report to this file");

  BoydArgs boyd_args;
  CLI::App* boyd_cmd = app.add_subcommand("boyd", "Estimate the lower Boyd index");
  boyd_cmd->add_option("space", boyd_args.space, "Space expression")->required();
  boyd_cmd->add_option("--max-m", boyd_args.max_m, "Largest dilation m")->check(CLI::Range(2, 1 << 16));
  boyd_cmd->add_option("--dim", boyd_args.dim, "Candidate support length")->check(CLI::PositiveNumber);
  boyd_cmd->add_option("--samples", boyd_args.samples, "Random candidates per m");
  boyd_cmd->add_option("--seed", boyd_args.seed, "Random seed");
  boyd_cmd->add_option("--format", boyd_args.format, "text or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (eval_cmd->parsed()) return run_eval(eval_args, out);
    if (verify_cmd->parsed()) return run_verify(verify_args, out);
    return run_boyd(boyd_args, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << "; value in [" << text_number(e.lower()) << ", " << text_number(e.upper())
        << "]\n";
    return kEvaluation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kEvaluation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kEvaluation;
  }
}

}  // namespace seqnorm::cli
