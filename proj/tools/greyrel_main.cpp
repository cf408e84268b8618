// greyrel: rank plans of a mixed-type multi-attribute decision problem.
//
//   greyrel solve <file> [--format text|csv|json-report] [--rho R]
//                        [--theta-plus T] [--borda-weights w1,w2,w3,w4]
//                        [--tie-break normalized-score-sum|plan-index]
//                        [--out PATH]
//
// Exit codes: 0 success, 1 I/O or usage failure, 2 invalid input,
// 3 degenerate problem.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "greyrel/error.hpp"
#include "greyrel/pipeline.hpp"
#include "greyrel/problem.hpp"
#include "greyrel/report_io.hpp"

namespace {

constexpr int kExitIo = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitDegenerate = 3;

struct SolveOptions {
  std::string file;
  std::string format = "text";
  std::optional<double> rho;
  std::optional<double> theta_plus;
  std::vector<double> borda_weights;
  std::optional<std::string> tie_break;
  std::optional<std::string> out;
};

void apply_overrides(greyrel::DecisionProblem& problem, const SolveOptions& opts) {
  if (opts.rho) {
    problem.params.rho = *opts.rho;
    problem.explicit_settings.insert("rho");
  }
  if (opts.theta_plus) {
    problem.params.theta_plus = *opts.theta_plus;
    problem.params.theta_minus = 1.0 - *opts.theta_plus;
    problem.explicit_settings.insert("theta_plus");
    problem.explicit_settings.insert("theta_minus");
  }
  if (!opts.borda_weights.empty()) {
    if (opts.borda_weights.size() != 4) {
      throw greyrel::ValidationError("--borda-weights expects exactly 4 comma-separated values");
    }
    std::copy(opts.borda_weights.begin(), opts.borda_weights.end(), problem.borda.method_weights.begin());
    problem.explicit_settings.insert("borda_weights");
  }
  if (opts.tie_break) {
    problem.borda.tie_break = greyrel::parse_tie_break(*opts.tie_break);
    problem.explicit_settings.insert("tie_break");
  }
  problem.validate();
}

int solve(const SolveOptions& opts) {
  try {
    const greyrel::ReportFormat format = greyrel::parse_report_format(opts.format);
    greyrel::DecisionProblem problem = greyrel::parse_problem(opts.file);
    apply_overrides(problem, opts);
    const greyrel::Report report = greyrel::run_pipeline(problem);
    if (opts.out) {
      greyrel::write_report(report, format, *opts.out);
    } else {
      std::cout << greyrel::emit_report(report, format);
      std::cout.flush();
    }
    return 0;
  } catch (const greyrel::DegenerateProblemError& e) {
    std::cerr << "greyrel: degenerate problem: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const greyrel::ValidationError& e) {
    std::cerr << "greyrel: invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const greyrel::DomainError& e) {
    std::cerr << "greyrel: invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "greyrel: " << e.what() << "\n";
    return kExitIo;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grey-relation ranking of mixed-type multi-attribute decision problems"};
  app.require_subcommand(1);

  SolveOptions opts;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Run the full pipeline on a problem file and print a report");
  solve_cmd->add_option("file", opts.file, "Problem file (JSON, comments allowed) or a json-report")
      ->required();
  solve_cmd->add_option("--format", opts.format, "Report format")
      ->check(CLI::IsMember({"text", "csv", "json-report", "json"}))
      ->capture_default_str();
  solve_cmd->add_option("--rho", opts.rho, "Distinguishing coefficient in (0,1)");
  solve_cmd->add_option("--theta-plus", opts.theta_plus, "Preference for the positive ideal; theta-minus = 1 - T");
  solve_cmd->add_option("--borda-weights", opts.borda_weights,
                        "Method weights for topsis,grey-approach,membership,max-entropy")
      ->delimiter(',')
      ->expected(4);
  solve_cmd->add_option("--tie-break", opts.tie_break, "Borda tie-break rule")
      ->check(CLI::IsMember({"normalized-score-sum", "plan-index"}));
  solve_cmd->add_option("--out", opts.out, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }
  return solve(opts);
}
