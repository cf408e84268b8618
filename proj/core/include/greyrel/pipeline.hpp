#pragma once

#include <string>
#include <utility>
#include <vector>

#include "greyrel/aggregate.hpp"
#include "greyrel/evaluate.hpp"
#include "greyrel/normalize.hpp"
#include "greyrel/problem.hpp"
#include "greyrel/weights.hpp"

namespace greyrel {

/// Everything computed for one problem, in pipeline order.
struct Report {
  DecisionProblem problem;
  NormalizedMatrix normalized;
  WeightBundle weights;
  WeightedMatrix weighted;  // Y
  Evaluation evaluation;
  RankResult ranking;
  /// (setting, value) pairs describing every parameter and rule in force;
  /// values of defaulted parameters carry a " (default)" suffix.
  std::vector<std::pair<std::string, std::string>> settings;
  std::vector<std::string> warnings;
};

/// Normalize -> weights -> blend/weight -> four methods -> Borda.
/// Errors keep their type and are prefixed with the failing stage name.
Report run_pipeline(const DecisionProblem& problem);

/// The settings echo for a problem.
std::vector<std::pair<std::string, std::string>> describe_settings(const DecisionProblem& problem);

}  // namespace greyrel
