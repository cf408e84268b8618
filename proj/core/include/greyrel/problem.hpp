#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "greyrel/aggregate.hpp"
#include "greyrel/evaluate.hpp"
#include "greyrel/grey_core.hpp"
#include "greyrel/normalize.hpp"

namespace greyrel {

inline constexpr int kProblemSchemaVersion = 1;

enum class SubjectiveSource { ExpertVectors, Intervals };

/// A fully validated decision problem.
struct DecisionProblem {
  std::vector<std::string> plans;
  std::vector<AttributeSpec> attributes;
  Grid<RawCell> matrix;  // plans x attributes

  SubjectiveSource subjective_source = SubjectiveSource::Intervals;
  std::vector<std::vector<double>> expert_vectors;  // empty unless ExpertVectors
  std::vector<IntervalGreyNumber> alpha;            // always populated

  std::vector<GeneralizedValue> preferences;  // one q_i per plan
  MethodParams params;
  BordaConfig borda;
  AliasMap aliases = LinguisticTerm::default_aliases();

  /// Names of the "params" keys (and "linguistic_aliases") given
  /// explicitly; everything else is a default.
  std::set<std::string> explicit_settings;

  std::size_t plan_count() const { return plans.size(); }
  std::size_t attribute_count() const { return attributes.size(); }

  /// Re-checks every cross-field invariant; throws ValidationError.
  void validate() const;
};

/// Builds a problem from a parsed document. Accepts either a problem
/// document or a JSON report (its embedded "problem" is used).
/// Throws ValidationError naming the offending location.
DecisionProblem problem_from_json(const nlohmann::json& doc);

/// Canonical problem document (schema 1). Labels are written in canonical
/// form, so aliases are not needed to read it back.
nlohmann::json problem_to_json(const DecisionProblem& problem);

/// Reads and validates a problem file. JSON with // and /* */ comments is
/// accepted. Throws ValidationError, or Error when the file is unreadable.
DecisionProblem parse_problem(const std::filesystem::path& path);

/// Same as parse_problem, from an in-memory document.
DecisionProblem parse_problem_text(const std::string& text);

/// Encodes a cell as its tagged-union JSON form.
nlohmann::json cell_to_json(const RawCell& cell);

}  // namespace greyrel
