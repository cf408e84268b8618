#include "greyrel/pipeline.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace greyrel {

namespace {

template <typename Fn>
auto run_stage(const char* stage, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ValidationError& e) {
    throw ValidationError(fmt::format("[{}] {}", stage, e.what()));
  } catch (const DomainError& e) {
    throw DomainError(fmt::format("[{}] {}", stage, e.what()));
  } catch (const DegenerateProblemError& e) {
    throw DegenerateProblemError(fmt::format("[{}] {}", stage, e.what()));
  }
}

std::string mark(const DecisionProblem& p, const char* key, std::string value) {
  if (!p.explicit_settings.contains(key)) value += " (default)";
  return value;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> describe_settings(const DecisionProblem& p) {
  std::vector<std::pair<std::string, std::string>> s;
  s.emplace_back("rho", mark(p, "rho", fmt::format("{}", p.params.rho)));
  s.emplace_back("theta_plus", mark(p, "theta_plus", fmt::format("{}", p.params.theta_plus)));
  s.emplace_back("theta_minus", mark(p, "theta_minus", fmt::format("{}", p.params.theta_minus)));
  s.emplace_back("borda_weights", mark(p, "borda_weights", fmt::format("{}", fmt::join(p.borda.method_weights, ","))));
  s.emplace_back("tie_break", mark(p, "tie_break", std::string(to_string(p.borda.tie_break))));

  std::vector<std::string> aliases;
  for (const auto& [from, to] : p.aliases) aliases.push_back(fmt::format("{}={}", from, to));
  s.emplace_back("linguistic_aliases",
                 mark(p, "linguistic_aliases", aliases.empty() ? "none" : fmt::format("{}", fmt::join(aliases, "; "))));

  std::vector<std::string> directions;
  for (const auto& a : p.attributes) {
    directions.push_back(fmt::format("{}:{}:{}", a.id, to_string(a.kind), to_string(a.direction)));
  }
  s.emplace_back("attributes", fmt::format("{}", fmt::join(directions, " ")));
  s.emplace_back("subjective_weights",
                 p.subjective_source == SubjectiveSource::ExpertVectors
                     ? fmt::format("envelope of {} expert vectors", p.expert_vectors.size())
                     : std::string("explicit intervals"));

  s.emplace_back("rule.cost_normalization", "reciprocal sum normalization, bounds swapped so lo <= hi");
  s.emplace_back("rule.fuzzy_cost", "linguistic cost cells mirrored on the index scale, then benefit rule");
  s.emplace_back("rule.entropy_input", "normalized matrix, one weighting per tuple component");
  s.emplace_back("rule.final_weight_quotient", "outer bounds: lo = a.lo*b.lo / sum(a.hi*b.hi), hi = a.hi*b.hi / sum(a.lo*b.lo)");
  s.emplace_back("rule.incidence_extrema", "global min/max over all plans and attributes, rho*d_max in denominator");
  s.emplace_back("rule.max_entropy_weights", "softmax of (sum G+, sum (1 - G-))");
  s.emplace_back("rule.method_ranking", "competition ranking, rank 1 = largest score");
  return s;
}

Report run_pipeline(const DecisionProblem& problem) {
  run_stage("validate", [&] {
    problem.validate();
    return 0;
  });

  Report r;
  r.problem = problem;
  r.settings = describe_settings(problem);

  r.normalized = run_stage("normalize", [&] { return normalize_matrix(problem.matrix, problem.attributes); });
  r.weights = run_stage("weights", [&] { return compute_weights(r.normalized, problem.alpha); });
  r.warnings = r.weights.warnings;

  r.weighted = run_stage("weighting", [&] {
    const WeightedMatrix z = blend_preference(r.normalized, problem.preferences);
    return apply_weights(z, r.weights.w_final);
  });
  r.evaluation = run_stage("evaluate", [&] { return evaluate_all(r.weighted, problem.params); });
  r.ranking = run_stage("aggregate", [&] { return weighted_borda(r.evaluation.methods, problem.borda); });
  return r;
}

}  // namespace greyrel
