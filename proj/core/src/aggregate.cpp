#include "greyrel/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "greyrel/error.hpp"

namespace greyrel {

namespace {

// Borda and tie-break sums are compared on a 1e-9 lattice so that
// reassociated floating-point sums of equal rank multisets still tie.
long long quantize(double v) { return std::llround(v * 1e9); }

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::Topsis: return "topsis";
    case Method::GreyApproach: return "grey-approach";
    case Method::Membership: return "membership";
    case Method::MaxEntropy: return "max-entropy";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  for (Method m : kAllMethods) {
    if (to_string(m) == text) return m;
  }
  throw ValidationError(fmt::format("unknown method '{}'", text));
}

std::vector<int> scores_to_ranks(std::span<const double> scores) {
  for (double s : scores) {
    if (!std::isfinite(s)) throw ValidationError("cannot rank a non-finite score");
  }
  std::vector<int> ranks(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    int better = 0;
    for (double other : scores) better += other > scores[i] ? 1 : 0;
    ranks[i] = better + 1;
  }
  return ranks;
}

MethodScores make_method_scores(Method method, std::vector<double> scores) {
  MethodScores out;
  out.method = method;
  out.ranks = scores_to_ranks(scores);
  out.scores = std::move(scores);
  return out;
}

std::string_view to_string(TieBreak tie_break) {
  return tie_break == TieBreak::NormalizedScoreSum ? "normalized-score-sum" : "plan-index";
}

TieBreak parse_tie_break(std::string_view text) {
  if (text == "normalized-score-sum") return TieBreak::NormalizedScoreSum;
  if (text == "plan-index") return TieBreak::PlanIndex;
  throw ValidationError(
      fmt::format("unknown tie-break rule '{}' (expected normalized-score-sum or plan-index)", text));
}

void BordaConfig::validate() const {
  double sum = 0.0;
  for (double w : method_weights) {
    if (!std::isfinite(w) || w < 0.0) throw ValidationError(fmt::format("Borda weight {} must be nonnegative", w));
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw ValidationError(fmt::format("Borda weights sum to {}, expected 1", sum));
}

RankResult weighted_borda(std::span<const MethodScores> per_method, const BordaConfig& config) {
  config.validate();
  if (per_method.size() != 4) {
    throw ValidationError(fmt::format("weighted Borda expects 4 methods, got {}", per_method.size()));
  }
  const std::size_t n = per_method.front().ranks.size();
  for (const auto& ms : per_method) {
    if (ms.ranks.size() != n || ms.scores.size() != n) {
      throw ValidationError("weighted Borda: score and rank vectors differ in length");
    }
  }

  RankResult result;
  std::copy(per_method.begin(), per_method.end(), result.per_method.begin());
  result.borda_scores.assign(n, 0.0);
  result.tie_break_scores.assign(n, 0.0);

  for (std::size_t m = 0; m < 4; ++m) {
    const double w = config.method_weights[m];
    const auto& ms = per_method[m];
    const auto [lo_it, hi_it] = std::minmax_element(ms.scores.begin(), ms.scores.end());
    const double range = n == 0 ? 0.0 : *hi_it - *lo_it;
    for (std::size_t i = 0; i < n; ++i) {
      result.borda_scores[i] += w * static_cast<double>(static_cast<int>(n) - ms.ranks[i]);
      if (range > 0.0) result.tie_break_scores[i] += w * (ms.scores[i] - *lo_it) / range;
    }
  }

  const bool by_score = config.tie_break == TieBreak::NormalizedScoreSum;
  auto key = [&](std::size_t i) {
    return std::pair{quantize(result.borda_scores[i]), by_score ? quantize(result.tie_break_scores[i]) : 0LL};
  };

  result.order.resize(n);
  std::iota(result.order.begin(), result.order.end(), std::size_t{0});
  std::stable_sort(result.order.begin(), result.order.end(),
                   [&](std::size_t a, std::size_t b) { return key(a) > key(b); });

  result.final_ranks.assign(n, 0);
  for (std::size_t pos = 0; pos < n; ++pos) {
    const std::size_t plan = result.order[pos];
    if (by_score && pos > 0 && key(result.order[pos - 1]) == key(plan)) {
      result.final_ranks[plan] = result.final_ranks[result.order[pos - 1]];
    } else {
      result.final_ranks[plan] = static_cast<int>(pos) + 1;
    }
  }
  return result;
}

}  // namespace greyrel
