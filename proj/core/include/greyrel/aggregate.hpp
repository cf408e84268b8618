#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "greyrel/method_scores.hpp"

namespace greyrel {

enum class TieBreak {
  /// Borda ties are broken by the weighted sum of min-max-normalized method
  /// scores; plans still level share a rank.
  NormalizedScoreSum,
  /// Borda ties are broken by plan order, giving a strict ranking.
  PlanIndex,
};

std::string_view to_string(TieBreak tie_break);
TieBreak parse_tie_break(std::string_view text);

struct BordaConfig {
  /// Weights of topsis, grey-approach, membership, max-entropy.
  std::array<double, 4> method_weights{0.25, 0.25, 0.25, 0.25};
  TieBreak tie_break = TieBreak::NormalizedScoreSum;

  /// Weights must be finite, nonnegative and sum to 1 within 1e-9.
  void validate() const;
};

struct RankResult {
  std::vector<int> final_ranks;
  std::vector<double> borda_scores;
  std::vector<double> tie_break_scores;
  std::vector<std::size_t> order;  // 0-based plan indices, best first
  std::array<MethodScores, 4> per_method;
};

/// borda_i = sum_m w_m (n - rank_{m,i}); plans are ordered by descending
/// borda score, then by the configured tie-break, then by plan index.
/// Throws ValidationError when the four vectors differ in length.
RankResult weighted_borda(std::span<const MethodScores> per_method, const BordaConfig& config);

}  // namespace greyrel
