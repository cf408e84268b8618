#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

namespace greyrel {

enum class Method { Topsis, GreyApproach, Membership, MaxEntropy };

inline constexpr std::array<Method, 4> kAllMethods = {Method::Topsis, Method::GreyApproach, Method::Membership,
                                                      Method::MaxEntropy};

/// "topsis", "grey-approach", "membership", "max-entropy".
std::string_view to_string(Method method);
Method parse_method(std::string_view text);

/// A score per plan (higher is better) and the induced competition ranks.
struct MethodScores {
  Method method = Method::Topsis;
  std::vector<double> scores;
  std::vector<int> ranks;
};

/// Competition ranking: rank 1 for the largest score, equal scores share
/// the smaller rank (1, 1, 3, ...). Throws ValidationError on non-finite
/// scores.
std::vector<int> scores_to_ranks(std::span<const double> scores);

/// Wraps `scores` and fills in the ranks.
MethodScores make_method_scores(Method method, std::vector<double> scores);

}  // namespace greyrel
