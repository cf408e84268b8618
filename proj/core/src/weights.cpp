#include "greyrel/weights.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

namespace greyrel {

namespace {
constexpr double kEntropyUnitTolerance = 1e-12;
}  // namespace

std::vector<IntervalGreyNumber> subjective_interval_weights(std::span<const std::vector<double>> expert_vectors) {
  if (expert_vectors.empty()) throw ValidationError("subjective weights: no expert weight vectors");
  const std::size_t m = expert_vectors.front().size();
  if (m == 0) throw ValidationError("subjective weights: expert vectors are empty");

  std::vector<IntervalGreyNumber> out;
  out.reserve(m);
  for (std::size_t l = 0; l < expert_vectors.size(); ++l) {
    if (expert_vectors[l].size() != m) {
      throw ValidationError(fmt::format("subjective weights: expert {} has {} entries, expected {}", l + 1,
                                        expert_vectors[l].size(), m));
    }
    for (std::size_t j = 0; j < m; ++j) {
      const double v = expert_vectors[l][j];
      if (!std::isfinite(v) || v < 0.0) {
        throw ValidationError(fmt::format("subjective weights: expert {} attribute {} has invalid weight {}", l + 1,
                                          j + 1, v));
      }
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    double lo = expert_vectors.front()[j];
    double hi = lo;
    for (const auto& vec : expert_vectors) {
      lo = std::min(lo, vec[j]);
      hi = std::max(hi, vec[j]);
    }
    out.emplace_back(lo, hi);
  }
  return out;
}

std::vector<double> column_deviations(const NormalizedMatrix& x) {
  std::vector<double> dev(x.cols(), 0.0);
  for (std::size_t j = 0; j < x.cols(); ++j) {
    for (std::size_t i = 0; i < x.rows(); ++i) {
      for (std::size_t k = 0; k < x.rows(); ++k) dev[j] += distance(x(i, j), x(k, j));
    }
  }
  return dev;
}

std::vector<double> optimization_weights_unit(const NormalizedMatrix& x) {
  std::vector<double> dev = column_deviations(x);
  const double norm = std::sqrt(std::inner_product(dev.begin(), dev.end(), dev.begin(), 0.0));
  if (!(norm > 0.0)) throw DegenerateProblemError("optimization weights: every pairwise deviation is zero");
  for (double& d : dev) d /= norm;
  return dev;
}

std::vector<double> optimization_weights(const NormalizedMatrix& x) {
  std::vector<double> dev = column_deviations(x);
  const double total = std::accumulate(dev.begin(), dev.end(), 0.0);
  if (!(total > 0.0)) throw DegenerateProblemError("optimization weights: every pairwise deviation is zero");
  for (double& d : dev) d /= total;
  return dev;
}

EntropyWeights entropy_weights_detailed(const NormalizedMatrix& x, std::size_t component) {
  if (component > 3) throw ValidationError(fmt::format("entropy weights: component {} outside 0..3", component));
  const std::size_t n = x.rows();
  const std::size_t m = x.cols();
  if (n == 0 || m == 0) throw DomainError("entropy weights: empty matrix");

  EntropyWeights result;
  result.entropy.assign(m, 1.0);
  std::vector<double> eta(m, 0.0);

  for (std::size_t j = 0; j < m; ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double v = x(i, j)[component];
      if (v < 0.0) {
        throw DomainError(fmt::format("entropy weights: negative entry at plan {}, attribute {}", i + 1, j + 1));
      }
      sum += v;
    }
    // An all-zero component or a single plan carries no information: E = 1.
    if (sum == 0.0 || n == 1) continue;

    double h = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double p = x(i, j)[component] / sum;
      if (p > 0.0) h -= p * std::log(p);
    }
    double e = std::clamp(h / std::log(static_cast<double>(n)), 0.0, 1.0);
    // Uniform columns land a few ulps under 1; treat them as exactly uninformative.
    if (1.0 - e < kEntropyUnitTolerance) e = 1.0;
    result.entropy[j] = e;
    eta[j] = 1.0 - e;
  }

  const double eta_sum = std::accumulate(eta.begin(), eta.end(), 0.0);
  if (!(eta_sum > 0.0)) {
    result.uniform_fallback = true;
    result.weights.assign(m, 1.0 / static_cast<double>(m));
    return result;
  }
  result.weights.resize(m);
  for (std::size_t j = 0; j < m; ++j) result.weights[j] = eta[j] / eta_sum;
  return result;
}

std::vector<double> entropy_weights(const NormalizedMatrix& x, std::size_t component) {
  return entropy_weights_detailed(x, component).weights;
}

std::vector<IntervalGreyNumber> comprehensive_objective(std::span<const double> beta_opt,
                                                        const std::array<std::vector<double>, 4>& beta_ent) {
  const std::size_t m = beta_opt.size();
  for (const auto& ent : beta_ent) {
    if (ent.size() != m) throw ValidationError("comprehensive objective weights: vector lengths differ");
  }
  std::vector<IntervalGreyNumber> out;
  out.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    double lo = beta_opt[j];
    double hi = beta_opt[j];
    for (const auto& ent : beta_ent) {
      lo = std::min(lo, ent[j]);
      hi = std::max(hi, ent[j]);
    }
    out.emplace_back(lo, hi);
  }
  return out;
}

std::vector<IntervalGreyNumber> final_weights(std::span<const IntervalGreyNumber> alpha,
                                              std::span<const IntervalGreyNumber> beta_interval) {
  if (alpha.size() != beta_interval.size()) {
    throw ValidationError(fmt::format("final weights: {} subjective weights for {} attributes", alpha.size(),
                                      beta_interval.size()));
  }
  if (alpha.empty()) throw ValidationError("final weights: no attributes");

  double lo_sum = 0.0;
  double hi_sum = 0.0;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    lo_sum += alpha[j].lo * beta_interval[j].lo;
    hi_sum += alpha[j].hi * beta_interval[j].hi;
  }
  if (!(lo_sum > 0.0) || !(hi_sum > 0.0)) {
    throw DegenerateProblemError(
        fmt::format("final weights: zero denominator (sum lo*lo = {}, sum hi*hi = {})", lo_sum, hi_sum));
  }

  std::vector<IntervalGreyNumber> out;
  out.reserve(alpha.size());
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    out.emplace_back(alpha[j].lo * beta_interval[j].lo / hi_sum, alpha[j].hi * beta_interval[j].hi / lo_sum);
  }
  return out;
}

WeightBundle compute_weights(const NormalizedMatrix& x, std::span<const IntervalGreyNumber> alpha) {
  WeightBundle bundle;
  bundle.alpha.assign(alpha.begin(), alpha.end());
  const std::size_t m = x.cols();

  try {
    bundle.beta_opt = optimization_weights(x);
  } catch (const DegenerateProblemError&) {
    bundle.beta_opt.assign(m, 1.0 / static_cast<double>(m));
    bundle.warnings.emplace_back("all plans coincide on every attribute; optimization weights set to 1/m");
  }

  for (std::size_t k = 0; k < 4; ++k) {
    EntropyWeights ent = entropy_weights_detailed(x, k);
    if (ent.uniform_fallback) {
      bundle.warnings.push_back(
          fmt::format("entropy weights (component {}): every attribute has entropy 1; set to 1/m", k + 1));
    }
    bundle.beta_ent[k] = std::move(ent.weights);
  }

  bundle.beta_interval = comprehensive_objective(bundle.beta_opt, bundle.beta_ent);
  bundle.w_final = final_weights(bundle.alpha, bundle.beta_interval);
  return bundle;
}

}  // namespace greyrel
