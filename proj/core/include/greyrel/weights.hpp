#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "greyrel/grey_core.hpp"
#include "greyrel/normalize.hpp"

namespace greyrel {

/// Every weighting produced while building the final interval weights.
struct WeightBundle {
  std::vector<IntervalGreyNumber> alpha;          // subjective envelope
  std::vector<double> beta_opt;                   // max-deviation weights
  std::array<std::vector<double>, 4> beta_ent;    // entropy weights per tuple component
  std::vector<IntervalGreyNumber> beta_interval;  // objective envelope
  std::vector<IntervalGreyNumber> w_final;        // composite weights
  std::vector<std::string> warnings;              // fallbacks taken while computing the bundle
};

/// Coordinatewise [min, max] over L expert weight vectors of equal length.
/// Throws ValidationError for an empty set, ragged vectors or negative or
/// non-finite entries.
std::vector<IntervalGreyNumber> subjective_interval_weights(std::span<const std::vector<double>> expert_vectors);

/// Total pairwise deviation sum_{i,k} d(x_ij, x_kj) for every column j.
std::vector<double> column_deviations(const NormalizedMatrix& x);

/// Unit-norm maximizer of D(beta) = sum_j dev_j beta_j on the nonnegative
/// part of the unit sphere, i.e. dev / ||dev||.
/// Throws DegenerateProblemError when every deviation is zero.
std::vector<double> optimization_weights_unit(const NormalizedMatrix& x);

/// The unit-norm maximizer rescaled to sum to one: dev_j / sum(dev).
/// Throws DegenerateProblemError when every deviation is zero.
std::vector<double> optimization_weights(const NormalizedMatrix& x);

/// Result of an entropy weighting, with the fallback flag exposed.
struct EntropyWeights {
  std::vector<double> weights;
  std::vector<double> entropy;  // E_j
  bool uniform_fallback = false;
};

/// Entropy weights on tuple component `component` (0-based, 0..3).
///
/// p_ij = x_ij / sum_i x_ij, E_j = -(1/ln n) sum p ln p with 0 ln 0 = 0,
/// weights = (1 - E_j) / sum(1 - E). A column whose component is zero for
/// every plan gets E_j = 1. When every column has E_j = 1 (and always for
/// n = 1) the weights fall back to 1/m.
/// Throws DomainError for a negative entry.
EntropyWeights entropy_weights_detailed(const NormalizedMatrix& x, std::size_t component);
std::vector<double> entropy_weights(const NormalizedMatrix& x, std::size_t component);

/// Coordinatewise [min, max] over beta_opt and the four entropy vectors.
std::vector<IntervalGreyNumber> comprehensive_objective(std::span<const double> beta_opt,
                                                        const std::array<std::vector<double>, 4>& beta_ent);

/// Outer-bound interval quotient alpha*beta / sum(alpha*beta):
/// lo_j = alpha.lo_j beta.lo_j / sum_k alpha.hi_k beta.hi_k,
/// hi_j = alpha.hi_j beta.hi_j / sum_k alpha.lo_k beta.lo_k.
/// Throws DegenerateProblemError when either denominator is zero.
std::vector<IntervalGreyNumber> final_weights(std::span<const IntervalGreyNumber> alpha,
                                              std::span<const IntervalGreyNumber> beta_interval);

/// Runs every weighting on `x`. A zero-deviation matrix falls back to
/// uniform beta_opt and the fallback is recorded in `warnings`.
WeightBundle compute_weights(const NormalizedMatrix& x, std::span<const IntervalGreyNumber> alpha);

}  // namespace greyrel
