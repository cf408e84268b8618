#pragma once

#include <span>
#include <vector>

#include "greyrel/grey_core.hpp"
#include "greyrel/method_scores.hpp"
#include "greyrel/normalize.hpp"

namespace greyrel {

/// n x m matrix of ordered, nonnegative 4-tuples (Z after preference
/// blending, Y after weighting).
using WeightedMatrix = ValueMatrix;

struct IdealVectors {
  std::vector<GeneralizedValue> positive;
  std::vector<GeneralizedValue> negative;
};

/// rho in (0,1); theta_plus, theta_minus in (0,1] summing to one, except
/// the pure-positive setting theta_plus = 1, theta_minus = 0.
struct MethodParams {
  double rho = 0.5;
  double theta_plus = 0.5;
  double theta_minus = 0.5;

  /// Throws ValidationError when a constraint is violated.
  void validate() const;
};

/// z_ij = (q_i + x_ij) / 2 componentwise. Throws ValidationError when `q`
/// does not have one entry per plan.
WeightedMatrix blend_preference(const NormalizedMatrix& x, std::span<const GeneralizedValue> q);

/// y_ij = (w.lo z1, w.lo z2, w.hi z3, w.hi z4).
WeightedMatrix apply_weights(const WeightedMatrix& z, std::span<const IntervalGreyNumber> w);

/// Column-wise componentwise max (positive) and min (negative).
IdealVectors ideal_vectors(const WeightedMatrix& y);

/// Relative approach degree C_i = D-_i / (D+_i + D-_i) with D the
/// Euclidean distance over all 4m components. Rows with D+ + D- = 0 (only
/// possible when y+ = y-) score 0.5.
MethodScores topsis_scores(const WeightedMatrix& y, const IdealVectors& ideals);

/// Grey incidence coefficients against one ideal vector:
/// r_ij = (d_min + rho d_max) / (d_ij + rho d_max), with d_min, d_max taken
/// over the whole grid. All ones when d_max = 0.
Grid<double> incidence_coefficients(const WeightedMatrix& y, std::span<const GeneralizedValue> ideal, double rho);

/// Row means of the coefficient grid.
std::vector<double> incidence_degrees(const Grid<double>& coefficients);

/// C'_i = G+ theta+ / (G+ theta+ + G- theta-), or G+ when theta+ = 1,
/// theta- = 0.
MethodScores approach_with_preference(std::span<const double> g_plus, std::span<const double> g_minus,
                                      const MethodParams& params);

/// u_i = G+^2 / (G+^2 + G-^2). Throws DomainError when both degrees are
/// zero.
MethodScores membership_degrees(std::span<const double> g_plus, std::span<const double> g_minus);

struct EntropyPair {
  double beta1;
  double beta2;
};

/// Maximizer of sum_i [b1 G+_i + b2 (1 - G-_i)] - b1 ln b1 - b2 ln b2 on
/// the simplex b1 + b2 = 1: the softmax of (sum G+, sum (1 - G-)).
EntropyPair max_entropy_weights(std::span<const double> g_plus, std::span<const double> g_minus);

/// C''_i = b1 G+_i + b2 (1 - G-_i).
MethodScores comprehensive_incidence(std::span<const double> g_plus, std::span<const double> g_minus,
                                     EntropyPair betas);

/// Everything the four methods produce for one weighted matrix.
struct Evaluation {
  IdealVectors ideals;
  Grid<double> coefficients_plus;
  Grid<double> coefficients_minus;
  std::vector<double> g_plus;
  std::vector<double> g_minus;
  EntropyPair betas{0.5, 0.5};
  std::array<MethodScores, 4> methods;  // indexed in kAllMethods order
};

Evaluation evaluate_all(const WeightedMatrix& y, const MethodParams& params);

}  // namespace greyrel
