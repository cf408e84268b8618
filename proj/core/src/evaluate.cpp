#include "greyrel/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace greyrel {

namespace {

void require_same_length(std::span<const double> a, std::span<const double> b, const char* what) {
  if (a.size() != b.size()) {
    throw ValidationError(fmt::format("{}: {} positive degrees but {} negative degrees", what, a.size(), b.size()));
  }
}

double row_distance(const WeightedMatrix& y, std::size_t i, std::span<const GeneralizedValue> ideal) {
  double sum = 0.0;
  for (std::size_t j = 0; j < y.cols(); ++j) {
    const double d = distance(y(i, j), ideal[j]);
    sum += d * d;
  }
  return std::sqrt(sum);
}

}  // namespace

void MethodParams::validate() const {
  if (!(rho > 0.0 && rho < 1.0)) throw ValidationError(fmt::format("rho = {} must lie in (0, 1)", rho));
  const bool pure_positive = theta_plus == 1.0 && theta_minus == 0.0;
  if (pure_positive) return;
  if (!(theta_plus > 0.0 && theta_plus <= 1.0) || !(theta_minus > 0.0 && theta_minus <= 1.0)) {
    throw ValidationError(
        fmt::format("preference coefficients ({}, {}) must lie in (0, 1]", theta_plus, theta_minus));
  }
  if (std::abs(theta_plus + theta_minus - 1.0) > 1e-9) {
    throw ValidationError(
        fmt::format("preference coefficients ({}, {}) must sum to 1", theta_plus, theta_minus));
  }
}

WeightedMatrix blend_preference(const NormalizedMatrix& x, std::span<const GeneralizedValue> q) {
  if (q.size() != x.rows()) {
    throw ValidationError(fmt::format("{} preference values for {} plans", q.size(), x.rows()));
  }
  WeightedMatrix z(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      std::array<double, 4> c{};
      for (std::size_t k = 0; k < 4; ++k) c[k] = 0.5 * (q[i][k] + x(i, j)[k]);
      z(i, j) = GeneralizedValue(c);
    }
  }
  return z;
}

WeightedMatrix apply_weights(const WeightedMatrix& z, std::span<const IntervalGreyNumber> w) {
  if (w.size() != z.cols()) {
    throw ValidationError(fmt::format("{} weights for {} attributes", w.size(), z.cols()));
  }
  WeightedMatrix y(z.rows(), z.cols());
  for (std::size_t i = 0; i < z.rows(); ++i) {
    for (std::size_t j = 0; j < z.cols(); ++j) {
      const GeneralizedValue& v = z(i, j);
      y(i, j) = GeneralizedValue(w[j].lo * v[0], w[j].lo * v[1], w[j].hi * v[2], w[j].hi * v[3]);
    }
  }
  return y;
}

IdealVectors ideal_vectors(const WeightedMatrix& y) {
  if (y.rows() == 0) throw ValidationError("ideal vectors: no plans");
  IdealVectors ideals;
  ideals.positive.reserve(y.cols());
  ideals.negative.reserve(y.cols());
  for (std::size_t j = 0; j < y.cols(); ++j) {
    std::array<double, 4> hi = y(0, j).components();
    std::array<double, 4> lo = hi;
    for (std::size_t i = 1; i < y.rows(); ++i) {
      for (std::size_t k = 0; k < 4; ++k) {
        hi[k] = std::max(hi[k], y(i, j)[k]);
        lo[k] = std::min(lo[k], y(i, j)[k]);
      }
    }
    // Componentwise extrema of ascending tuples are ascending.
    ideals.positive.emplace_back(hi);
    ideals.negative.emplace_back(lo);
  }
  return ideals;
}

MethodScores topsis_scores(const WeightedMatrix& y, const IdealVectors& ideals) {
  std::vector<double> scores(y.rows());
  for (std::size_t i = 0; i < y.rows(); ++i) {
    const double d_plus = row_distance(y, i, ideals.positive);
    const double d_minus = row_distance(y, i, ideals.negative);
    const double total = d_plus + d_minus;
    scores[i] = total > 0.0 ? d_minus / total : 0.5;
  }
  return make_method_scores(Method::Topsis, std::move(scores));
}

Grid<double> incidence_coefficients(const WeightedMatrix& y, std::span<const GeneralizedValue> ideal, double rho) {
  if (!(rho > 0.0 && rho < 1.0)) throw ValidationError(fmt::format("rho = {} must lie in (0, 1)", rho));
  if (ideal.size() != y.cols()) throw ValidationError("incidence coefficients: ideal vector length mismatch");

  Grid<double> d(y.rows(), y.cols());
  double d_min = std::numeric_limits<double>::infinity();
  double d_max = 0.0;
  for (std::size_t i = 0; i < y.rows(); ++i) {
    for (std::size_t j = 0; j < y.cols(); ++j) {
      d(i, j) = distance(y(i, j), ideal[j]);
      d_min = std::min(d_min, d(i, j));
      d_max = std::max(d_max, d(i, j));
    }
  }

  Grid<double> r(y.rows(), y.cols(), 1.0);
  if (!(d_max > 0.0)) return r;
  for (std::size_t i = 0; i < y.rows(); ++i) {
    for (std::size_t j = 0; j < y.cols(); ++j) r(i, j) = (d_min + rho * d_max) / (d(i, j) + rho * d_max);
  }
  return r;
}

std::vector<double> incidence_degrees(const Grid<double>& coefficients) {
  if (coefficients.cols() == 0) throw ValidationError("incidence degrees: no attributes");
  std::vector<double> g(coefficients.rows(), 0.0);
  for (std::size_t i = 0; i < coefficients.rows(); ++i) {
    for (double r : coefficients.row(i)) g[i] += r;
    g[i] /= static_cast<double>(coefficients.cols());
  }
  return g;
}

MethodScores approach_with_preference(std::span<const double> g_plus, std::span<const double> g_minus,
                                      const MethodParams& params) {
  require_same_length(g_plus, g_minus, "grey approach degree");
  params.validate();
  std::vector<double> scores(g_plus.size());
  const bool pure_positive = params.theta_plus == 1.0 && params.theta_minus == 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (pure_positive) {
      scores[i] = g_plus[i];
      continue;
    }
    const double pos = g_plus[i] * params.theta_plus;
    const double neg = g_minus[i] * params.theta_minus;
    scores[i] = pos + neg > 0.0 ? pos / (pos + neg) : 0.5;
  }
  return make_method_scores(Method::GreyApproach, std::move(scores));
}

MethodScores membership_degrees(std::span<const double> g_plus, std::span<const double> g_minus) {
  require_same_length(g_plus, g_minus, "membership degree");
  std::vector<double> scores(g_plus.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const double pos = g_plus[i] * g_plus[i];
    const double neg = g_minus[i] * g_minus[i];
    if (!(pos + neg > 0.0)) {
      throw DomainError(fmt::format("membership degree of plan {} is undefined: both incidence degrees are zero", i + 1));
    }
    scores[i] = pos / (pos + neg);
  }
  return make_method_scores(Method::Membership, std::move(scores));
}

EntropyPair max_entropy_weights(std::span<const double> g_plus, std::span<const double> g_minus) {
  require_same_length(g_plus, g_minus, "maximum-entropy weights");
  double c1 = 0.0;
  double c2 = 0.0;
  for (std::size_t i = 0; i < g_plus.size(); ++i) {
    c1 += g_plus[i];
    c2 += 1.0 - g_minus[i];
  }
  // Two-way softmax with the larger logit factored out.
  const double t = std::exp(-std::abs(c1 - c2));
  const double big = 1.0 / (1.0 + t);
  const double small = t / (1.0 + t);
  return c1 >= c2 ? EntropyPair{big, small} : EntropyPair{small, big};
}

MethodScores comprehensive_incidence(std::span<const double> g_plus, std::span<const double> g_minus,
                                     EntropyPair betas) {
  require_same_length(g_plus, g_minus, "comprehensive incidence degree");
  if (std::abs(betas.beta1 + betas.beta2 - 1.0) > 1e-9 || betas.beta1 < 0.0 || betas.beta2 < 0.0) {
    throw ValidationError(fmt::format("incidence weights ({}, {}) must be nonnegative and sum to 1", betas.beta1,
                                      betas.beta2));
  }
  std::vector<double> scores(g_plus.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    scores[i] = betas.beta1 * g_plus[i] + betas.beta2 * (1.0 - g_minus[i]);
  }
  return make_method_scores(Method::MaxEntropy, std::move(scores));
}

Evaluation evaluate_all(const WeightedMatrix& y, const MethodParams& params) {
  params.validate();
  Evaluation ev;
  ev.ideals = ideal_vectors(y);
  ev.coefficients_plus = incidence_coefficients(y, ev.ideals.positive, params.rho);
  ev.coefficients_minus = incidence_coefficients(y, ev.ideals.negative, params.rho);
  ev.g_plus = incidence_degrees(ev.coefficients_plus);
  ev.g_minus = incidence_degrees(ev.coefficients_minus);
  ev.betas = max_entropy_weights(ev.g_plus, ev.g_minus);

  ev.methods[0] = topsis_scores(y, ev.ideals);
  ev.methods[1] = approach_with_preference(ev.g_plus, ev.g_minus, params);
  ev.methods[2] = membership_degrees(ev.g_plus, ev.g_minus);
  ev.methods[3] = comprehensive_incidence(ev.g_plus, ev.g_minus, ev.betas);
  return ev;
}

}  // namespace greyrel
