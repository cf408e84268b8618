#include "greyrel/normalize.hpp"

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace greyrel {
namespace {

AttributeSpec spec(AttributeKind kind, Direction dir) { return {"A", kind, dir}; }

void expect_tuple_near(const GeneralizedValue& v, std::array<double, 4> expected, double tol = 1e-12) {
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(v[k], expected[k], tol) << "component " << k;
}

TEST(NormalizeColumn, BenefitIntervals) {
  const std::vector<RawCell> cells = {make_interval(1, 2), make_interval(3, 4)};
  const auto x = normalize_column(cells, spec(AttributeKind::Interval, Direction::Benefit));
  // lower / sum(upper) = 1/6, upper / sum(lower) = 2/4
  expect_tuple_near(x[0], {1.0 / 6, 1.0 / 6, 0.5, 0.5});
  expect_tuple_near(x[1], {3.0 / 6, 3.0 / 6, 1.0, 1.0});
}

TEST(NormalizeColumn, CostIntervalsSwapReciprocalBounds) {
  const std::vector<RawCell> cells = {make_interval(1, 2), make_interval(2, 4)};
  const auto x = normalize_column(cells, spec(AttributeKind::Interval, Direction::Cost));
  // lower = (1/2) / (1/1 + 1/2), upper = (1/1) / (1/2 + 1/4)
  expect_tuple_near(x[0], {1.0 / 3, 1.0 / 3, 4.0 / 3, 4.0 / 3});
  EXPECT_LE(x[1][0], x[1][3]);
}

TEST(NormalizeColumn, SinglePlanSelfNormalizes) {
  const std::vector<RawCell> cells = {make_interval(5, 5)};
  expect_tuple_near(normalize_column(cells, spec(AttributeKind::Interval, Direction::Benefit))[0], {1, 1, 1, 1});
  expect_tuple_near(normalize_column(cells, spec(AttributeKind::Interval, Direction::Cost))[0], {1, 1, 1, 1});
}

TEST(NormalizeColumn, RealsAreDegenerateIntervals) {
  const std::vector<RawCell> reals = {make_real(2), make_real(6)};
  const auto benefit = normalize_column(reals, spec(AttributeKind::Real, Direction::Benefit));
  expect_tuple_near(benefit[0], {0.25, 0.25, 0.25, 0.25});
  expect_tuple_near(benefit[1], {0.75, 0.75, 0.75, 0.75});
  const auto cost = normalize_column(reals, spec(AttributeKind::Real, Direction::Cost));
  // (1/2) / (1/2 + 1/6) = 0.75
  expect_tuple_near(cost[0], {0.75, 0.75, 0.75, 0.75});
  expect_tuple_near(cost[1], {0.25, 0.25, 0.25, 0.25});
}

TEST(NormalizeColumn, TrianglesDivideByMiddleSum) {
  const std::vector<RawCell> cells = {make_linguistic(LinguisticTerm::from_label("low")),
                                      make_linguistic(LinguisticTerm::from_label("high"))};
  const auto x = normalize_column(cells, spec(AttributeKind::Linguistic, Direction::Benefit));
  // middles 0.2 + 0.8 = 1
  expect_tuple_near(x[0], {0.1, 0.2, 0.2, 0.3});
  expect_tuple_near(x[1], {0.7, 0.8, 0.8, 0.9});
}

TEST(NormalizeColumn, LinguisticCostMirrorsIndex) {
  const std::vector<RawCell> cells = {make_linguistic(LinguisticTerm::from_label("low")),
                                      make_linguistic(LinguisticTerm::from_label("high"))};
  const auto x = normalize_column(cells, spec(AttributeKind::Linguistic, Direction::Cost));
  // low -> high, high -> low
  expect_tuple_near(x[0], {0.7, 0.8, 0.8, 0.9});
  expect_tuple_near(x[1], {0.1, 0.2, 0.2, 0.3});
}

TEST(NormalizeColumn, TrapezoidsUseInnerSums) {
  const auto term = [](const char* s) { return LinguisticTerm::from_label(s); };
  const std::vector<RawCell> cells = {make_uncertain_linguistic(term("low"), term("a little low")),
                                      make_uncertain_linguistic(term("a little low"), term("high"))};
  const auto x = normalize_column(cells, spec(AttributeKind::UncertainLinguistic, Direction::Benefit));
  // trapezoids (0.1,0.2,0.4,0.5) and (0.3,0.4,0.8,0.9); inner sums 0.6 and 1.2
  expect_tuple_near(x[0], {0.1 / 0.6, 0.2 / 0.6, 0.4 / 1.2, 0.5 / 1.2});
  expect_tuple_near(x[1], {0.3 / 0.6, 0.4 / 0.6, 0.8 / 1.2, 0.9 / 1.2});
}

TEST(NormalizeColumn, TrapezoidInversionIsResorted) {
  const auto term = [](const char* s) { return LinguisticTerm::from_label(s); };
  // Plan 1's second component 0.7/0.7 exceeds its third 0.7/1.5.
  const std::vector<RawCell> cells = {make_uncertain_linguistic(term("comparatively high"), term("comparatively high")),
                                      make_uncertain_linguistic(term("extremely low"), term("high"))};
  const auto x = normalize_column(cells, spec(AttributeKind::UncertainLinguistic, Direction::Benefit));
  for (const auto& v : x) EXPECT_TRUE(v[0] <= v[1] && v[1] <= v[2] && v[2] <= v[3]);
}

TEST(NormalizeColumn, Errors) {
  const std::vector<RawCell> empty;
  EXPECT_THROW(normalize_column(empty, spec(AttributeKind::Real, Direction::Benefit)), DomainError);

  const std::vector<RawCell> zero_cost = {make_real(0.0), make_real(3.0)};
  EXPECT_THROW(normalize_column(zero_cost, spec(AttributeKind::Real, Direction::Cost)), DomainError);

  const std::vector<RawCell> negative_cost = {make_interval(-1.0, 2.0), make_interval(1, 2)};
  EXPECT_THROW(normalize_column(negative_cost, spec(AttributeKind::Interval, Direction::Cost)), DomainError);

  const std::vector<RawCell> mixed = {make_real(1.0), make_interval(1, 2)};
  EXPECT_THROW(normalize_column(mixed, spec(AttributeKind::Real, Direction::Benefit)), ValidationError);

  const std::vector<RawCell> all_bottom = {make_linguistic(LinguisticTerm::from_index(-5))};
  EXPECT_THROW(normalize_column(all_bottom, spec(AttributeKind::Linguistic, Direction::Benefit)), DomainError);
}

TEST(NormalizeColumn, ScaleInvarianceUnderColumnScaling) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> scale(0.001, 1000.0);
  std::uniform_int_distribution<std::size_t> rows(1, 6);
  for (int trial = 0; trial < 1000; ++trial) {
    const AttributeKind kind = trial % 2 ? AttributeKind::Real : AttributeKind::Interval;
    const AttributeSpec s = spec(kind, testing::random_direction(rng));
    const std::size_t n = rows(rng);
    const double c = scale(rng);
    std::vector<RawCell> cells;
    std::vector<RawCell> scaled;
    for (std::size_t i = 0; i < n; ++i) {
      cells.push_back(testing::random_cell(rng, kind));
      if (const auto* r = std::get_if<RealCell>(&cells.back())) {
        scaled.push_back(make_real(r->value * c));
      } else {
        const auto& iv = std::get<IntervalCell>(cells.back());
        scaled.push_back(make_interval(iv.lo * c, iv.hi * c));
      }
    }
    const auto a = normalize_column(cells, s);
    const auto b = normalize_column(scaled, s);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(a[i][k], b[i][k], 1e-9);
    }
  }
}

TEST(NormalizeColumn, IdenticalCellsNormalizeIdentically) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const AttributeKind kind = testing::random_kind(rng);
    const AttributeSpec s = spec(kind, testing::random_direction(rng));
    const RawCell shared = testing::random_cell(rng, kind);
    const std::vector<RawCell> cells = {shared, testing::random_cell(rng, kind), shared};
    const auto x = normalize_column(cells, s);
    EXPECT_EQ(x[0], x[2]);
  }
}

TEST(NormalizeMatrix, ChecksShape) {
  Grid<RawCell> raw(2, 1, make_real(1.0));
  const std::vector<AttributeSpec> two = {spec(AttributeKind::Real, Direction::Benefit),
                                          spec(AttributeKind::Real, Direction::Benefit)};
  EXPECT_THROW(normalize_matrix(raw, two), ValidationError);
}

}  // namespace
}  // namespace greyrel
