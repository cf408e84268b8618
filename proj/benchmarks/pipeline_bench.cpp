#include <random>
#include <string>

#include <benchmark/benchmark.h>

#include "greyrel/pipeline.hpp"
#include "greyrel/problem.hpp"
#include "greyrel/report_io.hpp"

namespace {

using namespace greyrel;

// n plans x m attributes, cycling through the four attribute kinds.
DecisionProblem synthetic(std::size_t n, std::size_t m) {
  std::mt19937_64 rng(n * 7919 + m);
  std::uniform_real_distribution<double> value(1.0, 1000.0);
  std::uniform_int_distribution<int> term(-4, 4);
  std::uniform_real_distribution<double> w(0.05, 0.5);

  DecisionProblem p;
  for (std::size_t i = 0; i < n; ++i) p.plans.push_back("P" + std::to_string(i));
  for (std::size_t j = 0; j < m; ++j) {
    const auto kind = static_cast<AttributeKind>(j % 4);
    p.attributes.push_back({"A" + std::to_string(j), kind, j % 3 == 0 ? Direction::Cost : Direction::Benefit});
    const double a = w(rng);
    p.alpha.emplace_back(a, a * 1.2);
  }
  p.matrix = Grid<RawCell>(n, m, make_real(1.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      switch (p.attributes[j].kind) {
        case AttributeKind::Real: p.matrix(i, j) = make_real(value(rng)); break;
        case AttributeKind::Interval: {
          const double lo = value(rng);
          p.matrix(i, j) = make_interval(lo, lo * 1.1);
          break;
        }
        case AttributeKind::Linguistic: p.matrix(i, j) = make_linguistic(LinguisticTerm::from_index(term(rng))); break;
        case AttributeKind::UncertainLinguistic: {
          const int a = term(rng);
          const int b = term(rng);
          p.matrix(i, j) = make_uncertain_linguistic(LinguisticTerm::from_index(std::min(a, b)),
                                                     LinguisticTerm::from_index(std::max(a, b)));
          break;
        }
      }
    }
    p.preferences.emplace_back(0.2, 0.3, 0.3, 0.4);
  }
  p.validate();
  return p;
}

void BM_BundledExample(benchmark::State& state) {
  const DecisionProblem p = parse_problem(GREYREL_DATA_DIR "/fighter_development.json");
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(p));
}
BENCHMARK(BM_BundledExample);

void BM_Pipeline(benchmark::State& state) {
  const DecisionProblem p = synthetic(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(p));
}
BENCHMARK(BM_Pipeline)->Args({10, 8})->Args({100, 8})->Args({1000, 8})->Args({100, 64});

void BM_JsonReport(benchmark::State& state) {
  const Report r = run_pipeline(parse_problem(GREYREL_DATA_DIR "/fighter_development.json"));
  for (auto _ : state) benchmark::DoNotOptimize(emit_report(r, ReportFormat::Json));
}
BENCHMARK(BM_JsonReport);

}  // namespace

BENCHMARK_MAIN();
