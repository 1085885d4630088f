#include <benchmark/benchmark.h>

#include "sobczyk/campaign.hpp"

using namespace sobczyk;

namespace {

OperatorR coordinate_instance(bool squared) {
  CoordinatePatterns p;
  p.units = CoefficientPattern::constant({}, 1);
  if (squared) p.omega = CoefficientPattern::constant({}, 1);
  return OperatorR::coordinate(LineDescriptor::ordinal(squared ? OrdinalCnf{1, 0, 0} : OrdinalCnf{0, 1, 0}), p);
}

void BM_DualNormFiniteBasis(benchmark::State& state) {
  InstanceRng rng(5);
  const auto line = LineDescriptor::finite(static_cast<std::uint64_t>(state.range(0)));
  const auto r = random_finite_basis(rng, line);
  const auto psi = r_star(r, random_balanced_measure(rng, line));
  for (auto _ : state) benchmark::DoNotOptimize(dual_norm(r, psi));
}
BENCHMARK(BM_DualNormFiniteBasis)->Arg(4)->Arg(8);

void BM_HierarchyOmegaSquared(benchmark::State& state) {
  const auto r = coordinate_instance(true);
  for (auto _ : state) benchmark::DoNotOptimize(compute_hierarchy(r, 1).stage());
}
BENCHMARK(BM_HierarchyOmegaSquared);

void BM_Decompose(benchmark::State& state) {
  const auto five = LineDescriptor::finite(5);
  const auto r = OperatorR::finite_basis(five, {TestFunction::initial_segment(five, PointId::finite(1)),
                                                TestFunction::initial_segment(five, PointId::finite(3))});
  SignedMeasure mu = SignedMeasure::dirac(five, PointId::finite(1));
  mu.add(PointId::finite(3), -1);
  const auto seq = MeasureSequence::scaled(mu, Rational(1, 2), static_cast<std::size_t>(state.range(0)));
  const DecompositionConfig cfg{Rational(1, 10), Rational(1, 2)};
  for (auto _ : state) benchmark::DoNotOptimize(decompose(r, seq, cfg).schedule.size());
}
BENCHMARK(BM_Decompose)->Arg(10)->Arg(40);

void BM_Suite(benchmark::State& state, const char* suite) {
  CampaignConfig cfg;
  cfg.trials = 20;
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(suite, cfg).rows.size());
}
BENCHMARK_CAPTURE(BM_Suite, flower, "flower")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, decomposition, "decomposition")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, pipeline, "pipeline")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
