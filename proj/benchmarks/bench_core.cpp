#include <benchmark/benchmark.h>

#include "udt/construction.hpp"
#include "udt/density.hpp"
#include "udt/witness.hpp"

namespace {

void BM_AddressValue(benchmark::State& state) {
  std::vector<std::int64_t> ix(static_cast<std::size_t>(state.range(0)), 3);
  udt::Address u(ix);
  for (auto _ : state) benchmark::DoNotOptimize(udt::address_value(u));
}
BENCHMARK(BM_AddressValue)->Arg(2)->Arg(4)->Arg(8);

void BM_Enumerate(benchmark::State& state) {
  udt::Rational eps = udt::pow2(-state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(udt::enumerate_with_tails(eps).removals.size());
}
BENCHMARK(BM_Enumerate)->Arg(20)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_Truncate(benchmark::State& state) {
  udt::Rational eps = udt::pow2(-state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(udt::truncate(eps).upper().size());
}
BENCHMARK(BM_Truncate)->Arg(20)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_MeasureIn(benchmark::State& state) {
  udt::TruncatedSet t = udt::truncate(udt::pow2(-state.range(0)));
  udt::Interval k = udt::k_interval(udt::Address({1, 1}));
  for (auto _ : state) benchmark::DoNotOptimize(udt::measure_in(t, k).lo);
}
BENCHMARK(BM_MeasureIn)->Arg(20)->Arg(30)->Arg(40);

void BM_MaxOneSidedDensity(benchmark::State& state) {
  udt::TruncatedSet t = udt::truncate(udt::pow2(-state.range(0)));
  udt::Rational x = udt::a_value(udt::Address({1, 1}));
  udt::Rational r = udt::r_value(udt::Address({1, 1})) / 2;
  for (auto _ : state) benchmark::DoNotOptimize(udt::max_one_sided_density(t, x, r).hi);
}
BENCHMARK(BM_MaxOneSidedDensity)->Arg(20)->Arg(30)->Arg(40);

void BM_InfDensityOverRange(benchmark::State& state) {
  udt::TruncatedSet t = udt::truncate(udt::pow2(-30));
  udt::Rational x = udt::a_value(udt::Address({1}));
  udt::Rational r1 = udt::r_value(udt::Address({1}));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        udt::inf_density_over_range(t, x, r1 / 64, r1 / 2, udt::DensityMode::Max).lo);
}
BENCHMARK(BM_InfDensityOverRange);

void BM_NonUdtWitness(benchmark::State& state) {
  udt::SequenceSpec seq = udt::SequenceSpec::geometric(
      udt::Rational(1, 10), udt::Rational(1, 10), udt::Rational(1), udt::Rational(1, 4));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        udt::find_non_udt_witness(seq, 2, udt::pow2(-30)).levels.size());
}
BENCHMARK(BM_NonUdtWitness)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
