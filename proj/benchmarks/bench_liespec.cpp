#include <benchmark/benchmark.h>

#include <liespec/exponents.hpp>
#include <liespec/root_system.hpp>
#include <liespec/spectrum.hpp>
#include <liespec/sum_of_squares.hpp>

using namespace liespec;

namespace {

void BM_BuildRootSystem(benchmark::State& state, FamilyLabel label, int rank) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_root_system({label, rank}));
  }
}
BENCHMARK_CAPTURE(BM_BuildRootSystem, a8, FamilyLabel::A, 8);
BENCHMARK_CAPTURE(BM_BuildRootSystem, e8, FamilyLabel::E8, 8);

void BM_EnumerateSpectrum(benchmark::State& state) {
  const RootSystem rs = build_root_system({FamilyLabel::F4, 4});
  EnumerationOptions opts;
  opts.with_dimensions = false;
  const long long r_max = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_spectrum(rs, r_max, opts));
  }
}
BENCHMARK(BM_EnumerateSpectrum)->Arg(500)->Arg(2000)->Arg(8000)->Unit(benchmark::kMillisecond);

void BM_WeylDimensions(benchmark::State& state) {
  const RootSystem rs = build_root_system({FamilyLabel::F4, 4});
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_spectrum(rs, 500));
  }
}
BENCHMARK(BM_WeylDimensions)->Unit(benchmark::kMillisecond);

void BM_CountTheta(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  const long long r_max = state.range(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_theta(s, r_max, CountVariant::AllIntegers));
  }
}
BENCHMARK(BM_CountTheta)->Args({4, 10000})->Args({6, 10000})->Args({9, 100000})
    ->Unit(benchmark::kMillisecond);

void BM_CountBrute(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  const long long r_max = state.range(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_brute(s, r_max, CountVariant::AllIntegers));
  }
}
BENCHMARK(BM_CountBrute)->Args({4, 2000})->Args({6, 2000})->Unit(benchmark::kMillisecond);

void BM_ProfileGrid(benchmark::State& state) {
  const RootSystem rs = build_root_system({FamilyLabel::E8, 8});
  const std::vector<Rat> p_grid = {Rat(2), frac(5, 2), Rat(3), Rat(4), Rat(10)};
  const std::vector<LebesgueExponent> q_grid = {Rat(2), Rat(3), sigma_breakpoint(rs.group_dim),
                                                Rat(10), LebesgueExponent::infinity()};
  for (auto _ : state) {
    benchmark::DoNotOptimize(profile_grid(rs, p_grid, q_grid));
  }
}
BENCHMARK(BM_ProfileGrid);

}  // namespace

BENCHMARK_MAIN();
