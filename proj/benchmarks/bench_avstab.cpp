#include <benchmark/benchmark.h>

#include <vector>

#include "avstab/averaging.hpp"
#include "avstab/quadrature.hpp"
#include "avstab/stability.hpp"
#include "avstab/sweep.hpp"

namespace {

using avstab::Poly;
using avstab::PiecewisePoly;
using avstab::Rat;
using avstab::StepDensity;

// Alternating slopes +-(1 + k mod 3) with kinks at 0, 1, ..., kinks - 1.
PiecewisePoly zigzag(int kinks) {
  std::vector<Rat> bps;
  std::vector<Poly> pieces;
  Rat slope(-1);
  Rat intercept(0);
  pieces.push_back(Poly::linear(intercept, slope));
  for (int k = 0; k < kinks; ++k) {
    const Rat next = (k % 2 == 0 ? Rat(1) : Rat(-1)) * Rat(1 + (k % 3));
    intercept += (slope - next) * Rat(k);
    slope = next;
    bps.emplace_back(k);
    pieces.push_back(Poly::linear(intercept, slope));
  }
  return PiecewisePoly(std::move(bps), std::move(pieces));
}

// Density with `pieces` equal-width steps and alternating weights 1, 3.
StepDensity stepped(int pieces) {
  std::vector<Rat> knots;
  std::vector<Rat> weights;
  for (int i = 0; i <= pieces; ++i) knots.push_back(Rat(-1) + Rat(2 * i, pieces));
  for (int i = 0; i < pieces; ++i) weights.emplace_back(i % 2 == 0 ? 1 : 3);
  return StepDensity::from_weights(std::move(knots), std::move(weights));
}

void BM_Average(benchmark::State& state) {
  const auto f = zigzag(static_cast<int>(state.range(0)));
  const auto d = stepped(static_cast<int>(state.range(1)));
  const Rat alpha(1, 5);
  for (auto _ : state) benchmark::DoNotOptimize(avstab::average(f, d, alpha));
  state.SetComplexityN(state.range(0) * state.range(1));
}
BENCHMARK(BM_Average)->ArgsProduct({{4, 16, 64}, {1, 4, 16}})->Complexity();

void BM_QuadratureOracle(benchmark::State& state) {
  const auto f = zigzag(16);
  const auto d = stepped(static_cast<int>(state.range(0)));
  const Rat alpha(1, 5);
  const Rat x(37, 10);
  for (auto _ : state) benchmark::DoNotOptimize(avstab::quadrature_oracle(f, d, alpha, x));
}
BENCHMARK(BM_QuadratureOracle)->Arg(1)->Arg(4)->Arg(16);

void BM_StabilityReport(benchmark::State& state) {
  const auto f = zigzag(static_cast<int>(state.range(0)));
  const auto d = stepped(8);
  for (auto _ : state) benchmark::DoNotOptimize(avstab::global_stability_report(f, d));
}
BENCHMARK(BM_StabilityReport)->Arg(4)->Arg(16)->Arg(64);

void BM_Sweep(benchmark::State& state) {
  const auto f = zigzag(8);
  const auto d = stepped(4);
  const auto grid = avstab::default_alpha_grid(f);
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(avstab::run_sweep(f, d, grid, jobs));
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
