#include <benchmark/benchmark.h>

#include "rqit/distinguishability.hpp"
#include "rqit/entanglement.hpp"
#include "rqit/state_geometry.hpp"
#include "rqit/teleportation.hpp"
#include "rqit/unruh_channel.hpp"

using namespace rqit;

namespace {

void BM_LogNegativity(benchmark::State& state) {
  const AccelerationParam r(static_cast<double>(state.range(0)) / 100.0);
  const auto cut = FockCutoff::for_acceleration(r);
  const auto rho = entangled_state(OrthogonalityParam(0.2), r, cut);
  for (auto _ : state) benchmark::DoNotOptimize(log_negativity(rho));
  state.counters["levels"] = cut.levels();
}
BENCHMARK(BM_LogNegativity)->Arg(30)->Arg(60)->Arg(85)->Unit(benchmark::kMillisecond);

void BM_BuresAngle(benchmark::State& state) {
  const AccelerationParam r(0.85);
  const auto cut = FockCutoff::for_acceleration(r);
  for (auto _ : state) benchmark::DoNotOptimize(angle_sweep(r, {0.3}, cut));
}
BENCHMARK(BM_BuresAngle)->Unit(benchmark::kMillisecond);

void BM_ProtocolChannelBuild(benchmark::State& state) {
  const AccelerationParam r(0.6);
  const auto cut = FockCutoff::for_acceleration(r);
  for (auto _ : state) benchmark::DoNotOptimize(ProtocolChannel::build(OrthogonalityParam(0.3), r, cut));
}
BENCHMARK(BM_ProtocolChannelBuild)->Unit(benchmark::kMillisecond);

void BM_FidelityMonteCarlo(benchmark::State& state) {
  const AccelerationParam r(0.6);
  const auto channel = ProtocolChannel::build(OrthogonalityParam(0.3), r, FockCutoff::for_acceleration(r));
  for (auto _ : state) benchmark::DoNotOptimize(average_fidelity_mc(channel, state.range(0), 42));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FidelityMonteCarlo)->Arg(4096)->Arg(200000)->Unit(benchmark::kMillisecond);

void BM_FidelityExact(benchmark::State& state) {
  const AccelerationParam r(0.6);
  const auto channel = ProtocolChannel::build(OrthogonalityParam(0.3), r, FockCutoff::for_acceleration(r));
  for (auto _ : state) benchmark::DoNotOptimize(average_fidelity_exact(channel));
}
BENCHMARK(BM_FidelityExact);

void BM_NumericMetric(benchmark::State& state) {
  const AccelerationParam r(0.05);
  for (auto _ : state) benchmark::DoNotOptimize(numeric_metric({0.3, -0.2, 0.1}, r));
}
BENCHMARK(BM_NumericMetric)->Unit(benchmark::kMicrosecond);

void BM_ScalarCurvature(benchmark::State& state) {
  const AccelerationParam r(0.1);
  for (auto _ : state) benchmark::DoNotOptimize(scalar_curvature_numeric(0.5, 1.0, r));
}
BENCHMARK(BM_ScalarCurvature)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
