// Serial reference loops against the OpenMP kernels on spike scenes.
// Arg(0) = serial, Arg(1) = parallel.

#include "loclab/placements.hpp"

#include <benchmark/benchmark.h>

using namespace loclab;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

const SpikePolygon& spike(int m) {
  static const SpikePolygon six = buildSpikePolygon(SpikeParams{6, 40, 2, 1});
  static const SpikePolygon ten = buildSpikePolygon(SpikeParams{10, 40, 2, 1});
  static const SpikePolygon two = buildSpikePolygon(SpikeParams{2, 40, 2, 1});
  return m == 6 ? six : m == 10 ? ten : two;
}

void BM_EnumerateCells(benchmark::State& state) {
  const SpikePolygon& sp = spike(10);
  const auto guards = vertexPlacement(sp);
  const auto lines = collectLines(sp.polygon(), guards);
  for (auto _ : state) benchmark::DoNotOptimize(enumerateCells(lines, mode(state)));
  state.counters["lines"] = static_cast<double>(lines.size());
}

void BM_LabelScene(benchmark::State& state) {
  const SpikePolygon& sp = spike(6);
  const auto guards = generalPlacement(sp);
  for (auto _ : state) benchmark::DoNotOptimize(labelScene(sp.polygon(), guards, mode(state)));
}

void BM_VerifyVertexSolution(benchmark::State& state) {
  const SpikePolygon& sp = spike(10);
  for (auto _ : state) benchmark::DoNotOptimize(vertexSolution(sp, mode(state)));
}

void BM_MinVertexGuards(benchmark::State& state) {
  const SpikePolygon& sp = spike(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(minVertexGuards(sp.polygon(), 3, std::chrono::hours(1), mode(state)));
  }
}

}  // namespace

BENCHMARK(BM_EnumerateCells)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LabelScene)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyVertexSolution)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinVertexGuards)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
