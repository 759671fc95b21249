#include <benchmark/benchmark.h>

#include "qlogic/correlations.hpp"
#include "qlogic/geometry.hpp"
#include "qlogic/states.hpp"
#include "qlogic_cli/fixtures.hpp"

using namespace qlogic;

namespace {

Logic fx(const char* name) { return cli::fixture_logic(cli::fixture(name)); }

void BM_EnumerateStates(benchmark::State& state, const char* name) {
  const Logic l = fx(name);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_states(l));
}
BENCHMARK_CAPTURE(BM_EnumerateStates, pentagon, "pentagon");
BENCHMARK_CAPTURE(BM_EnumerateStates, cats_cradle, "cats-cradle");
BENCHMARK_CAPTURE(BM_EnumerateStates, cabello18, "cabello18");

void BM_HorizontalPasting(benchmark::State& state) {
  const Logic l = horizontal_pasting(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_states(l));
}
BENCHMARK(BM_HorizontalPasting)->Arg(4)->Arg(6)->Arg(8);

void BM_StateHull(benchmark::State& state, const char* name) {
  const Logic l = fx(name);
  const VPolytope v = state_polytope(l, enumerate_states(l));
  for (auto _ : state) benchmark::DoNotOptimize(hull(v));
}
BENCHMARK_CAPTURE(BM_StateHull, pentagon, "pentagon")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_StateHull, cats_cradle, "cats-cradle")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_StateHull, triangle4, "triangle4")->Unit(benchmark::kMillisecond);

void BM_FramePolytope(benchmark::State& state) {
  const HPolytope h = frame_function_polytope(fx("cats-cradle"));
  for (auto _ : state) benchmark::DoNotOptimize(vertex_enumerate(h));
}
BENCHMARK(BM_FramePolytope)->Unit(benchmark::kMillisecond);

void BM_CorrelationHullE(benchmark::State& state) {
  const VPolytope v = correlation_polytope(fx("cabello18"), Coordinates::E);
  for (auto _ : state) benchmark::DoNotOptimize(hull(v));
}
BENCHMARK(BM_CorrelationHullE)->Unit(benchmark::kMillisecond);

void BM_Scan(benchmark::State& state) {
  const Logic l = fx("cabello18");
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan(l, Objective::sum_E, threads));
}
BENCHMARK(BM_Scan)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
