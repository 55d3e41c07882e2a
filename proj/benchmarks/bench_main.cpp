#include <benchmark/benchmark.h>

#include "powerpoly/indices.hpp"
#include "powerpoly/integer_reps.hpp"
#include "powerpoly/polytope.hpp"

using namespace powerpoly;

namespace {

const char* const kGames[] = {"[3;2,1,1]", "[5;3,2,2,1]", "[9;3,2,3,1,9]", "[14;6,3,2,4,5]"};

void BM_WeightVertices(benchmark::State& state) {
  const auto g = WeightedGame::parse(kGames[state.range(0)]);
  const auto p = build_weight_polytope(g);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_vertices(p));
  state.SetLabel(g.compact_str());
}
BENCHMARK(BM_WeightVertices)->DenseRange(0, 3);

void BM_AverageRepresentation(benchmark::State& state) {
  const auto g = WeightedGame::parse(kGames[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(average_representation_index(g));
  state.SetLabel(g.compact_str());
}
BENCHMARK(BM_AverageRepresentation)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_ShapleyShubik(benchmark::State& state) {
  const WeightedGame g(Rational(state.range(0) / 2 + 1), RatVector(static_cast<std::size_t>(state.range(0)), 1));
  for (auto _ : state) benchmark::DoNotOptimize(shapley_shubik(g));
}
BENCHMARK(BM_ShapleyShubik)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

void BM_IntegerGrid(benchmark::State& state) {
  const auto g = WeightedGame::parse("[3;2,1,1]");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_integer_feasible_weights(g, state.range(0)));
}
BENCHMARK(BM_IntegerGrid)->Arg(100)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_MonteCarlo(benchmark::State& state) {
  const auto p = build_representation_polytope(WeightedGame::parse("[14;6,3,2,4,5]"));
  for (auto _ : state) benchmark::DoNotOptimize(estimate_centroid_mc(p, 100000, 7));
}
BENCHMARK(BM_MonteCarlo)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
