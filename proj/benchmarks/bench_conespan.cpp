#include <benchmark/benchmark.h>

#include "conespan/analysis.hpp"
#include "conespan/generate.hpp"
#include "conespan/span_paths.hpp"

using namespace conespan;

static std::vector<Point> points(int n) {
  GenSpec spec;
  spec.n = n;
  spec.seed = 42;
  return gen_points(spec);
}

template <Family F>
static void BM_Build(benchmark::State& state) {
  const auto pts = points(static_cast<int>(state.range(0)));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto g = build_graph(F, pts, k);
    benchmark::DoNotOptimize(g.edges().data());
  }
}
BENCHMARK_TEMPLATE(BM_Build, Family::yao)->Args({500, 30})->Args({2000, 30});
BENCHMARK_TEMPLATE(BM_Build, Family::yao_yao)->Args({500, 30})->Args({2000, 30});
BENCHMARK_TEMPLATE(BM_Build, Family::overlapping_yao)->Args({500, 30})->Args({2000, 30});
BENCHMARK_TEMPLATE(BM_Build, Family::trapezoidal_yao)->Args({500, 30})->Args({2000, 30})
    ->Unit(benchmark::kMillisecond);

static void BM_Stretch(benchmark::State& state) {
  const auto g = build_oy(points(static_cast<int>(state.range(0))), 30);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stretch_factor(g).stretch);
  }
}
BENCHMARK(BM_Stretch)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);

static void BM_GreedyPath(benchmark::State& state) {
  const auto g = build_oy(points(500), 30);
  int u = 0;
  for (auto _ : state) {
    const int v = (u * 7 + 13) % g.size();
    if (v != u) benchmark::DoNotOptimize(oy_greedy_path(g, u, v).total_length);
    u = (u + 1) % g.size();
  }
}
BENCHMARK(BM_GreedyPath);

static void BM_ScaleToHit(benchmark::State& state) {
  const TrapezoidFrame f({0, 0}, Angle(0.3), false, theta(30));
  const auto pts = points(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(scale_to_hit(f, pts[i++ & 1023]).lambda);
  }
}
BENCHMARK(BM_ScaleToHit);

BENCHMARK_MAIN();
