#include <benchmark/benchmark.h>

#include "geocurv/classify.hpp"
#include "geocurv/manifest.hpp"

using namespace geocurv;

static const Model& wormhole_model() {
  static Model m = Model::preset("morris-thorne");
  return m;
}

static const CurvatureBundle& wormhole_bundle() {
  static CurvatureBundle b = wormhole_model().build();
  return b;
}

static void BM_BuildBundle(benchmark::State& state) {
  const Model& m = wormhole_model();
  for (auto _ : state) {
    CurvatureBundle b = m.build();
    benchmark::DoNotOptimize(b.kappa());
  }
}
BENCHMARK(BM_BuildBundle)->Unit(benchmark::kMillisecond);

static void BM_DotAction(benchmark::State& state) {
  const CurvatureBundle& b = wormhole_bundle();
  for (auto _ : state) {
    TensorField rr = dot_action(b.riemann(), b.riemann(), b.metric());
    benchmark::DoNotOptimize(rr.data().data());
  }
}
BENCHMARK(BM_DotAction)->Unit(benchmark::kMillisecond);

static void BM_Tachibana(benchmark::State& state) {
  const CurvatureBundle& b = wormhole_bundle();
  for (auto _ : state) {
    TensorField q = tachibana(b.ric(), b.riemann());
    benchmark::DoNotOptimize(q.data().data());
  }
}
BENCHMARK(BM_Tachibana)->Unit(benchmark::kMillisecond);

static void BM_IsZeroTrig(benchmark::State& state) {
  const CurvatureBundle& b = wormhole_bundle();
  const Chart& chart = b.chart();
  Expr s = parse("sin(X3)^2 + cos(X3)^2 - 1", chart) * b.riemann().at({1, 2, 1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(is_zero(s, chart));
}
BENCHMARK(BM_IsZeroTrig);

static void BM_RecurrenceSolve(benchmark::State& state) {
  const CurvatureBundle& b = wormhole_bundle();
  for (auto _ : state) {
    RecurrenceSolveResult r =
        solve_recurrence_form(b, b.weyl(), b.nabla_weyl());
    benchmark::DoNotOptimize(r.recurrent);
  }
}
BENCHMARK(BM_RecurrenceSolve)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
