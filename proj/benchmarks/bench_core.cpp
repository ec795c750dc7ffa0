#include <benchmark/benchmark.h>

#include "darcais/aberth.hpp"
#include "darcais/eta_apps.hpp"
#include "darcais/oracles.hpp"
#include "darcais/poly_sequence.hpp"
#include "darcais/sturm.hpp"

using namespace darcais;

static void BM_BuildSigmaId(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    PolySequence seq = build_sequence(ArithFn::sigma(), ArithFn::id(), n);
    benchmark::DoNotOptimize(seq.scaled_denominator(n));
  }
}
BENCHMARK(BM_BuildSigmaId)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_EvalTau(benchmark::State& state) {
  PolySequence seq = build_sequence(ArithFn::sigma(), ArithFn::id(), 100);
  for (auto _ : state) {
    Rat v = seq.eval(state.range(0), Rat(-24));
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_EvalTau)->Arg(20)->Arg(100);

static void BM_AllRoots(benchmark::State& state) {
  PolySequence seq = build_sequence(ArithFn::sigma(), ArithFn::id(), state.range(0));
  const RationalPoly& p = seq.poly(state.range(0));
  for (auto _ : state) {
    RootReport rep = all_roots(p);
    benchmark::DoNotOptimize(rep.min_re.lo);
  }
}
BENCHMARK(BM_AllRoots)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_SturmIsolate(benchmark::State& state) {
  PolySequence seq = build_sequence(ArithFn::sigma(), ArithFn::id(), state.range(0));
  const RationalPoly& p = seq.poly(state.range(0));
  for (auto _ : state) {
    auto ivs = isolate_real_roots(p);
    benchmark::DoNotOptimize(ivs.size());
  }
}
BENCHMARK(BM_SturmIsolate)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_MajorantEval(benchmark::State& state) {
  Majorant m = builtin_majorant("sigma", SeriesKind::G2, 12);
  Rat T(18289, 100000);
  for (auto _ : state) {
    Rat v = majorant_eval(m, T);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_MajorantEval);

static void BM_OptimizeKappa(benchmark::State& state) {
  Majorant m = builtin_majorant("sigma3", SeriesKind::G2, 12);
  for (auto _ : state) {
    KappaCertificate c = optimize_kappa(Variant::B, m);
    benchmark::DoNotOptimize(c.kappa);
  }
}
BENCHMARK(BM_OptimizeKappa)->Unit(benchmark::kMillisecond);

static void BM_BetaTable(benchmark::State& state) {
  for (auto _ : state) {
    CoeffTable t = e4_reciprocal_coeffs(state.range(0));
    benchmark::DoNotOptimize(t.values.back());
  }
}
BENCHMARK(BM_BetaTable)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_PartitionOracle(benchmark::State& state) {
  for (auto _ : state) {
    RationalPoly p = oracles::nekrasov_okounkov_poly(state.range(0));
    benchmark::DoNotOptimize(p.degree());
  }
}
BENCHMARK(BM_PartitionOracle)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
