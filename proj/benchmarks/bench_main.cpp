#include <benchmark/benchmark.h>

#include "ellambda/ellambda.hpp"

using namespace ellambda;

namespace {

void BM_LambdaOfTau(benchmark::State& state) {
  const PrecisionContext ctx(state.range(0));
  const UpperHalfPoint t = UpperHalfPoint::half_plus_sqrt(Real::from_int(11, ctx.working_bits()), ctx.working_bits());
  for (auto _ : state) benchmark::DoNotOptimize(lambda_of_tau(t, ctx));
}
BENCHMARK(BM_LambdaOfTau)->Arg(256)->Arg(512)->Arg(1024);

void BM_JOfTauLowNome(benchmark::State& state) {
  const PrecisionContext ctx(state.range(0));
  const long wb = ctx.working_bits();
  const UpperHalfPoint t(Complex(Real::from_double(0.3, wb), Real::from_double(0.6, wb)));
  for (auto _ : state) benchmark::DoNotOptimize(j_of_tau(t, ctx));
}
BENCHMARK(BM_JOfTauLowNome)->Arg(256)->Arg(512);

void BM_ClosedFormsEval(benchmark::State& state) {
  const PrecisionContext ctx(state.range(0));
  const ClosedFormExprs e = closed_form_exprs(AlgebraicExpr::integer(-884736));
  for (auto _ : state) benchmark::DoNotOptimize(eval_expr(e.a, ctx));
}
BENCHMARK(BM_ClosedFormsEval)->Arg(256)->Arg(512);

void BM_Cardano(benchmark::State& state) {
  const PrecisionContext ctx(state.range(0));
  const long wb = ctx.working_bits();
  const MonicCubic m{Complex::from_int(-7, wb), Complex::from_int(31, wb), Complex::from_int(-5, wb)};
  for (auto _ : state) benchmark::DoNotOptimize(cardano_roots(m, ctx));
}
BENCHMARK(BM_Cardano)->Arg(256)->Arg(512);

}  // namespace
BENCHMARK_MAIN();
