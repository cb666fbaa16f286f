#include <benchmark/benchmark.h>

#include "qzeta/denominator.hpp"
#include "qzeta/linear_form.hpp"
#include "qzeta/numerics.hpp"
#include "qzeta/q_toolkit.hpp"
#include "qzeta/rat_func.hpp"

namespace {

using namespace qzeta;

void BM_RatFuncMultiply(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const RatFunc f(q_factorial(d), cyclotomic(d + 1));
  const RatFunc h(d_n(d), q_factorial(d + 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(f * h);
  }
}
BENCHMARK(BM_RatFuncMultiply)->Arg(4)->Arg(8)->Arg(16);

void BM_PartialFractionTable(benchmark::State& state) {
  const FormParams p{4, 1, static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(partial_fraction_table(p));
  }
}
BENCHMARK(BM_PartialFractionTable)->Arg(1)->Arg(2)->Arg(3);

void BM_BuildLinearForm(benchmark::State& state) {
  const FormParams p{4, 1, static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_linear_form(p));
  }
}
BENCHMARK(BM_BuildLinearForm)->Arg(1)->Arg(2);

void BM_LcmPolynomial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(d_n(n));
  }
}
BENCHMARK(BM_LcmPolynomial)->Arg(10)->Arg(30)->Arg(60);

void BM_ZetaQ(benchmark::State& state) {
  const QPoint q{BigRat(1, 2)};
  const long prec = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeta_q(3, q, prec));
  }
}
BENCHMARK(BM_ZetaQ)->Arg(128)->Arg(256);

void BM_WindowSumJet(benchmark::State& state) {
  const FormParams p{4, 1, static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(window_sum_jet(p, 1, 2));
  }
}
BENCHMARK(BM_WindowSumJet)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
