// Serial reference kernels against their OpenMP twins.

#include <benchmark/benchmark.h>

#include "twistform/currents.hpp"
#include "twistform/kernels.hpp"
#include "twistform/quadrature.hpp"
#include "twistform/sampling.hpp"

using namespace twistform;

namespace {

// A form whose pointwise evaluation costs about as much as the field
// families used by the dynamics checks.
SmoothForm bench_form() {
  Rng rng(3);
  const SpaceDescriptor space(4, 0);
  const FormType t{Parity::Odd, 3, space};
  return random_trig(rng, t, 4, 1.5) + random_polynomial(rng, t, 6, 3);
}

void BM_Quadrature(benchmark::State& state, kernels::Execution e) {
  const GaussLegendreRule rule(static_cast<int>(state.range(0)));
  const SmoothForm a = exterior_derivative(bench_form());
  const AffinePoint lo = AffinePoint::Zero(4);
  auto f = [&](std::span<const double> s) {
    AffinePoint x(4);
    for (int i = 0; i < 4; ++i) x[i] = lo[i] + s[i];
    return a(x)[0];
  };
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::tensor_quadrature(rule.nodes, rule.weights, 4, f, e));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0) * state.range(0) *
                          state.range(0));
}

void BM_Evaluate(benchmark::State& state, kernels::Execution e) {
  const SmoothForm a = bench_form();
  const auto n = static_cast<std::size_t>(state.range(0));
  auto f = [&](std::size_t i) {
    AffinePoint x(4);
    for (int k = 0; k < 4; ++k) x[k] = static_cast<double>((i >> (2 * k)) & 3) / 4.0;
    return exterior_derivative(a)(x).max_abs();
  };
  for (auto _ : state) benchmark::DoNotOptimize(kernels::evaluate(n, f, e));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CubeCurrent(benchmark::State& state, kernels::Execution e) {
  kernels::set_default_execution(e);
  const SpaceDescriptor space(4, 0);
  const Current k = Current::cube(space, CubeDomain{AffinePoint::Zero(4), AffinePoint::Ones(4)},
                                  static_cast<int>(state.range(0)));
  const SmoothForm a = exterior_derivative(bench_form());
  for (auto _ : state) benchmark::DoNotOptimize(integrate_current(a, k));
  kernels::set_default_execution(kernels::Execution::Parallel);
}

}  // namespace

BENCHMARK_CAPTURE(BM_Quadrature, serial, kernels::Execution::Serial)->Arg(4)->Arg(8)->Arg(12);
BENCHMARK_CAPTURE(BM_Quadrature, parallel, kernels::Execution::Parallel)->Arg(4)->Arg(8)->Arg(12);
BENCHMARK_CAPTURE(BM_Evaluate, serial, kernels::Execution::Serial)->Arg(256);
BENCHMARK_CAPTURE(BM_Evaluate, parallel, kernels::Execution::Parallel)->Arg(256);
BENCHMARK_CAPTURE(BM_CubeCurrent, serial, kernels::Execution::Serial)->Arg(8);
BENCHMARK_CAPTURE(BM_CubeCurrent, parallel, kernels::Execution::Parallel)->Arg(8);

BENCHMARK_MAIN();
