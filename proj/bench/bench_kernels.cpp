// Serial vs OpenMP kernels. Arg = highest degree.

#include <benchmark/benchmark.h>

#include "bigm1/family.hpp"
#include "bigm1/kernels.hpp"
#include "bigm1/orthogonality.hpp"

namespace {

using namespace bigm1;

const FamilyParams kParams{make_rational(1, 2), make_rational(3, 2), make_rational(1, 4)};

template <bool Parallel>
void EvaluateOnNodes(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto polys = generate(kParams, n);
  const FoldedRule rule = folded_rule(kParams, n + 4);
  for (auto _ : state) {
    auto v = Parallel ? kernels::parallel::evaluate_on_nodes(polys, rule.x) : kernels::serial::evaluate_on_nodes(polys, rule.x);
    benchmark::DoNotOptimize(v);
  }
}

template <bool Parallel>
void GramMatrix(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto polys = generate(kParams, n);
  const FoldedRule rule = folded_rule(kParams, 4 * n);
  const auto v = kernels::serial::evaluate_on_nodes(polys, rule.x);
  for (auto _ : state) {
    auto g = Parallel ? kernels::parallel::gram_matrix(v, rule.plus, rule.minus)
                      : kernels::serial::gram_matrix(v, rule.plus, rule.minus);
    benchmark::DoNotOptimize(g);
  }
}

template <bool Parallel>
void EigenResiduals(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto polys = generate(kParams, n);
  for (auto _ : state) {
    auto r = Parallel ? kernels::parallel::eigen_residuals(kParams, polys) : kernels::serial::eigen_residuals(kParams, polys);
    benchmark::DoNotOptimize(r);
  }
}

}  // namespace

BENCHMARK(EvaluateOnNodes<false>)->Arg(12)->Arg(24);
BENCHMARK(EvaluateOnNodes<true>)->Arg(12)->Arg(24);
BENCHMARK(GramMatrix<false>)->Arg(24)->Arg(64);
BENCHMARK(GramMatrix<true>)->Arg(24)->Arg(64);
BENCHMARK(EigenResiduals<false>)->Arg(20)->Arg(30);
BENCHMARK(EigenResiduals<true>)->Arg(20)->Arg(30);

BENCHMARK_MAIN();
