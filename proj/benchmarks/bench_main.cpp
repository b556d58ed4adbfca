#include <random>

#include <benchmark/benchmark.h>

#include "projindex/expression.hpp"
#include "projindex/scenario.hpp"

using namespace projindex;

namespace {

CohClass random_class(std::mt19937_64& rng, const ModelPtr& m) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  CohClass c(m);
  for (const auto& mono : m->basis()) c += CohClass::monomial(m, mono, Rational(num(rng), den(rng)));
  return c;
}

void BM_GenusSeries(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(genus_series(GenusKind::a_hat, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GenusSeries)->Arg(8)->Arg(16)->Arg(32);

void BM_AHatProjectiveSpace(benchmark::State& state) {
  const auto cpn = ManifoldModel::projective_space(static_cast<int>(state.range(0)));
  const BundleData t = BundleData::projective_tangent(cpn);
  for (auto _ : state) benchmark::DoNotOptimize(a_hat(t, cpn));
}
BENCHMARK(BM_AHatProjectiveSpace)->Arg(2)->Arg(6)->Arg(12);

void BM_AHatFromChernClasses(benchmark::State& state) {
  const auto cpn = ManifoldModel::projective_space(static_cast<int>(state.range(0)));
  const BundleData t = BundleData::from_chern("T", static_cast<int>(state.range(0)) + 1,
                                              chern_classes(BundleData::projective_tangent(cpn), cpn));
  for (auto _ : state) benchmark::DoNotOptimize(a_hat(t, cpn));
}
BENCHMARK(BM_AHatFromChernClasses)->Arg(2)->Arg(6)->Arg(12);

void BM_CyclotomicProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Cyclotomic a = Cyclotomic::root_of_unity(n, 1) + Cyclotomic(Rational(1, 3));
  const Cyclotomic b = Cyclotomic::root_of_unity(n, 2) - Cyclotomic(Rational(2, 5));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicProduct)->Arg(4)->Arg(12)->Arg(60);

void BM_FullDistribution(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto m = ManifoldModel::projective_space(static_cast<int>(state.range(0)));
  const FiniteAbelianGroup g({2, 2});
  const std::vector<InvariantGenerator> gens{{"A", 1, parse_class("x", m)}, {"B", 2, parse_class("2*x^2", m)}};
  const IndexSetting s{m, g, gens, a_hat(BundleData::projective_tangent(m), m)};
  SymbolData sym;
  for (const auto& chi : g.characters()) sym.components.emplace(chi, random_class(rng, m));
  for (auto _ : state) benchmark::DoNotOptimize(full_distribution(s, sym));
}
BENCHMARK(BM_FullDistribution)->Arg(2)->Arg(4)->Arg(6);

void BM_BuiltinScenarios(benchmark::State& state) {
  for (auto _ : state)
    for (const auto& name : builtin_names()) {
      const Scenario s = parse_scenario(builtin_text(name));
      benchmark::DoNotOptimize(emit(s, run(s), OutputFormat::machine));
    }
}
BENCHMARK(BM_BuiltinScenarios);

}  // namespace

BENCHMARK_MAIN();
