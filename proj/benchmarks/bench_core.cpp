#include <benchmark/benchmark.h>

#include "coxbraid/braid.hpp"
#include "coxbraid/report.hpp"

using namespace coxbraid;

namespace {

void BM_RootSystemBuild(benchmark::State& state) {
  const char* types[] = {"A4", "B4", "D6", "E6", "H4"};
  const char* t = types[state.range(0)];
  for (auto _ : state) {
    benchmark::DoNotOptimize(RootSystem::build(t));
  }
  state.SetLabel(t);
}
BENCHMARK(BM_RootSystemBuild)->DenseRange(0, 4);

void BM_PowerNormalForm(benchmark::State& state) {
  const RootSystem* rs = RootSystem::build("E6");
  GroupElement w = GroupElement::from_word(rs, 0, {1, 3, 2, 4, 5, 6, 1, 3});
  int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(power_normal_form(w, d));
  }
}
BENCHMARK(BM_PowerNormalForm)->Arg(5)->Arg(10)->Arg(20);

void BM_IsDominant(benchmark::State& state) {
  const RootSystem* rs = RootSystem::build("D6");
  GroupElement w = GroupElement::from_word(rs, 0, {1, 2, 3, 4, 5, 6, 2, 3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_dominant(w));
  }
}
BENCHMARK(BM_IsDominant);

void BM_ConjugacyClass(benchmark::State& state) {
  const RootSystem* rs = RootSystem::build("B4");
  GroupElement w = GroupElement::from_word(rs, 0, {1, 2, 3, 4});
  for (auto _ : state) {
    benchmark::DoNotOptimize(conjugacy_class(w));
  }
}
BENCHMARK(BM_ConjugacyClass);

void BM_ClassifySmall(benchmark::State& state) {
  const RootSystem* rs = RootSystem::build("B3");
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(rs));
  }
}
BENCHMARK(BM_ClassifySmall);

void BM_EigenDecompose(benchmark::State& state) {
  const RootSystem* rs = RootSystem::build("H3");
  GroupElement w = GroupElement::from_word(rs, 0, {1, 2, 3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(eigen_decompose(w));
  }
}
BENCHMARK(BM_EigenDecompose);

}  // namespace

BENCHMARK_MAIN();
