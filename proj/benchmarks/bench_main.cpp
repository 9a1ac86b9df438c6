#include <benchmark/benchmark.h>

#include "turan/canonical.hpp"
#include "turan/extremal.hpp"
#include "turan/geometry.hpp"
#include "turan/hypergraph.hpp"
#include "turan/lagrangian.hpp"
#include "turan/minors.hpp"

namespace {

using namespace turan;

void BM_DaisySearch(benchmark::State& state) {
  const UniformHypergraph h = basis_hypergraph(projective_geometry(3, static_cast<int>(state.range(0))));
  const int t = static_cast<int>(state.range(0)) + 2;
  for (auto _ : state) benchmark::DoNotOptimize(has_daisy(h, 2, t));
}
BENCHMARK(BM_DaisySearch)->Arg(2)->Arg(3)->Arg(4);

void BM_UniformMinor(benchmark::State& state) {
  const Matroid m = projective_geometry(4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(has_uniform_minor(m, 2, 4));
}
BENCHMARK(BM_UniformMinor);

void BM_Maximize(benchmark::State& state) {
  const Matroid m = projective_geometry(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(maximize(m).value);
}
BENCHMARK(BM_Maximize)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SearchGeneric(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search_ex(n, 3, 3, 4).max_bases);
}
BENCHMARK(BM_SearchGeneric)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_SearchRank3(benchmark::State& state) {
  SearchOptions options;
  options.backend = SearchBackend::rank3;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search_ex(n, 3, 3, 5, options).max_bases);
}
BENCHMARK(BM_SearchRank3)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_BinarySearch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(search_binary_max_bases(4, 8).report.max_bases);
}
BENCHMARK(BM_BinarySearch)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  const Matroid m = two_disjoint_lines(5, 6);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(m).basis_count());
}
BENCHMARK(BM_CanonicalForm);

}  // namespace

BENCHMARK_MAIN();
