#include <benchmark/benchmark.h>

#include "permsplit/lpm.hpp"
#include "permsplit/matroid.hpp"
#include "permsplit/perm.hpp"
#include "permsplit/polytope.hpp"
#include "permsplit/splits.hpp"
#include "permsplit/subdivision.hpp"

namespace {

using namespace permsplit;

void BM_BruhatLeq(benchmark::State& state) {
  const auto all = all_permutations(static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bruhat_leq(all[i % all.size()], all[(i * 7 + 3) % all.size()]));
    ++i;
  }
}
BENCHMARK(BM_BruhatLeq)->Arg(4)->Arg(6)->Arg(8);

void BM_BruhatInterval(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bruhat_interval(Permutation::identity(n), Permutation::longest(n)));
}
BENCHMARK(BM_BruhatInterval)->Arg(4)->Arg(5)->Arg(6);

void BM_EnumerateVertices(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto facets = permutahedron_facets(n);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_vertices(facets, n));
}
BENCHMARK(BM_EnumerateVertices)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ExhaustiveScan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_scan(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ExhaustiveScan)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_IsQuotient(benchmark::State& state) {
  const auto criterion = static_cast<QuotientCriterion>(state.range(0));
  const LatticePathMatroid m(8, Subset::of({1, 2, 4, 7}), Subset::of({3, 5, 6, 8}));
  const auto big = to_set_matroid(m);
  const auto small = to_set_matroid(elementary_quotient(m, good_pairs(m).front()));
  for (auto _ : state) benchmark::DoNotOptimize(is_quotient(big, small, criterion));
}
BENCHMARK(BM_IsQuotient)->Arg(1)->Arg(2)->Arg(3);

void BM_BuildPoset(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_poset(4));
}
BENCHMARK(BM_BuildPoset)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
