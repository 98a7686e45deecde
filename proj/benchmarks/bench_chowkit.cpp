#include <chowkit/abindex.hpp>
#include <chowkit/kls.hpp>
#include <chowkit/matroid.hpp>

#include <benchmark/benchmark.h>

namespace {

// Lattice construction plus the full dual Chow table.
void BM_PartitionDualChow(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(chowkit::dual_chow_polynomial(chowkit::partition_lattice(n)));
  }
}
BENCHMARK(BM_PartitionDualChow)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_UniformFlats(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const chowkit::Matroid m = chowkit::Matroid::uniform(n / 2, n);
    benchmark::DoNotOptimize(m.flats().poset.size());
  }
}
BENCHMARK(BM_UniformFlats)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_BooleanAbIndex(benchmark::State& state) {
  const chowkit::Poset p = chowkit::boolean_lattice(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chowkit::ab_index(p));
}
BENCHMARK(BM_BooleanAbIndex)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_ExtendedIndices(benchmark::State& state) {
  const chowkit::Poset p = chowkit::partition_lattice(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chowkit::extended_indices(p));
}
BENCHMARK(BM_ExtendedIndices)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

// Deletion recursion against the lattice route on the same uniform matroid.
void BM_UniformDeletionRecursion(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(chowkit::dual_chow_by_deletion(chowkit::Matroid::uniform(n / 2, n)));
  }
}
BENCHMARK(BM_UniformDeletionRecursion)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_UniformLatticeRoute(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chowkit::dual_chow(chowkit::Matroid::uniform(n / 2, n)));
}
BENCHMARK(BM_UniformLatticeRoute)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_UniformClosedForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chowkit::uniform_dual_chow(n / 2, n));
}
BENCHMARK(BM_UniformClosedForm)->DenseRange(4, 8, 2);

}  // namespace

BENCHMARK_MAIN();
