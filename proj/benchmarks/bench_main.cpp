#include <benchmark/benchmark.h>

#include "shuffle/fourier.hpp"
#include "shuffle/group_algebra.hpp"
#include "shuffle/operators.hpp"
#include "shuffle/poly.hpp"
#include "shuffle/roots.hpp"
#include "shuffle/tables.hpp"

using namespace shuffle;

namespace {

NumberPartition columns_operator(int n) { return family_partitions(n, Family::Columns).back(); }

void BM_FourierTransform(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FourierEngine fe(n);
  const auto dense = nu_dense(columns_operator(n));
  std::vector<Rational> q(dense.begin(), dense.end());
  for (auto _ : state) benchmark::DoNotOptimize(fe.transform(q));
}
BENCHMARK(BM_FourierTransform)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_DenseProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DenseIntAlgebra alg(n);
  const auto a = nu_dense(columns_operator(n));
  const auto b = nu_dense(family_partitions(n, Family::TwoBlocks).front());
  for (auto _ : state) benchmark::DoNotOptimize(alg.multiply(a, b));
}
BENCHMARK(BM_DenseProduct)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_Tables(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto family = state.range(1) == 0 ? Family::Columns : Family::TwoBlocks;
  for (auto _ : state) benchmark::DoNotOptimize(simultaneous_tables(n, family));
}
BENCHMARK(BM_Tables)->ArgsProduct({{4, 5, 6}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_BlockCharpoly(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FourierEngine fe(n);
  const auto blocks = nu_blocks(fe, columns_operator(n));
  for (auto _ : state)
    for (const auto& b : blocks) benchmark::DoNotOptimize(factor_rational_roots(charpoly(b)));
}
BENCHMARK(BM_BlockCharpoly)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_RankOne(benchmark::State& state) {
  static const char* labels[] = {"D5", "E6", "H4"};
  const auto rs = build_root_system(labels[state.range(0)]);
  const auto hs = select_hyperplanes(rs, "");
  state.SetLabel(labels[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(rank_one_charpoly(rs, hs));
}
BENCHMARK(BM_RankOne)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
