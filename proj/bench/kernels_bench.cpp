// Serial reference vs OpenMP kernels for the two exhaustive searches.

#include <benchmark/benchmark.h>

#include <random>

#include "qtbound/kernels.hpp"

using namespace qtbound;
using namespace qtbound::kernels;

namespace {

SpanProblem span_problem(std::uint32_t p, std::size_t k, std::size_t n) {
  std::mt19937_64 rng(k * 131 + n);
  SpanProblem prob{FiniteField::prime(p), n, {}};
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Elem> row(n);
    for (auto& e : row) e = Elem{static_cast<std::uint32_t>(rng() % p)};
    prob.generators.push_back(row);
  }
  return prob;
}

ColumnProblem column_problem(std::uint32_t p, std::size_t rows, std::size_t cols) {
  std::mt19937_64 rng(rows * 17 + cols);
  ColumnProblem prob{FiniteField::prime(p), rows, {}};
  for (std::size_t c = 0; c < cols; ++c) {
    std::vector<Elem> col(rows);
    for (auto& e : col) e = Elem{static_cast<std::uint32_t>(rng() % p)};
    prob.columns.push_back(col);
  }
  return prob;
}

template <std::uint32_t (*Fn)(const SpanProblem&)>
void BM_MinWeight(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const SpanProblem prob = span_problem(3, k, 2 * k + 4);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(prob));
  state.counters["codewords"] = static_cast<double>(projective_count(3, k));
}

template <bool (*Fn)(const ColumnProblem&, std::size_t, std::uint64_t&)>
void BM_Subsets(benchmark::State& state) {
  const auto cols = static_cast<std::size_t>(state.range(0));
  // more rows than j so that most subsets are independent and the scan runs to the end
  const ColumnProblem prob = column_problem(7, 14, cols);
  for (auto _ : state) {
    std::uint64_t evals = 0;
    benchmark::DoNotOptimize(Fn(prob, 5, evals));
  }
  state.counters["subsets"] = static_cast<double>(binomial(cols, 5));
}

}  // namespace

BENCHMARK(BM_MinWeight<min_weight_serial>)->Name("min_weight/serial")->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinWeight<min_weight_omp>)->Name("min_weight/omp")->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Subsets<all_subsets_independent_serial>)->Name("subsets/serial")->DenseRange(16, 24, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Subsets<all_subsets_independent_omp>)->Name("subsets/omp")->DenseRange(16, 24, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
