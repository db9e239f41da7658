// Parallel kernels against the serial reference on the braid cycle of the
// 4-dimensional matrix coalgebra: t_n = alpha^0 ... alpha^(n-1) on G^(n+1).

#include <benchmark/benchmark.h>

#include "cyc/coalgebra.hpp"
#include "cyc/kernels.hpp"

using namespace cyc;

namespace {

struct Workload {
  Coalgebra c = builtin_coalgebras()[2];
  BraidCandidate t = trivial_symmetry_matrix(c);
  std::vector<LocalOp> steps;
  Matrix input;

  explicit Workload(std::size_t n) : input(Matrix::identity(ipow(c.dim, n + 1), c.field)) {
    // alpha^i acts on factors i+1, i+2; rightmost generator first
    for (std::size_t i = n; i-- > 0;) steps.push_back({&t.t, ipow(c.dim, n - 1 - i)});
  }
};

void BM_chain_parallel(benchmark::State& state) {
  const Workload w(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(apply_chain(w.steps, w.input));
}

void BM_chain_reference(benchmark::State& state) {
  const Workload w(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::apply_chain(w.steps, w.input));
}

void BM_multiply_parallel(benchmark::State& state) {
  const Workload w(static_cast<std::size_t>(state.range(0)));
  const Matrix a = materialize(w.steps.front(), w.input.rows() / (w.t.t.rows() * w.steps.front().inner));
  const Matrix b = apply_chain(w.steps, w.input);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(a, b));
}

void BM_multiply_reference(benchmark::State& state) {
  const Workload w(static_cast<std::size_t>(state.range(0)));
  const Matrix a = materialize(w.steps.front(), w.input.rows() / (w.t.t.rows() * w.steps.front().inner));
  const Matrix b = apply_chain(w.steps, w.input);
  for (auto _ : state) benchmark::DoNotOptimize(reference::multiply(a, b));
}

}  // namespace

BENCHMARK(BM_chain_parallel)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_chain_reference)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_multiply_parallel)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_multiply_reference)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
