#include <benchmark/benchmark.h>

#include "flopgw/batyrev/eigen.hpp"
#include "flopgw/batyrev/quantum_ring.hpp"
#include "flopgw/cohomology/coh_ring.hpp"
#include "flopgw/flop/g_function.hpp"
#include "flopgw/givental/genus_one.hpp"
#include "flopgw/givental/r_matrix.hpp"
#include "flopgw/quantize/fock.hpp"

using namespace flopgw;

static void BM_GenusOneForm(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(givental::genus_one_form(r));
}
BENCHMARK(BM_GenusOneForm)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

static void BM_RMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(givental::r_matrix_recursion(2, n));
}
BENCHMARK(BM_RMatrix)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_DeltaPolynomial(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(flop::delta_g_polynomial_direct(3, m));
}
BENCHMARK(BM_DeltaPolynomial)->DenseRange(1, 7, 2);

static void BM_ChernIdentity(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cohomology::chern_flop_identity(r));
}
BENCHMARK(BM_ChernIdentity)->DenseRange(1, 6);

static void BM_EigenRelations(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(batyrev::verify_eigen_relations(r, 10));
}
BENCHMARK(BM_EigenRelations)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_QuantumMatrix(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(batyrev::quantum_mult_matrix(r, batyrev::Divisor::xi));
}
BENCHMARK(BM_QuantumMatrix)->DenseRange(1, 4);

static void BM_Cocycle(benchmark::State& state) {
  quantize::QuadHamiltonian a, b;
  a.add({true, 0, 0}, {true, 1, 2}, algebra::Rational(1));
  b.add({false, 0, 0}, {false, 1, 2}, algebra::Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(quantize::commutator_cocycle(a, b));
}
BENCHMARK(BM_Cocycle);
BENCHMARK_MAIN();
