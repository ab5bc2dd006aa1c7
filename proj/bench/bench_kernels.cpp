// Serial reference versus OpenMP kernels on Z/2 acting on M_3 by a permutation.
#include <benchmark/benchmark.h>

#include "cforge/cochain.hpp"
#include "cforge/cohomology.hpp"
#include "cforge/random.hpp"

namespace {

using namespace cforge;

AlgebraDiagram z2_m3() {
  // conjugation by the transposition swapping e_0 and e_1
  const int perm[3] = {1, 0, 2};
  Matrix m(9, 9);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      m(static_cast<std::size_t>(3 * perm[j] + perm[k]), static_cast<std::size_t>(3 * j + k)) = Scalar(1);
  return {FiniteCategory::from_group({{0, 1}, {1, 0}}), {Algebra::matrix_algebra(3)}, {Matrix::identity(9), m}};
}

const Bicomplex& complex() {
  static const Bicomplex cx(z2_m3(), 3);
  return cx;
}

Exec exec_of(const benchmark::State& st) { return st.range(0) == 0 ? Exec::serial : Exec::parallel; }

void BM_delta(benchmark::State& st) {
  const Bicomplex& cx = complex();
  Rng rng(7);
  BiCochain g = random_bicochain(cx, 1, 2, rng);
  for (auto _ : st) benchmark::DoNotOptimize(delta(cx, g, exec_of(st)));
}

void BM_bracket(benchmark::State& st) {
  const Bicomplex& cx = complex();
  Rng rng(11);
  BiCochain a = random_bicochain(cx, 1, 1, rng);
  BiCochain b = random_bicochain(cx, 1, 1, rng);
  for (auto _ : st) benchmark::DoNotOptimize(bracket(cx, a, b, exec_of(st)));
}

void BM_assemble(benchmark::State& st) {
  ComplexAssembly asmb(complex(), Variant::full);
  for (auto _ : st) benchmark::DoNotOptimize(assemble_coboundary_matrix(asmb, 1, Caps{}, exec_of(st)));
}

}  // namespace

BENCHMARK(BM_delta)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bracket)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_assemble)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
