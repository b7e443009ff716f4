#include <benchmark/benchmark.h>

#include "bohrlab/functionals.hpp"
#include "bohrlab/multidim.hpp"
#include "bohrlab/radii.hpp"
#include "bohrlab/series.hpp"

namespace {

using namespace bohrlab;

void BM_OperatorNorm(benchmark::State& state) {
  const std::size_t dim = static_cast<std::size_t>(state.range(0));
  Rng rng(7);
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = rng.gaussian();
  for (auto _ : state) benchmark::DoNotOptimize(operator_norm(m));
}
BENCHMARK(BM_OperatorNorm)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_SupNormOnCircle(benchmark::State& state) {
  const std::size_t samples = static_cast<std::size_t>(state.range(0));
  const MatrixPowerSeries s = psi_family(FamilyParam{0.5}, 64);
  for (auto _ : state)
    benchmark::DoNotOptimize(sup_norm_on_circle(s, 0.6, samples));
}
BENCHMARK(BM_SupNormOnCircle)->Arg(64)->Arg(256)->Arg(1024);

void BM_EvalFunctional(benchmark::State& state) {
  const FunctionalKind kind = static_cast<FunctionalKind>(state.range(0));
  const MatrixPowerSeries s = psi_family(FamilyParam{0.5}, 64);
  for (auto _ : state)
    benchmark::DoNotOptimize(eval_functional(kind, s, 0.5));
}
BENCHMARK(BM_EvalFunctional)
    ->Arg(static_cast<int>(FunctionalKind::G))
    ->Arg(static_cast<int>(FunctionalKind::G2))
    ->Arg(static_cast<int>(FunctionalKind::H1));

void BM_SharpnessScan(benchmark::State& state) {
  const std::vector<double> grid = default_a_grid();
  for (auto _ : state)
    benchmark::DoNotOptimize(sharpness_scan(FunctionalKind::G, 0.61, grid));
}
BENCHMARK(BM_SharpnessScan);

void BM_LineRestrict(benchmark::State& state) {
  PowerSeriesND F;
  F.n = 3;
  F.dim = 2;
  F.exact = true;
  F.bounded_certified = true;
  ComplexMatrix m = ComplexMatrix::scalar(2, cplx(0.2, 0.1));
  F.coeffs[{1, 1, 0}] = m;
  F.coeffs[{0, 1, 1}] = m;
  F.coeffs[{1, 1, 1}] = m;
  const std::vector<cplx> w = {cplx(1.0, 0.0), cplx(0.6, 0.3), cplx(0.0, 1.0)};
  for (auto _ : state)
    benchmark::DoNotOptimize(line_restrict(F, w, 24));
}
BENCHMARK(BM_LineRestrict);

}  // namespace

BENCHMARK_MAIN();
