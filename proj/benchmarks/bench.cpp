// Microbenchmarks for the symbolic kernels and the numeric verifiers.

#include <benchmark/benchmark.h>

#include "fkdv/balance.hpp"
#include "fkdv/families.hpp"
#include "fkdv/numeric_verify.hpp"
#include "fkdv/riccati.hpp"
#include "fkdv/solver.hpp"

namespace {

using namespace fkdv;

void BM_MultiPolyMultiply(benchmark::State& state) {
  // Product at the scale of the extracted coefficient equations.
  const MultiPoly a = *order2_general_system().find(3);
  const MultiPoly b = *order2_general_system().find(5);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_MultiPolyMultiply);

void BM_OdeResidualOrder2(benchmark::State& state) {
  const FkdvParams params = FkdvParams::symbolic();
  const PhiPoly v = build_ansatz(2, true);
  for (auto _ : state) benchmark::DoNotOptimize(ode_residual(v, params));
}
BENCHMARK(BM_OdeResidualOrder2);

void BM_ExtractSystem(benchmark::State& state) {
  const PhiPoly residual = ode_residual(build_ansatz(2, true), FkdvParams::symbolic());
  for (auto _ : state) benchmark::DoNotOptimize(extract_system(residual));
}
BENCHMARK(BM_ExtractSystem);

void BM_VerifyFamily(benchmark::State& state) {
  const SolutionFamily& family = family_table()[static_cast<size_t>(state.range(0))];
  for (auto _ : state) benchmark::DoNotOptimize(verify_family(family));
}
BENCHMARK(BM_VerifyFamily)->DenseRange(0, 5);

void BM_SolveRestrictedExact(benchmark::State& state) {
  const FkdvParams params = FkdvParams::preset("sk");
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_restricted(params, Rational(-1), SolveMode::Exact));
}
BENCHMARK(BM_SolveRestrictedExact);

void BM_SolveRestrictedFloating(benchmark::State& state) {
  const FkdvParams params = FkdvParams::preset("sk");
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_restricted(params, Rational(-1), SolveMode::Floating));
}
BENCHMARK(BM_SolveRestrictedFloating);

void BM_PdeResidualRiccati(benchmark::State& state) {
  const FkdvParams params = FkdvParams::preset("sk");
  const ClosedFormSolution sol = closed_form(family_table()[2], Branch::Tanh, -1.0, params);
  const GridSpec grid;  // 2001 points
  for (auto _ : state) benchmark::DoNotOptimize(pde_residual_riccati(sol, grid));
}
BENCHMARK(BM_PdeResidualRiccati);

void BM_PdeResidualFd(benchmark::State& state) {
  const FkdvParams params = FkdvParams::preset("sk");
  const ClosedFormSolution sol = closed_form(family_table()[2], Branch::Tanh, -1.0, params);
  const GridSpec grid;
  for (auto _ : state) benchmark::DoNotOptimize(pde_residual_fd(sol, grid, 0.05));
}
BENCHMARK(BM_PdeResidualFd);

}  // namespace

BENCHMARK_MAIN();
