#include "stforms/form_ops.hpp"
#include "stforms/group.hpp"
#include "stforms/intertwine.hpp"
#include "stforms/linalg.hpp"
#include "stforms/rng.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace stforms;

void BM_RrefIntertwinerSystem(benchmark::State& state) {
    // The largest system in the toolkit: both degrees 2, full constraint set.
    const RatMatrix system = intertwiner_constraint_matrix(
        spacetime(SpacetimeKind::Minkowski), 2, 2, ConstraintMode::Full);
    for (auto _ : state) {
        auto result = rref(system);
        benchmark::DoNotOptimize(result.pivots.size());
    }
}
BENCHMARK(BM_RrefIntertwinerSystem);

void BM_SolveCell22(benchmark::State& state) {
    const Spacetime& st = spacetime(SpacetimeKind::Galilei);
    for (auto _ : state) {
        auto space = solve_intertwiners(st, 2, 2, ConstraintMode::Full);
        benchmark::DoNotOptimize(space.dim());
    }
}
BENCHMARK(BM_SolveCell22);

void BM_FullGrid(benchmark::State& state) {
    const Spacetime& st = spacetime(SpacetimeKind::Carroll);
    for (auto _ : state) {
        auto grid = dimension_grid(st, ConstraintMode::Full);
        benchmark::DoNotOptimize(grid[2][2]);
    }
}
BENCHMARK(BM_FullGrid);

void BM_FiniteRep(benchmark::State& state) {
    Rng rng(11);
    const GroupElement g = rng.group_element(SpacetimeKind::Minkowski);
    for (auto _ : state) {
        auto m = finite_rep(g, 2);
        benchmark::DoNotOptimize(m.rows());
    }
}
BENCHMARK(BM_FiniteRep);

void BM_PolynomialPullback(benchmark::State& state) {
    Rng rng(13);
    const GroupElement g = rng.group_element(SpacetimeKind::Galilei);
    const Form w = rng.form(2);
    for (auto _ : state) {
        Form out = pullback(g, w);
        benchmark::DoNotOptimize(out.is_zero());
    }
}
BENCHMARK(BM_PolynomialPullback);

}  // namespace

BENCHMARK_MAIN();
