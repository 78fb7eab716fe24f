/// Microbenchmarks for the hot paths: normal forms, Hausdorff geometry,
/// the Dirichlet scan, certificate replay, and the table solver.

#include <benchmark/benchmark.h>

#include <vector>

#include "toral/approx.hpp"
#include "toral/corpus.hpp"
#include "toral/lattice.hpp"
#include "toral/multitab.hpp"
#include "toral/torusgroup.hpp"

namespace {

using namespace toral;

void bm_hnf(benchmark::State& state) {
    Rng rng(42);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::vector<IntMatrix> pool;
    for (int i = 0; i < 32; ++i) pool.push_back(random_matrix(n, n, 1000, rng));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hnf(pool[i]));
        i = (i + 1) % pool.size();
    }
}
BENCHMARK(bm_hnf)->Arg(4)->Arg(8)->Arg(16);

void bm_snf(benchmark::State& state) {
    Rng rng(43);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::vector<IntMatrix> pool;
    for (int i = 0; i < 32; ++i) pool.push_back(random_matrix(n, n, 1000, rng));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(snf(pool[i]));
        i = (i + 1) % pool.size();
    }
}
BENCHMARK(bm_snf)->Arg(4)->Arg(8);

void bm_hausdorff(benchmark::State& state) {
    Rng rng(44);
    const unsigned long max_order = static_cast<unsigned long>(state.range(0));
    TorusSubgroup k = random_finite_subgroup(2, 8, max_order, rng);
    TorusSubgroup l = random_finite_subgroup(2, 8, max_order, rng);
    for (auto _ : state) benchmark::DoNotOptimize(hausdorff_dist(k, l));
}
BENCHMARK(bm_hausdorff)->Arg(12)->Arg(40);

void bm_dirichlet(benchmark::State& state) {
    Rng rng(45);
    std::vector<Rat> alphas;
    for (int i = 0; i < 3; ++i) alphas.push_back(random_rational(97, rng));
    const Int big_q(static_cast<long>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(dirichlet(alphas, big_q));
}
BENCHMARK(bm_dirichlet)->Arg(4)->Arg(8);

void bm_finite_approx(benchmark::State& state) {
    TorusSubgroup circle(1);
    const Rat eps(1, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(finite_approx(circle, eps));
}
BENCHMARK(bm_finite_approx)->Arg(4)->Arg(8);

void bm_verify_certificate(benchmark::State& state) {
    TorusSubgroup circle(1);
    ApproxCertificate cert = finite_approx(circle, Rat(1, state.range(0))).second;
    for (auto _ : state) benchmark::DoNotOptimize(verify_certificate(cert));
}
BENCHMARK(bm_verify_certificate)->Arg(4)->Arg(8);

void bm_embedding_solve(benchmark::State& state) {
    std::vector<FiniteGroupTable> catalog = small_group_catalog(8);
    FiniteGroupTable klein = table_of(FinAbelian::of({Int(2), Int(2)}));
    FiniteGroupTable host = catalog[catalog.size() - 2];
    EqSystem system = embedding_system(klein);
    for (auto _ : state) benchmark::DoNotOptimize(solve_system(system, host));
}
BENCHMARK(bm_embedding_solve);

}  // namespace

BENCHMARK_MAIN();
