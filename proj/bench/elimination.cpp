// Parallel fraction-free elimination against the serial textbook reference.
//
//   bench_elimination --benchmark_filter=Rational
//
// Set OMP_NUM_THREADS to compare thread counts for the parallel kernels.

#include "arrlocal/arrangement.hpp"
#include "arrlocal/kernels.hpp"
#include "arrlocal/pi1oracle.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace arrlocal;

namespace {

// n x n with rank n - n/4: the last quarter of rows are combinations of others.
QMatrix random_matrix(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    QMatrix m(n, n);
    const std::size_t full = n - n / 4;
    for (std::size_t i = 0; i < full; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational x(num(rng), den(rng));
            x.canonicalize();
            m(i, j) = x;
        }
    for (std::size_t i = full; i < n; ++i)
        for (std::size_t k = 0; k < 3; ++k) {
            const std::size_t src = rng() % full;
            const Rational c(num(rng));
            for (std::size_t j = 0; j < n; ++j) m(i, j) += c * m(src, j);
        }
    return m;
}

CycloMatrix jacobian(const std::string& name, long k) {
    const auto a = builtin_arrangement(name);
    return fox_jacobian(randell_presentation(wiring_diagram(a)), character_spec(a.size(), k));
}

void BM_RationalBareissParallel(benchmark::State& state) {
    const auto m = random_matrix(state.range(0), 7);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::rank_bareiss(m));
}

void BM_RationalGaussReference(benchmark::State& state) {
    const auto m = random_matrix(state.range(0), 7);
    for (auto _ : state) benchmark::DoNotOptimize(reference::rank_gauss(m));
}

void BM_CycloParallel(benchmark::State& state) {
    const auto j = jacobian("generic(" + std::to_string(state.range(0)) + ")", 1);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::cyclo_echelon(j).pivots.size());
}

void BM_CycloReference(benchmark::State& state) {
    const auto j = jacobian("generic(" + std::to_string(state.range(0)) + ")", 1);
    for (auto _ : state) benchmark::DoNotOptimize(reference::rank_cyclo_gauss(j));
}

} // namespace

BENCHMARK(BM_RationalBareissParallel)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RationalGaussReference)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CycloParallel)->Arg(7)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CycloReference)->Arg(7)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
