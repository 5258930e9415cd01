#include <benchmark/benchmark.h>

#include <random>

#include "modheat/semigroup.hpp"

using namespace modheat;

namespace {

BasisPtr bench_basis() {
    static BasisPtr b = make_basis(1, 32, 12.0, 2048);
    return b;
}

SpectralField random_field(BasisPtr basis) {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> nd;
    SpectralField c = zero_field(std::move(basis));
    for (auto& v : c.coeffs) v = Complex{nd(rng), nd(rng)};
    return c;
}

}  // namespace

static void BM_BasisBuild(benchmark::State& state) {
    for (auto _ : state) {
        HermiteBasis basis(1, 32, 12.0, 2048);
        benchmark::DoNotOptimize(basis.table(32).data());
    }
}
BENCHMARK(BM_BasisBuild)->Unit(benchmark::kMillisecond);

static void BM_Analyze(benchmark::State& state) {
    auto basis = bench_basis();
    GridFunction u = synthesize(random_field(basis));
    for (auto _ : state) {
        SpectralField c = analyze(u, basis);
        benchmark::DoNotOptimize(c.coeffs.data());
    }
}
BENCHMARK(BM_Analyze)->Unit(benchmark::kMicrosecond);

static void BM_Synthesize(benchmark::State& state) {
    auto basis = bench_basis();
    SpectralField c = random_field(basis);
    for (auto _ : state) {
        GridFunction u = synthesize(c);
        benchmark::DoNotOptimize(u.values().data());
    }
}
BENCHMARK(BM_Synthesize)->Unit(benchmark::kMicrosecond);

static void BM_ApplySemigroup(benchmark::State& state) {
    auto basis = bench_basis();
    SpectralField c = random_field(basis);
    for (auto _ : state) {
        SpectralField r = apply_semigroup(c, 0.3, 0.5);
        benchmark::DoNotOptimize(r.coeffs.data());
    }
}
BENCHMARK(BM_ApplySemigroup);

static void BM_Propagate(benchmark::State& state) {
    auto basis = bench_basis();
    GridFunction u = synthesize(random_field(basis));
    for (auto _ : state) {
        GridFunction r = propagate(u, 0.3, 0.5, basis);
        benchmark::DoNotOptimize(r.values().data());
    }
}
BENCHMARK(BM_Propagate)->Unit(benchmark::kMicrosecond);
