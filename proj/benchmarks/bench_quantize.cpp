#include <benchmark/benchmark.h>

#include "modheat/quantize.hpp"

using namespace modheat;

namespace {
const GridGeometry kGeom{1, 16.0, 512};
const GridGeometry kPs{2, 16.0, 512};
}

static void BM_KernelBuild(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const GridGeometry geom{1, 16.0, n};
    Symbol sigma = symbol_preset("gauss");
    for (auto _ : state) {
        QuantKernel k(sigma, 0.25, geom);
        benchmark::DoNotOptimize(&k);
    }
}
BENCHMARK(BM_KernelBuild)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_KernelApply(benchmark::State& state) {
    QuantKernel k(symbol_preset("gauss"), 0.25, kGeom);
    Window g = gaussian_window(kGeom);
    for (auto _ : state) {
        GridFunction out = k.apply(g.g);
        benchmark::DoNotOptimize(out.values().data());
    }
}
BENCHMARK(BM_KernelApply)->Unit(benchmark::kMicrosecond);

static void BM_TauWigner(benchmark::State& state) {
    Window g = gaussian_window(kGeom);
    for (auto _ : state) {
        GridFunction w = tau_wigner(g.g, g.g, 0.25, kPs);
        benchmark::DoNotOptimize(w.values().data());
    }
}
BENCHMARK(BM_TauWigner)->Unit(benchmark::kMillisecond);

static void BM_IdentityRoutePoint(benchmark::State& state) {
    Window g = gaussian_window(kGeom);
    GaborAnalyzer an(symbol_preset("gauss"), 0.25, g, kPs);
    const PhasePoint z = make_point(0.25, -0.5), y = make_point(1.25, 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(an.identity_magnitude(z, y));
    }
}
BENCHMARK(BM_IdentityRoutePoint)->Unit(benchmark::kMicrosecond);

static void BM_DirectRoutePair(benchmark::State& state) {
    Window g = gaussian_window(kGeom);
    GaborAnalyzer an(symbol_preset("gauss"), 0.25, g, kPs);
    const PhasePoint z = make_point(0.25, -0.5), y = make_point(1.25, 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(an.direct(z, y));
    }
}
BENCHMARK(BM_DirectRoutePair)->Unit(benchmark::kMicrosecond);
