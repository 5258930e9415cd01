#include <benchmark/benchmark.h>

#include "modheat/modnorm.hpp"
#include "modheat/presets.hpp"

using namespace modheat;

namespace {
const GridGeometry kGeom{1, 12.0, 2048};
}

static void BM_Stft(benchmark::State& state) {
    Window w = gaussian_window(kGeom);
    GridFunction f = initial_data_preset("gauss", kGeom, 1.0, {1.0}, {0.5});
    PhaseGrid pg = PhaseGrid::make_default(kGeom);
    for (auto _ : state) {
        STFTTable t = stft(f, w, pg);
        benchmark::DoNotOptimize(t.values.data());
    }
}
BENCHMARK(BM_Stft)->Unit(benchmark::kMillisecond);

static void BM_Istft(benchmark::State& state) {
    Window w = gaussian_window(kGeom);
    GridFunction f = initial_data_preset("gauss", kGeom, 1.0, {1.0}, {0.5});
    PhaseGrid pg = PhaseGrid::make_default(kGeom);
    STFTTable t = stft(f, w, pg);
    for (auto _ : state) {
        GridFunction rec = istft(t, w);
        benchmark::DoNotOptimize(rec.values().data());
    }
}
BENCHMARK(BM_Istft)->Unit(benchmark::kMillisecond);

static void BM_MixedNorm(benchmark::State& state) {
    Window w = gaussian_window(kGeom);
    GridFunction f = initial_data_preset("gauss", kGeom, 1.0, {1.0}, {0.5});
    PhaseGrid pg = PhaseGrid::make_default(kGeom);
    STFTTable t = stft(f, w, pg);
    const Weight ws{Weight::Kind::FrequencyOnly, 1.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(mixed_norm(t, 1.0, 1.0, ws));
    }
}
BENCHMARK(BM_MixedNorm)->Unit(benchmark::kMicrosecond);

static void BM_ModNorm(benchmark::State& state) {
    Window w = gaussian_window(kGeom);
    GridFunction f = initial_data_preset("gauss", kGeom, 1.0, {1.0}, {0.5});
    PhaseGrid pg = PhaseGrid::make_default(kGeom);
    const Weight ws{Weight::Kind::FrequencyOnly, 1.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(mod_norm(f, w, 1.0, 1.0, ws, pg));
    }
}
BENCHMARK(BM_ModNorm)->Unit(benchmark::kMillisecond);
