#include "modheat/presets.hpp"

#include <cmath>
#include <random>

#include "modheat/errors.hpp"
#include "modheat/hermite.hpp"

namespace modheat {

namespace {

GridFunction gaussian_family(const GridGeometry& geom, double scale,
                             const std::vector<double>& center,
                             const std::vector<double>& modulation, double width,
                             double chirp_rate, double phase) {
    GridFunction f(geom);
    const double amp =
        scale * std::pow(2.0, static_cast<double>(geom.d) / 4.0) / std::pow(width, geom.d / 2.0);
    for (std::size_t flat = 0; flat < f.size(); ++flat) {
        const auto x = geom.node(flat);
        double q = 0.0, mod = 0.0, chirp = 0.0;
        for (std::size_t ax = 0; ax < geom.d; ++ax) {
            const double c = ax < center.size() ? center[ax] : 0.0;
            const double m = ax < modulation.size() ? modulation[ax] : 0.0;
            const double t = x[ax] - c;
            q += t * t;
            mod += m * x[ax];
            chirp += t * t;
        }
        f[flat] = amp * std::exp(-M_PI * q / (width * width)) *
                  std::polar(1.0, 2.0 * M_PI * mod + M_PI * chirp_rate * chirp + phase);
    }
    return f;
}

}  // namespace

GridFunction initial_data_preset(const std::string& name, const GridGeometry& geom, double scale,
                                 std::vector<double> center, std::vector<double> modulation) {
    if (name == "gauss")
        return gaussian_family(geom, scale, center, modulation, 1.0, 0.0, 0.0);
    if (name == "chirp")
        return gaussian_family(geom, scale, center, modulation, 1.0, 1.0, 0.0);
    if (name.rfind("hermite:", 0) == 0) {
        const long k = std::stol(name.substr(8));
        if (k < 0) throw ValidationError("hermite preset needs k >= 0");
        GridFunction f(geom);
        const auto xs = geom.axis();
        const auto hk = hermite_eval(static_cast<std::size_t>(k), xs);
        const auto h0 = hermite_eval(0, xs);
        for (std::size_t flat = 0; flat < f.size(); ++flat) {
            const auto idx = geom.unflatten(flat);
            double v = hk[idx[0]];
            for (std::size_t ax = 1; ax < geom.d; ++ax) v *= h0[idx[ax]];
            f[flat] = scale * v;
        }
        return f;
    }
    throw ValidationError("unknown initial-data preset: " + name);
}

std::vector<GridFunction> gaussian_class_test_set(const GridGeometry& geom, std::size_t count,
                                                  std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> center_d(-3.0, 3.0);
    std::uniform_real_distribution<double> width_d(0.8, 1.4);
    std::uniform_real_distribution<double> mod_d(-0.5, 0.5);
    std::uniform_real_distribution<double> phase_d(0.0, 2.0 * M_PI);

    std::vector<GridFunction> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<double> c(geom.d), m(geom.d);
        for (auto& v : c) v = center_d(rng);
        for (auto& v : m) v = mod_d(rng);
        const double w = width_d(rng);
        const double ph = phase_d(rng);
        GridFunction f = gaussian_family(geom, 1.0, c, m, w, 0.0, ph);
        const double nrm = f.l2_norm();
        f *= Complex{1.0 / nrm, 0.0};
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace modheat
