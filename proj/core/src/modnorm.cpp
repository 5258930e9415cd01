#include "modheat/modnorm.hpp"

#include <cmath>
#include <string>

namespace modheat {

double weight_eval(const Weight& w, const PhasePoint& z) {
    double q = 0.0;
    if (w.kind == Weight::Kind::Full)
        for (double v : z.pos) q += v * v;
    for (double v : z.freq) q += v * v;
    return std::pow(1.0 + q, 0.5 * w.s);
}

namespace {
void check_exponent(double p, const char* name) {
    if (std::isnan(p) || p < 1.0)
        throw ValidationError(std::string(name) + " must lie in [1, inf]");
}
}  // namespace

double mixed_norm(const STFTTable& F, double p, double q, const Weight& w) {
    check_exponent(p, "p");
    check_exponent(q, "q");
    const auto& grid = F.grid;
    const std::size_t d = grid.dim();
    const std::size_t xc = grid.x_count(), wc = grid.w_count();
    double xcell = 1.0, wcell = 1.0;
    for (std::size_t ax = 0; ax < d; ++ax) {
        xcell *= grid.a;
        wcell *= grid.b;
    }

    double outer = 0.0;   // sum for finite q
    double omax = 0.0;    // max for q = inf
    for (std::size_t wf = 0; wf < wc; ++wf) {
        const auto l = grid.w_multi(wf);
        std::vector<double> freq(d);
        for (std::size_t ax = 0; ax < d; ++ax) freq[ax] = static_cast<double>(l[ax]) * grid.b;
        double inner = 0.0, imax = 0.0;
        for (std::size_t xf = 0; xf < xc; ++xf) {
            const auto j = grid.x_multi(xf);
            PhasePoint z;
            z.pos.resize(d);
            z.freq = freq;
            for (std::size_t ax = 0; ax < d; ++ax) z.pos[ax] = static_cast<double>(j[ax]) * grid.a;
            const double v = std::abs(F.at(xf, wf)) * weight_eval(w, z);
            if (std::isinf(p))
                imax = std::max(imax, v);
            else
                inner += std::pow(v, p) * xcell;
        }
        const double slice = std::isinf(p) ? imax : std::pow(inner, 1.0 / p);
        if (std::isinf(q))
            omax = std::max(omax, slice);
        else
            outer += std::pow(slice, q) * wcell;
    }
    return std::isinf(q) ? omax : std::pow(outer, 1.0 / q);
}

double mod_norm(const GridFunction& f, const Window& g, double p, double q, const Weight& w,
                const PhaseGrid& grid) {
    return mixed_norm(stft(f, g, grid), p, q, w);
}

double mod_norm(const GridFunction& f, const Window& g, double p, double q, const Weight& w) {
    return mod_norm(f, g, p, q, w, PhaseGrid::make_default(f.geometry()));
}

}  // namespace modheat
