#include "modheat/wigner.hpp"

#include <cmath>

#include "modheat/fourier.hpp"
#include "modheat/parallel.hpp"

namespace modheat {

GridFunction tau_wigner(const GridFunction& f, const GridFunction& g, double tau,
                        const GridGeometry& ps_geom, std::array<double, 2> offset) {
    TauParams params(tau);
    (void)params;
    check_same_grid(f.geometry(), g.geometry(), "tau_wigner");
    if (f.geometry().d != 1)
        throw ValidationError("tau_wigner is implemented for 1-D grid functions");
    if (ps_geom.d != 2) throw ValidationError("phase-space geometry must be 2-dimensional");

    const std::size_t np = ps_geom.n;
    const double hp = ps_geom.spacing();
    // y grid: half-width 1/(2 h_ps) makes the DFT bin spacing equal h_ps;
    // with n_y = n_ps the bins exactly tile the frequency axis.
    const double Ly = 1.0 / (2.0 * hp);
    const std::size_t ny = np;
    const double hy = 2.0 * Ly / static_cast<double>(ny);

    TrigInterpolator fi(f), gi(g);
    GridFunction out(ps_geom);
    const auto ax = ps_geom.axis();

    parallel_for(np, [&](std::size_t ix) {
        const double X = ax[ix] + offset[0];
        std::vector<double> fpts(ny), gpts(ny);
        for (std::size_t j = 0; j < ny; ++j) {
            const double y = -Ly + hy * static_cast<double>(j);
            fpts[j] = X + tau * y;
            gpts[j] = X - (1.0 - tau) * y;
        }
        auto fv = fi.eval_many(fpts);
        auto gv = gi.eval_many(gpts);
        std::vector<Complex> phi(ny);
        for (std::size_t j = 0; j < ny; ++j) {
            phi[j] = fv[j] * std::conj(gv[j]);
            if (offset[1] != 0.0) {
                const double y = -Ly + hy * static_cast<double>(j);
                phi[j] *= std::polar(1.0, -2.0 * M_PI * y * offset[1]);
            }
        }
        fft_1d(phi, -1);
        // W(X, m h_ps) = h_y (-1)^m DFT_m; frequency node index iw = m + n/2
        for (std::size_t i = 0; i < ny; ++i) {
            const long m = signed_bin(i, ny);
            const double sign = (m % 2 == 0) ? 1.0 : -1.0;
            const std::size_t iw = static_cast<std::size_t>(m + static_cast<long>(np) / 2);
            out[ix * np + iw] = hy * sign * phi[i];
        }
    });
    return out;
}

GridFunction tau_wigner(const GridFunction& f, const GridFunction& g, double tau) {
    GridGeometry ps{2, f.geometry().L, f.geometry().n};
    return tau_wigner(f, g, tau, ps);
}

}  // namespace modheat
