#include "modheat/stft.hpp"

#include <cmath>

#include "modheat/fourier.hpp"
#include "modheat/parallel.hpp"

namespace modheat {

Window make_window(GridFunction g) {
    const double nrm = g.l2_norm();
    if (!(nrm > 0.0)) throw ValidationError("window must be non-zero");
    return Window{std::move(g), nrm};
}

GridFunction gaussian_samples(const GridGeometry& geom) {
    GridFunction g(geom);
    const double amp = std::pow(2.0, static_cast<double>(geom.d) / 4.0);
    for (std::size_t flat = 0; flat < g.size(); ++flat) {
        const auto x = geom.node(flat);
        double q = 0.0;
        for (double xi : x) q += xi * xi;
        g[flat] = amp * std::exp(-M_PI * q);
    }
    return g;
}

Window gaussian_window(const GridGeometry& geom) { return make_window(gaussian_samples(geom)); }

std::size_t PhaseGrid::x_count() const {
    std::size_t c = 1;
    for (const auto& e : x_extent) c *= static_cast<std::size_t>(e[1] - e[0] + 1);
    return c;
}

std::size_t PhaseGrid::w_count() const {
    std::size_t c = 1;
    for (const auto& e : w_extent) c *= static_cast<std::size_t>(e[1] - e[0] + 1);
    return c;
}

namespace {
std::vector<long> unflatten_extent(std::size_t flat,
                                   const std::vector<std::array<long, 2>>& ext) {
    std::vector<long> out(ext.size());
    for (std::size_t ax = ext.size(); ax-- > 0;) {
        const std::size_t len = static_cast<std::size_t>(ext[ax][1] - ext[ax][0] + 1);
        out[ax] = ext[ax][0] + static_cast<long>(flat % len);
        flat /= len;
    }
    return out;
}
}  // namespace

std::vector<long> PhaseGrid::x_multi(std::size_t flat) const {
    return unflatten_extent(flat, x_extent);
}
std::vector<long> PhaseGrid::w_multi(std::size_t flat) const {
    return unflatten_extent(flat, w_extent);
}

PhaseGrid PhaseGrid::make_default(const GridGeometry& geom, double step, double x_halfwidth,
                                  double w_halfwidth) {
    if (!(step > 0.0)) throw ValidationError("lattice step must be positive");
    PhaseGrid pg;
    const double h = geom.spacing();
    const long samples = std::max<long>(1, std::lround(step / h));
    pg.a = static_cast<double>(samples) * h;
    const long bins = std::max<long>(1, std::lround(step * 2.0 * geom.L));
    pg.b = static_cast<double>(bins) / (2.0 * geom.L);

    const double xh = std::min(x_halfwidth, geom.L - 1.0);
    long jmax = static_cast<long>(std::floor(xh / pg.a + 1e-9));
    long lmax = static_cast<long>(std::floor(w_halfwidth / pg.b + 1e-9));
    // keep requested bins strictly below Nyquist
    const long max_bins = static_cast<long>(geom.n) / 2 - 1;
    lmax = std::min(lmax, max_bins / bins);
    pg.x_extent.assign(geom.d, {-jmax, jmax});
    pg.w_extent.assign(geom.d, {-lmax, lmax});
    return pg;
}

TfShiftResult tf_shift(const GridFunction& g, const PhasePoint& z) {
    const auto& geom = g.geometry();
    if (z.dim() != geom.d) throw ValidationError("phase point dimension mismatch");
    const double h = geom.spacing();
    std::vector<long> shift(geom.d);
    PhasePoint actual = z;
    double snap = 0.0;
    for (std::size_t ax = 0; ax < geom.d; ++ax) {
        shift[ax] = std::lround(z.pos[ax] / h);
        actual.pos[ax] = static_cast<double>(shift[ax]) * h;
        snap = std::max(snap, std::abs(actual.pos[ax] - z.pos[ax]));
    }
    GridFunction out = shift_samples(g, shift);
    for (std::size_t flat = 0; flat < out.size(); ++flat) {
        const auto y = geom.node(flat);
        double phase = 0.0;
        for (std::size_t ax = 0; ax < geom.d; ++ax) phase += z.freq[ax] * y[ax];
        out[flat] *= std::polar(1.0, 2.0 * M_PI * phase);
    }
    return TfShiftResult{std::move(out), std::move(actual), snap};
}

namespace {
// integer bin count of b, validated against the DFT bin spacing 1/(2L)
long frequency_bins(double b, const GridGeometry& geom) {
    const double r = b * 2.0 * geom.L;
    const long ri = std::lround(r);
    if (ri < 1 || std::abs(r - static_cast<double>(ri)) > 1e-9)
        throw ValidationError("frequency step b = " + std::to_string(b) +
                              " is not a multiple of the DFT bin spacing 1/(2L)");
    return ri;
}
}  // namespace

STFTTable stft(const GridFunction& f, const Window& g, const PhaseGrid& grid) {
    const auto& geom = f.geometry();
    check_same_grid(geom, g.g.geometry(), "stft");
    if (grid.dim() != geom.d) throw ValidationError("phase grid dimension mismatch");
    const long bins = frequency_bins(grid.b, geom);
    for (const auto& e : grid.w_extent) {
        const long worst = std::max(std::labs(e[0]), std::labs(e[1])) * bins;
        if (worst > static_cast<long>(geom.n) / 2 - 1)
            throw ValidationError("frequency extent exceeds the grid Nyquist band");
    }

    const double h = geom.spacing();
    const std::size_t xc = grid.x_count(), wc = grid.w_count();
    STFTTable table{grid, geom, std::vector<Complex>(xc * wc), 0.0};
    const double hd = geom.cell_volume();

    std::vector<double> snap_err(xc, 0.0);
    parallel_for(xc, [&](std::size_t xf) {
        const auto j = grid.x_multi(xf);
        std::vector<long> shift(geom.d);
        double snap = 0.0;
        for (std::size_t ax = 0; ax < geom.d; ++ax) {
            const double want = static_cast<double>(j[ax]) * grid.a;
            shift[ax] = std::lround(want / h);
            snap = std::max(snap, std::abs(want - static_cast<double>(shift[ax]) * h));
        }
        snap_err[xf] = snap;
        GridFunction tg = shift_samples(g.g, shift);
        std::vector<Complex> phi(f.size());
        for (std::size_t i = 0; i < phi.size(); ++i) phi[i] = f[i] * std::conj(tg[i]);
        fft_nd(phi, geom.d, geom.n, -1);
        for (std::size_t wf = 0; wf < wc; ++wf) {
            const auto l = grid.w_multi(wf);
            std::size_t bin = 0;
            long msum = 0;
            for (std::size_t ax = 0; ax < geom.d; ++ax) {
                const long m = l[ax] * bins;
                msum += m;
                bin = bin * geom.n + bin_index(m, geom.n);
            }
            const double sign = (msum % 2 == 0) ? 1.0 : -1.0;
            table.values[xf * wc + wf] = hd * sign * phi[bin];
        }
    });
    for (double s : snap_err) table.max_snap_error = std::max(table.max_snap_error, s);
    return table;
}

Complex stft_point(const GridFunction& f, const Window& g, const PhasePoint& zw) {
    const auto& geom = f.geometry();
    check_same_grid(geom, g.g.geometry(), "stft_point");
    PhasePoint translate{zw.pos, std::vector<double>(geom.d, 0.0)};
    auto shifted = tf_shift(g.g, translate);
    Complex acc{0.0, 0.0};
    for (std::size_t flat = 0; flat < f.size(); ++flat) {
        const auto y = geom.node(flat);
        double phase = 0.0;
        for (std::size_t ax = 0; ax < geom.d; ++ax) phase += zw.freq[ax] * y[ax];
        acc += f[flat] * std::conj(shifted.fn[flat]) * std::polar(1.0, -2.0 * M_PI * phase);
    }
    return acc * geom.cell_volume();
}

GridFunction istft(const STFTTable& table, const Window& g, std::vector<std::string>* warnings) {
    const auto& geom = table.source;
    check_same_grid(geom, g.g.geometry(), "istft");
    const auto& grid = table.grid;
    if (grid.density() > 0.5 + 1e-12 && warnings != nullptr)
        warnings->push_back("phase-grid density a*b = " + std::to_string(grid.density()) +
                            " exceeds 1/2; reconstruction may be inaccurate");
    const long bins = frequency_bins(grid.b, geom);
    const double h = geom.spacing();
    const std::size_t xc = grid.x_count(), wc = grid.w_count();

    // Accumulate into a fixed number of buckets so the summation order (and
    // hence the bits of the result) do not depend on the worker count.
    constexpr std::size_t kBuckets = 16;
    std::vector<GridFunction> partial(kBuckets, GridFunction(geom));
    const std::size_t chunk = (xc + kBuckets - 1) / kBuckets;
    parallel_for(kBuckets, [&](std::size_t w) {
        const std::size_t lo = w * chunk, hi = std::min(xc, lo + chunk);
        std::vector<Complex> spec(geom.node_count());
        for (std::size_t xf = lo; xf < hi; ++xf) {
            const auto j = grid.x_multi(xf);
            std::vector<long> shift(geom.d);
            for (std::size_t ax = 0; ax < geom.d; ++ax)
                shift[ax] = std::lround(static_cast<double>(j[ax]) * grid.a / h);
            std::fill(spec.begin(), spec.end(), Complex{0, 0});
            for (std::size_t wf = 0; wf < wc; ++wf) {
                const auto l = grid.w_multi(wf);
                std::size_t bin = 0;
                long msum = 0;
                for (std::size_t ax = 0; ax < geom.d; ++ax) {
                    const long m = l[ax] * bins;
                    msum += m;
                    bin = bin * geom.n + bin_index(m, geom.n);
                }
                const double sign = (msum % 2 == 0) ? 1.0 : -1.0;
                spec[bin] += sign * table.values[xf * wc + wf];
            }
            fft_nd(spec, geom.d, geom.n, +1);  // psi(t) = sum_l V e^{2 pi i w t}
            GridFunction tg = shift_samples(g.g, shift);
            auto& acc = partial[w];
            for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += spec[i] * tg[i];
        }
    });

    GridFunction rec(geom);
    for (const auto& p : partial) rec += p;
    double cell = 1.0;
    for (std::size_t ax = 0; ax < geom.d; ++ax) cell *= grid.a * grid.b;
    rec *= Complex{cell / (g.l2norm * g.l2norm), 0.0};
    return rec;
}

}  // namespace modheat
