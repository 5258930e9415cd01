#include "modheat/quantize.hpp"

#include <algorithm>
#include <cmath>

#include "modheat/fourier.hpp"
#include "modheat/parallel.hpp"

namespace modheat {

namespace {

// best rational approximation tau ~ p/q with q <= 8, used to place the
// kernel's first symbol argument on a q-times refined axis
bool small_rational(double tau, long& p, long& q) {
    for (long den = 1; den <= 8; ++den) {
        const double num = tau * static_cast<double>(den);
        const long ni = std::lround(num);
        if (std::abs(num - static_cast<double>(ni)) < 1e-12) {
            p = ni;
            q = den;
            return true;
        }
    }
    return false;
}

}  // namespace

QuantKernel::QuantKernel(const Symbol& sigma, double tau, const GridGeometry& geom)
    : geom_(geom), tau_(tau) {
    TauParams check(tau);
    (void)check;
    if (geom.d != 1) throw ValidationError("QuantKernel is implemented for 1-D grids");
    if (sigma.spatial_dim() != 1)
        throw ValidationError("symbol dimension does not match the grid");

    const std::size_t n = geom.n;
    const double L = geom.L;
    const double dw = 1.0 / (2.0 * L);
    K_.assign(n * n, Complex{0, 0});

    // exact twiddle table: W[k] = e^{2 pi i k / n}
    std::vector<Complex> W(n);
    for (std::size_t k = 0; k < n; ++k)
        W[k] = std::polar(1.0, 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n));

    const auto xs = geom.axis();
    std::vector<long> bins(n);
    for (std::size_t i = 0; i < n; ++i) bins[i] = signed_bin(i, n);

    long p = 0, q = 0;
    const bool lattice_tau = small_rational(tau, p, q);

    // symbol values S[r][m] on the refined first axis u_r = -L + r h/q
    std::vector<Complex> table;
    if (lattice_tau) {
        const std::size_t rows = q * (n - 1) + 1;
        table.resize(rows * n);
        const double hq = geom.spacing() / static_cast<double>(q);
        parallel_for(rows, [&](std::size_t r) {
            const double u = -L + hq * static_cast<double>(r);
            for (std::size_t i = 0; i < n; ++i)
                table[r * n + i] = sigma.eval2(u, static_cast<double>(bins[i]) * dw);
        });
    }

    parallel_for(n, [&](std::size_t i) {
        std::vector<Complex> row_vals(n);
        for (std::size_t j = 0; j < n; ++j) {
            const Complex* S;
            if (lattice_tau) {
                const std::size_t r = static_cast<std::size_t>((q - p) * static_cast<long>(i) +
                                                               p * static_cast<long>(j));
                S = &table[r * n];
            } else {
                const double u = (1.0 - tau_) * xs[i] + tau_ * xs[j];
                for (std::size_t mi = 0; mi < n; ++mi)
                    row_vals[mi] = sigma.eval2(u, static_cast<double>(bins[mi]) * dw);
                S = row_vals.data();
            }
            // sum over bins with exact table phases e^{2 pi i (i-j) m / n};
            // the FFT storage index mi is congruent to the signed bin mod n,
            // so the phase index advances by (i-j) mod n at every step
            const long diff = static_cast<long>(i) - static_cast<long>(j);
            const std::size_t step = bin_index(diff, n);
            Complex acc{0, 0};
            std::size_t idx = 0;
            for (std::size_t mi = 0; mi < n; ++mi) {
                acc += S[mi] * W[idx];
                idx += step;
                if (idx >= n) idx -= n;
            }
            K_[i * n + j] = dw * acc;
        }
    });
}

GridFunction QuantKernel::apply(const GridFunction& f) const {
    check_same_grid(f.geometry(), geom_, "opt_apply");
    const std::size_t n = geom_.n;
    GridFunction out(geom_);
    const double h = geom_.spacing();
    parallel_for(n, [&](std::size_t i) {
        Complex acc{0, 0};
        const Complex* row = K_.data() + i * n;
        for (std::size_t j = 0; j < n; ++j) acc += row[j] * f[j];
        out[i] = h * acc;
    });
    return out;
}

GridFunction opt_apply(const Symbol& sigma, double tau, const GridFunction& f,
                       std::vector<std::string>* warnings) {
    if (warnings != nullptr && sigma.is_closed_form()) {
        // crude resolution probe: relative symbol variation across one
        // frequency bin, sampled over the representable band
        const auto& geom = f.geometry();
        const double dw = 1.0 / (2.0 * geom.L);
        double worst = 0.0;
        for (int i = -8; i <= 8; ++i) {
            const double w = static_cast<double>(i) * (static_cast<double>(geom.n) / 18.0) * dw;
            const double a = std::abs(sigma.eval2(0.0, w));
            const double b = std::abs(sigma.eval2(0.0, w + dw));
            worst = std::max(worst, std::abs(a - b) / (std::max(a, b) + 1e-6));
        }
        if (worst > 0.5)
            warnings->push_back("symbol varies on scales near the frequency-grid resolution");
    }
    return QuantKernel(sigma, tau, f.geometry()).apply(f);
}

GaborAnalyzer::GaborAnalyzer(Symbol sigma, double tau, Window g, GridGeometry ps_geom,
                             std::optional<GridFunction> wigner_window_cache)
    : sigma_(std::move(sigma)),
      tau_(tau),
      g_(std::move(g)),
      ps_geom_(ps_geom),
      kernel_(sigma_, tau, g_.g.geometry()),
      phi_tau_(wigner_window_cache && wigner_window_cache->geometry() == ps_geom
                   ? std::move(*wigner_window_cache)
                   : tau_wigner(g_.g, g_.g, tau, ps_geom)) {
    if (ps_geom_.d != 2) throw ValidationError("phase-space geometry must be 2-dimensional");
    const auto ax = ps_geom_.axis();
    sigma_table_.resize(ps_geom_.node_count());
    const std::size_t np = ps_geom_.n;
    parallel_for(np, [&](std::size_t i) {
        for (std::size_t j = 0; j < np; ++j)
            sigma_table_[i * np + j] = sigma_.eval2(ax[i], ax[j]);
    });
}

GaborAnalyzer::GaborAnalyzer(Symbol sigma, double tau, Window g)
    : GaborAnalyzer(std::move(sigma), tau, g,
                    GridGeometry{2, g.g.geometry().L, g.g.geometry().n}) {}

PhasePoint GaborAnalyzer::snap_point(const PhasePoint& p) const {
    const double h = g_.g.geometry().spacing();
    PhasePoint out = p;
    for (auto& v : out.pos) v = static_cast<double>(std::lround(v / h)) * h;
    return out;
}

GridFunction GaborAnalyzer::shifted_window(const PhasePoint& z) const {
    return tf_shift(g_.g, z).fn;
}

Complex GaborAnalyzer::direct(const PhasePoint& z, const PhasePoint& y) const {
    GridFunction fz = shifted_window(z);
    GridFunction fy = shifted_window(y);
    // boundary check: time-frequency shifted windows must stay inside the box
    const std::size_t n = g_.g.geometry().n;
    const double edge = std::max({std::abs(fz[0]), std::abs(fz[n - 1]), std::abs(fy[0]),
                                  std::abs(fy[n - 1])});
    if (edge > 1e-10)
        warnings_.push_back("time-frequency shift places window mass near the domain edge");
    return kernel_.apply(fz).inner(fy);
}

double GaborAnalyzer::identity_magnitude(const PhasePoint& z, const PhasePoint& y) const {
    // evaluation point of the symbol-side STFT (see header note on the order)
    const PhasePoint w = t_tau(y, z, tau_);
    const PhasePoint v = j_map(y - z);

    const std::size_t np = ps_geom_.n;
    const double hp = ps_geom_.spacing();
    const auto ax = ps_geom_.axis();

    // window center must land on the phase-space grid for the cached table
    const double i0f = (w.pos[0] + ps_geom_.L) / hp;
    const double i1f = (w.freq[0] + ps_geom_.L) / hp;
    const long i0 = std::lround(i0f), i1 = std::lround(i1f);
    const bool on_grid = std::abs(i0f - static_cast<double>(i0)) < 1e-9 &&
                         std::abs(i1f - static_cast<double>(i1)) < 1e-9;

    const long s0 = i0 - static_cast<long>(np) / 2;
    const long s1 = i1 - static_cast<long>(np) / 2;

    // V_{Phi} sigma (w, v) = h^2 sum_{a,b} sigma(u_a, u_b)
    //                        conj(Phi(u_a - w1, u_b - w2)) e^{-2 pi i (v1 u_a + v2 u_b)}
    std::vector<Complex> e1(np), e2(np);
    for (std::size_t i = 0; i < np; ++i) {
        e1[i] = std::polar(1.0, -2.0 * M_PI * v.pos[0] * ax[i]);
        e2[i] = std::polar(1.0, -2.0 * M_PI * v.freq[0] * ax[i]);
    }
    Complex acc{0, 0};
    if (on_grid) {
        // cached window table shifted by whole nodes, zero fill at the edges;
        // the sum is clipped to |u - w| <= 8.5 where the Wigner window has
        // decayed far below round-off
        const long rad = static_cast<long>(std::ceil(8.5 / hp));
        const long lo0 = std::max<long>(std::max<long>(0, s0), i0 - rad);
        const long hi0 = std::min<long>(std::min<long>(np, np + s0), i0 + rad + 1);
        const long lo1 = std::max<long>(std::max<long>(0, s1), i1 - rad);
        const long hi1 = std::min<long>(std::min<long>(np, np + s1), i1 + rad + 1);
        for (long a = lo0; a < hi0; ++a) {
            Complex rowacc{0, 0};
            const Complex* sig = sigma_table_.data() + static_cast<std::size_t>(a) * np;
            const Complex* phi =
                phi_tau_.values().data() + static_cast<std::size_t>(a - s0) * np;
            for (long b = lo1; b < hi1; ++b)
                rowacc += sig[b] * std::conj(phi[b - s1]) * e2[static_cast<std::size_t>(b)];
            acc += rowacc * e1[static_cast<std::size_t>(a)];
        }
    } else {
        // off-lattice center: recompute the Wigner window at u - w exactly
        warnings_.push_back("identity route: off-lattice center, recomputing Wigner window");
        GridFunction shifted = tau_wigner(g_.g, g_.g, tau_, ps_geom_, {-w.pos[0], -w.freq[0]});
        for (std::size_t a = 0; a < np; ++a) {
            Complex rowacc{0, 0};
            const Complex* sig = sigma_table_.data() + a * np;
            const Complex* phi = shifted.values().data() + a * np;
            for (std::size_t b = 0; b < np; ++b) rowacc += sig[b] * std::conj(phi[b]) * e2[b];
            acc += rowacc * e1[a];
        }
    }
    return std::abs(acc) * hp * hp;
}

GaborMatrixSample GaborAnalyzer::sample(const PhasePoint& z, const PhasePoint& y,
                                        bool with_identity) {
    GaborMatrixSample s;
    s.z = snap_point(z);
    s.y = snap_point(y);
    s.direct_value = direct(s.z, s.y);
    s.identity_magnitude = with_identity ? identity_magnitude(s.z, s.y) : 0.0;
    return s;
}

std::vector<GaborMatrixSample> GaborAnalyzer::sweep(const SweepSpec& spec) {
    // deterministic pair set: z on a coarse lattice, offsets on rays snapped
    // to the spec.snap lattice so that T_tau lands on the phase-space grid
    std::vector<std::pair<double, double>> deltas{{0.0, 0.0}};
    for (double r : spec.radii) {
        if (r <= 0.0) continue;
        for (std::size_t t = 0; t < spec.directions; ++t) {
            const double ang = 2.0 * M_PI * static_cast<double>(t) /
                               static_cast<double>(spec.directions);
            const double d0 = std::round(r * std::cos(ang) / spec.snap) * spec.snap;
            const double d1 = std::round(r * std::sin(ang) / spec.snap) * spec.snap;
            if (std::none_of(deltas.begin(), deltas.end(), [&](const auto& q) {
                    return q.first == d0 && q.second == d1;
                }))
                deltas.emplace_back(d0, d1);
        }
    }
    std::vector<double> zvals;
    const long zk = static_cast<long>(std::floor(spec.z_halfwidth / spec.z_step + 1e-9));
    for (long i = -zk; i <= zk; ++i)
        zvals.push_back(static_cast<double>(i) * spec.z_step);

    std::vector<GaborMatrixSample> out;
    out.reserve(zvals.size() * zvals.size() * deltas.size());
    for (double z1 : zvals)
        for (double z2 : zvals) {
            const PhasePoint z = snap_point(make_point(z1, z2));
            const GridFunction Tfz = kernel_.apply(shifted_window(z));
            for (const auto& dlt : deltas) {
                GaborMatrixSample s;
                s.z = z;
                s.y = snap_point(make_point(z1 + dlt.first, z2 + dlt.second));
                s.direct_value = Tfz.inner(shifted_window(s.y));
                s.identity_magnitude =
                    spec.with_identity ? identity_magnitude(s.z, s.y) : 0.0;
                out.push_back(std::move(s));
            }
        }
    return out;
}

DecayFit decay_fit(const std::vector<GaborMatrixSample>& samples, double m, std::size_t N,
                   double tau) {
    if (samples.empty()) throw ValidationError("decay_fit needs at least one sample");
    DecayFit fit;
    fit.sample_count = samples.size();
    fit.corollary_valid = tau > 0.0 && tau < 1.0;

    std::vector<std::pair<double, double>> radius_max;  // (r, max |M|)
    for (const auto& s : samples) {
        const PhasePoint diff = s.y - s.z;
        const double r = diff.norm();
        const double mag = std::abs(s.direct_value);
        const double bracket_diff = diff.bracket();
        const double bracket_mid = t_tau(s.z, s.y, tau).bracket();
        const double ratio =
            mag * std::pow(bracket_diff, 2.0 * static_cast<double>(N)) * std::pow(bracket_mid, -m);
        fit.C = std::max(fit.C, ratio);
        if (fit.corollary_valid) {
            const double bracket_sum = (s.z + s.y).bracket();
            fit.corollary_C = std::max(fit.corollary_C,
                                       mag * std::pow(bracket_diff, 2.0 * static_cast<double>(N)) *
                                           std::pow(bracket_sum, -m));
        }
        auto it = std::find_if(radius_max.begin(), radius_max.end(), [&](const auto& q) {
            return std::abs(q.first - r) < 1e-6;
        });
        if (it == radius_max.end())
            radius_max.emplace_back(r, mag);
        else
            it->second = std::max(it->second, mag);
    }

    // least-squares slope of ln max|M| against ln r over r in [2, 8]
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t cnt = 0;
    for (const auto& [r, mag] : radius_max) {
        if (r < 2.0 - 1e-9 || r > 8.0 + 1e-9) continue;
        const double lx = std::log(r);
        const double ly = std::log(std::max(mag, 1e-300));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++cnt;
    }
    if (cnt >= 2) {
        const double det = static_cast<double>(cnt) * sxx - sx * sx;
        fit.slope = (static_cast<double>(cnt) * sxy - sx * sy) / det;
        fit.slope_valid = true;
    }
    return fit;
}

Complex gabor_matrix_direct(const Symbol& sigma, double tau, const Window& g,
                            const PhasePoint& z, const PhasePoint& y) {
    GaborAnalyzer an(sigma, tau, g);
    auto s = an.sample(z, y, false);
    return s.direct_value;
}

double gabor_matrix_identity(const Symbol& sigma, double tau, const Window& g,
                             const PhasePoint& z, const PhasePoint& y) {
    GaborAnalyzer an(sigma, tau, g);
    auto s = an.sample(z, y, true);
    return s.identity_magnitude;
}

}  // namespace modheat
