#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "modheat/fourier.hpp"
#include "modheat/presets.hpp"
#include "modheat/quantize.hpp"
#include "modheat/seminorm.hpp"

using namespace modheat;

namespace {
const GridGeometry kGeom{1, 16.0, 512};
const GridGeometry kPs{2, 16.0, 512};

GridFunction gauss_fn(double center = 0.0, double mod = 0.0) {
    return initial_data_preset("gauss", kGeom, 1.0, {center}, {mod});
}
}  // namespace

TEST_CASE("t_tau and j_map match their defining formulas") {
    const PhasePoint z = make_point(0.0, 0.0), y = make_point(2.0, 4.0);
    const PhasePoint mid = t_tau(z, y, 0.5);
    CHECK(mid.pos[0] == doctest::Approx(1.0));
    CHECK(mid.freq[0] == doctest::Approx(2.0));

    const PhasePoint same = t_tau(y, y, 0.5);
    CHECK(same.pos[0] == doctest::Approx(2.0));
    CHECK(same.freq[0] == doctest::Approx(4.0));

    const PhasePoint za = make_point(1.0, 2.0), yb = make_point(3.0, 5.0);
    const PhasePoint t0 = t_tau(za, yb, 0.0);
    CHECK(t0.pos[0] == doctest::Approx(1.0));   // (z1, y2) at tau = 0
    CHECK(t0.freq[0] == doctest::Approx(5.0));

    const PhasePoint j = j_map(make_point(1.0, 0.0));
    CHECK(j.pos[0] == doctest::Approx(0.0));
    CHECK(j.freq[0] == doctest::Approx(-1.0));
    const PhasePoint jj = j_map(j_map(za));
    CHECK(jj.pos[0] == doctest::Approx(-za.pos[0]));
    CHECK(jj.freq[0] == doctest::Approx(-za.freq[0]));
    const PhasePoint zero = j_map(make_point(0.0, 0.0));
    CHECK(zero.pos[0] == 0.0);
    CHECK(zero.freq[0] == 0.0);
}

TEST_CASE("tau parameter validation") {
    CHECK_THROWS_AS(TauParams(-0.1), ValidationError);
    CHECK_THROWS_AS(TauParams(1.1), ValidationError);
    CHECK_NOTHROW(TauParams(0.0));
    CHECK_NOTHROW(TauParams(1.0));
}

TEST_CASE("symbol presets") {
    CHECK(symbol_preset("one").eval2(3.0, -4.0) == Complex{1.0, 0.0});
    CHECK(symbol_preset("gauss").eval2(1.0, 1.0).real() == doctest::Approx(std::exp(-2.0)));
    CHECK(symbol_preset("jbracket:-2").eval2(1.0, std::sqrt(2.0)).real() ==
          doctest::Approx(0.25));
    CHECK(symbol_preset("jbracket:-2").order() == doctest::Approx(-2.0));
    CHECK(symbol_preset("sin1").eval2(M_PI / 2.0, 9.0).real() == doctest::Approx(1.0));
    CHECK_THROWS_AS(symbol_preset("nonesuch"), ValidationError);
}

TEST_CASE("sampled symbols interpolate close to their closed form") {
    GridFunction table(GridGeometry{2, 8.0, 256});
    const auto& g = table.geometry();
    for (std::size_t flat = 0; flat < table.size(); ++flat) {
        const auto z = g.node(flat);
        table[flat] = std::exp(-(z[0] * z[0] + z[1] * z[1]));
    }
    Symbol s = Symbol::sampled("gauss-sampled", 0.0, std::move(table));
    for (double u : {0.37, -1.91})
        for (double w : {0.11, 2.43}) {
            const double want = std::exp(-(u * u + w * w));
            CHECK(std::abs(s.eval2(u, w) - Complex{want, 0.0}) < 1e-5);
        }
}

TEST_CASE("tau-Wigner distribution identities") {
    GridFunction f = gauss_fn(1.0, 0.7);
    GridFunction g = gauss_fn(-0.5, -0.3);

    SUBCASE("the Weyl-case Wigner of a real function is real") {
        GridFunction realg = gauss_fn();
        GridFunction W = tau_wigner(realg, realg, 0.5, kPs);
        double imax = 0.0, mass = 0.0;
        for (const auto& v : W.values()) imax = std::max(imax, std::abs(v.imag()));
        CHECK(imax < 1e-8);
        for (const auto& v : W.values()) mass += v.real();
        mass *= kPs.cell_volume();
        CHECK(mass == doctest::Approx(realg.l2_norm() * realg.l2_norm()).epsilon(1e-6));
    }
    SUBCASE("mass identity for complex input") {
        GridFunction W = tau_wigner(f, f, 0.25, kPs);
        Complex mass = std::accumulate(W.values().begin(), W.values().end(), Complex{0, 0});
        mass *= kPs.cell_volume();
        CHECK(std::abs(mass - Complex{f.l2_norm() * f.l2_norm(), 0.0}) < 1e-6);
    }
    SUBCASE("endpoint symmetry W_0(f,g) = conj(W_1(g,f))") {
        GridFunction W0 = tau_wigner(f, g, 0.0, kPs);
        GridFunction W1 = tau_wigner(g, f, 1.0, kPs);
        double worst = 0.0;
        for (std::size_t i = 0; i < W0.size(); ++i)
            worst = std::max(worst, std::abs(W0[i] - std::conj(W1[i])));
        CHECK(worst < 1e-8);
    }
}

TEST_CASE("opt_apply closed-form cases") {
    GridFunction f = gauss_fn(0.5, 0.3);

    SUBCASE("unit symbol is the identity") {
        for (double tau : {0.0, 0.37, 1.0}) {
            GridFunction out = opt_apply(symbol_preset("one"), tau, f);
            GridFunction diff = out;
            diff -= f;
            CHECK(diff.l2_norm() / f.l2_norm() < 1e-6);
        }
    }
    SUBCASE("frequency-only symbols act as Fourier multipliers") {
        Symbol mult = Symbol::closed_form("mult", 0.0, 1, [](const std::vector<double>& z) {
            return Complex{1.0 / (1.0 + z[1] * z[1]), 0.0};
        });
        GridFunction out = opt_apply(mult, 0.7, f);
        // reference: diagonal action on the DFT bins
        std::vector<Complex> spec = f.values();
        fft_1d(spec, -1);
        for (std::size_t i = 0; i < spec.size(); ++i) {
            const double w = static_cast<double>(signed_bin(i, kGeom.n)) / (2.0 * kGeom.L);
            spec[i] *= 1.0 / (1.0 + w * w);
        }
        fft_1d(spec, +1);
        double worst = 0.0;
        for (std::size_t i = 0; i < spec.size(); ++i)
            worst = std::max(worst, std::abs(out[i] - spec[i] / double(kGeom.n)));
        CHECK(worst < 1e-6);
    }
    SUBCASE("position-only symbols at tau = 0 multiply pointwise") {
        Symbol pos = Symbol::closed_form("pos", 0.0, 1, [](const std::vector<double>& z) {
            return Complex{std::cos(z[0]), 0.0};
        });
        GridFunction out = opt_apply(pos, 0.0, f);
        const auto xs = kGeom.axis();
        double worst = 0.0;
        for (std::size_t i = 0; i < out.size(); ++i)
            worst = std::max(worst, std::abs(out[i] - std::cos(xs[i]) * f[i]));
        CHECK(worst < 1e-8);
    }
}

TEST_CASE("weak definition ties the kernel to the Wigner pairing") {
    GridFunction f = gauss_fn(1.0, 0.7);
    GridFunction g = gauss_fn(-0.5, -0.3);
    Symbol sigma = symbol_preset("gauss");
    const double tau = 0.25;

    GridFunction Tf = opt_apply(sigma, tau, f);
    const Complex lhs = Tf.inner(g);

    GridFunction W = tau_wigner(g, f, tau, kPs);
    const auto ax = kPs.axis();
    Complex rhs{0, 0};
    for (std::size_t i = 0; i < kPs.n; ++i)
        for (std::size_t j = 0; j < kPs.n; ++j)
            rhs += sigma.eval2(ax[i], ax[j]) * std::conj(W[i * kPs.n + j]);
    rhs *= kPs.cell_volume();
    CHECK(std::abs(lhs - rhs) / std::abs(lhs) < 1e-6);
}

TEST_CASE("Weyl quantization of real symbols is self-adjoint") {
    GridFunction f = gauss_fn(0.75, 0.5);
    GridFunction g = gauss_fn(-0.25, -1.0);
    Symbol sigma = symbol_preset("jbracket:-2");
    QuantKernel K(sigma, 0.5, kGeom);
    const Complex a = K.apply(f).inner(g);
    const Complex b = K.apply(g).inner(f);
    CHECK(std::abs(a - std::conj(b)) < 1e-8);
}

TEST_CASE("Gabor matrix routes") {
    Window g = gaussian_window(kGeom);

    SUBCASE("unit symbol gives the Gaussian overlap") {
        GaborAnalyzer an(symbol_preset("one"), 0.5, g, kPs);
        auto s = an.sample(make_point(0.25, 0.5), make_point(1.25, -0.5));
        const PhasePoint d = s.y - s.z;
        CHECK(std::abs(std::abs(s.direct_value) - std::exp(-M_PI * d.norm_sq() / 2.0)) < 1e-6);
        auto diag = an.sample(make_point(0.5, 0.5), make_point(0.5, 0.5));
        CHECK(std::abs(std::abs(diag.direct_value) - 1.0) < 1e-8);

        // identity route concentrates on the diagonal; the Gaussian ratio at
        // offset r is e^{pi r^2 / 2}: ~535 at r = 2, above 10^3 from r ~ 2.1
        const double on = an.identity_magnitude(make_point(0.0, 0.0), make_point(0.0, 0.0));
        const double off2 = an.identity_magnitude(make_point(0.0, 0.0), make_point(2.0, 0.0));
        CHECK(on / (off2 + 1e-300) > 5e2);
        const double off25 = an.identity_magnitude(make_point(0.0, 0.0), make_point(2.5, 0.0));
        CHECK(on / (off25 + 1e-300) > 1e3);
    }

    SUBCASE("two routes agree across a reduced pair set") {
        for (double tau : {0.25, 0.5}) {
            GaborAnalyzer an(symbol_preset("gauss"), tau, g, kPs);
            SweepSpec spec;
            spec.radii = {0.0, 1.0, 2.0};
            spec.directions = 4;
            spec.z_halfwidth = 0.0;  // z = origin only
            spec.with_identity = true;
            double worst = 0.0;
            for (const auto& s : an.sweep(spec)) {
                worst = std::max(worst, std::abs(std::abs(s.direct_value) - s.identity_magnitude) /
                                            (s.identity_magnitude + 1e-12));
            }
            CHECK(worst < 1e-5);
        }
    }

    SUBCASE("Weyl magnitude is symmetric under pair swap for real symbols") {
        GaborAnalyzer an(symbol_preset("jbracket:-2"), 0.5, g, kPs);
        const PhasePoint z = make_point(0.5, -0.75), y = make_point(-0.25, 0.5);
        auto ab = an.sample(z, y);
        auto ba = an.sample(y, z);
        CHECK(std::abs(std::abs(ab.direct_value) - std::abs(ba.direct_value)) < 1e-8);
    }
}

TEST_CASE("decay_fit") {
    SUBCASE("single diagonal sample pins C = 1") {
        GaborMatrixSample s;
        s.z = make_point(0.3, 0.3);
        s.y = s.z;
        s.direct_value = Complex{1.0, 0.0};
        s.identity_magnitude = 1.0;
        for (std::size_t N : {1u, 2u, 5u}) {
            const DecayFit fit = decay_fit({s}, 0.0, N, 0.5);
            CHECK(fit.C == doctest::Approx(1.0));
        }
        CHECK_THROWS_AS((void)decay_fit({}, 0.0, 1, 0.5), ValidationError);
    }

    SUBCASE("unit symbol: finite constants, steep off-diagonal slopes") {
        Window g = gaussian_window(kGeom);
        GaborAnalyzer an(symbol_preset("one"), 0.5, g, kPs);
        SweepSpec spec;
        spec.radii = {0.0, 0.5, 1.0, 2.0, 4.0, 8.0};
        spec.directions = 8;
        spec.z_halfwidth = 0.0;
        spec.with_identity = false;
        auto samples = an.sweep(spec);
        for (std::size_t N : {1u, 2u, 3u}) {
            const DecayFit fit = decay_fit(samples, 0.0, N, 0.5);
            CHECK(std::isfinite(fit.C));
            CHECK(fit.C > 0.0);
            CHECK(fit.slope_valid);
            CHECK(fit.slope <= -2.0 * static_cast<double>(N));
        }
    }

    SUBCASE("negative-order symbol satisfies its fitted bound everywhere") {
        Window g = gaussian_window(kGeom);
        Symbol sigma = symbol_preset("jbracket:-2");
        GaborAnalyzer an(sigma, 0.5, g, kPs);
        SweepSpec spec;
        spec.radii = {0.0, 1.0, 2.0, 4.0};
        spec.directions = 4;
        spec.z_halfwidth = 1.25;
        spec.with_identity = false;
        auto samples = an.sweep(spec);
        const std::size_t N = 1;
        const DecayFit fit = decay_fit(samples, sigma.order(), N, 0.5);
        CHECK(std::isfinite(fit.C));
        for (const auto& s : samples) {
            const PhasePoint d = s.y - s.z;
            const double bound = fit.C * std::pow(t_tau(s.z, s.y, 0.5).bracket(), sigma.order()) /
                                 std::pow(d.bracket(), 2.0 * N);
            CHECK(std::abs(s.direct_value) <= bound * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("seminorm estimators") {
    SampleBox box;
    SUBCASE("constants") {
        auto one = symbol_preset("one");
        for (std::size_t N : {0u, 2u, 3u})
            CHECK(symbol_seminorm(one, N, 0.0, box).value == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(shubin_seminorm(one, 2, box).value == doctest::Approx(1.0).epsilon(1e-10));
    }
    SUBCASE("bracket symbols normalize to one") {
        CHECK(symbol_seminorm(symbol_preset("jbracket:2"), 0, 2.0, box).value ==
              doctest::Approx(1.0).epsilon(1e-10));
        CHECK(shubin_seminorm(symbol_preset("jbracket:-2"), 0, box).value ==
              doctest::Approx(1.0).epsilon(1e-10));
    }
    SUBCASE("sine derivatives are bounded by one") {
        const auto est = symbol_seminorm(symbol_preset("sin1"), 2, 0.0, box);
        CHECK(est.value == doctest::Approx(1.0).epsilon(1e-4));
        CHECK(est.converged);
    }
    SUBCASE("Gaussian Shubin seminorm matches the analytic maximum") {
        // sup over alpha <= 1 of |D^alpha e^{-|z|^2}| <z>^{|alpha|}: the
        // gradient term is 2 r e^{-r^2} sqrt(1+r^2), maximized on a ray
        long double best = 1.0L;  // |a| itself at the origin
        for (long double r = 0.0L; r <= 4.0L; r += 1e-6L) {
            const long double v = 2.0L * r * std::exp(-r * r) * std::sqrt(1.0L + r * r);
            if (v > best) best = v;
        }
        const auto est = shubin_seminorm(symbol_preset("gauss"), 1, box);
        CHECK(est.value == doctest::Approx(static_cast<double>(best)).epsilon(1e-4));
    }
    SUBCASE("value is nondecreasing in the derivative cap") {
        auto s = symbol_preset("gauss");
        double prev = -1.0;
        for (std::size_t N : {0u, 1u, 2u, 3u}) {
            const double v = symbol_seminorm(s, N, 0.0, box).value;
            CHECK(v >= prev);
            prev = v;
        }
    }
}

TEST_CASE("ellipticity probe") {
    SampleBox box;
    CHECK(ellipticity_check(symbol_preset("jbracket:2"), 1.0, 1.0, box).satisfied);
    CHECK_FALSE(ellipticity_check(symbol_preset("one"), 1.0, 1.0, box).satisfied);

    // harmonic-oscillator symbol sqrt(|x|^2 + 4 pi^2 |xi|^2)
    Symbol osc = Symbol::closed_form("osc-root", 1.0, 1, [](const std::vector<double>& z) {
        return Complex{std::sqrt(z[0] * z[0] + 4.0 * M_PI * M_PI * z[1] * z[1]), 0.0};
    });
    const auto rep = ellipticity_check(osc, 0.7, 1.0, box);
    CHECK(rep.satisfied);
    CHECK(rep.min_ratio >= 0.7);
    MESSAGE("oscillator ellipticity margin: ", rep.min_ratio);
}

TEST_CASE("generic tau exercises the slow kernel and off-lattice identity paths") {
    // tau = 0.3 is not a small rational: the kernel falls back to per-element
    // symbol evaluation and T_tau(y,z) leaves the phase-space lattice, so the
    // identity route recomputes the Wigner window at the exact center
    const GridGeometry geom{1, 16.0, 256};
    const GridGeometry ps{2, 16.0, 256};
    Window g = gaussian_window(geom);
    GaborAnalyzer an(symbol_preset("gauss"), 0.3, g, ps);

    double worst = 0.0;
    for (double r : {0.0, 0.5, 1.0}) {
        auto s = an.sample(make_point(0.25, -0.25), make_point(0.25 + r, -0.25 + r / 2.0));
        worst = std::max(worst, std::abs(std::abs(s.direct_value) - s.identity_magnitude) /
                                    (s.identity_magnitude + 1e-12));
    }
    CHECK(worst < 1e-5);
    CHECK(!an.warnings().empty());  // off-lattice recomputation is reported
}

TEST_CASE("opt_apply warns when the symbol varies below the frequency resolution") {
    const GridGeometry geom{1, 16.0, 256};
    GridFunction f = initial_data_preset("gauss", geom);
    Symbol wild = Symbol::closed_form("wild", 0.0, 1, [](const std::vector<double>& z) {
        return Complex{std::sin(40.0 * z[1] * z[1]), 0.0};
    });
    std::vector<std::string> warnings;
    (void)opt_apply(wild, 0.5, f, &warnings);
    CHECK(!warnings.empty());

    std::vector<std::string> calm;
    (void)opt_apply(symbol_preset("gauss"), 0.5, f, &calm);
    CHECK(calm.empty());
}
