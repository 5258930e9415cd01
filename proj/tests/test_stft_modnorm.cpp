#include <cmath>
#include <random>

#include "doctest.h"
#include "modheat/modnorm.hpp"
#include "modheat/presets.hpp"

using namespace modheat;

namespace {
const GridGeometry kGeom{1, 12.0, 2048};

GridFunction gaussian(const GridGeometry& g = kGeom) { return gaussian_samples(g); }
}  // namespace

TEST_CASE("tf_shift basics") {
    GridFunction g = gaussian();
    SUBCASE("zero shift is the identity") {
        auto r = tf_shift(g, make_point(0.0, 0.0));
        CHECK(r.snap_distance == 0.0);
        for (std::size_t i : {0ul, 100ul, 1024ul}) CHECK(r.fn[i] == g[i]);
    }
    SUBCASE("norm is preserved up to boundary mass") {
        auto r = tf_shift(g, make_point(1.0, 1.0));
        CHECK(std::abs(r.fn.l2_norm() - g.l2_norm()) < 1e-10);
        CHECK(r.snap_distance <= kGeom.spacing() / 2);
    }
    SUBCASE("inner product against the window matches the Gaussian overlap") {
        auto r = tf_shift(g, make_point(1.0, 1.0));
        // <pi(z)g, g> = e^{-pi|z|^2/2} e^{i pi z1 z2} at the snapped z1
        const double z1 = r.actual.pos[0];
        const Complex want = std::exp(-M_PI * (z1 * z1 + 1.0) / 2.0) * std::polar(1.0, M_PI * z1);
        CHECK(std::abs(r.fn.inner(g) - want) < 1e-6);
    }
}

TEST_CASE("stft of the Gaussian window matches the closed form") {
    GridFunction g = gaussian();
    Window w = make_window(g);
    PhaseGrid pg = PhaseGrid::make_default(kGeom);
    STFTTable table = stft(g, w, pg);
    double worst = 0.0;
    for (std::size_t xf = 0; xf < pg.x_count(); ++xf) {
        const double x = static_cast<double>(pg.x_multi(xf)[0]) * pg.a;
        for (std::size_t wf = 0; wf < pg.w_count(); ++wf) {
            const double om = static_cast<double>(pg.w_multi(wf)[0]) * pg.b;
            const double want = std::exp(-M_PI * (x * x + om * om) / 2.0);
            worst = std::max(worst, std::abs(std::abs(table.at(xf, wf)) - want));
        }
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("stft vanishes on zero input and validates the frequency step") {
    Window w = make_window(gaussian());
    GridFunction z(kGeom);
    PhaseGrid pg = PhaseGrid::make_default(kGeom);
    STFTTable table = stft(z, w, pg);
    for (const auto& v : table.values) CHECK(v == Complex{0, 0});

    PhaseGrid bad = pg;
    bad.b = 0.3;  // not a multiple of 1/(2L) = 1/24
    CHECK_THROWS_AS((void)stft(z, w, bad), ValidationError);

    PhaseGrid wide = pg;
    wide.w_extent.assign(1, {-4000, 4000});
    CHECK_THROWS_AS((void)stft(z, w, wide), ValidationError);
}

TEST_CASE("stft covariance under lattice time-frequency shifts") {
    Window w = make_window(gaussian());
    GridFunction f = initial_data_preset("gauss", kGeom, 1.0, {0.5}, {0.25});
    PhaseGrid pg = PhaseGrid::make_default(kGeom, 0.25, 6.0, 6.0);
    STFTTable base = stft(f, w, pg);

    // shift by a whole lattice step in x and in frequency: w1 = (a, b)
    const long jshift = 4, lshift = 4;
    auto shifted = tf_shift(f, make_point(static_cast<double>(jshift) * pg.a,
                                          static_cast<double>(lshift) * pg.b));
    STFTTable moved = stft(shifted.fn, w, pg);

    double worst = 0.0;
    const auto& xe = pg.x_extent[0];
    const auto& we = pg.w_extent[0];
    for (long j = xe[0] + jshift; j <= xe[1]; ++j)
        for (long l = we[0] + lshift; l <= we[1]; ++l) {
            const std::size_t xa = static_cast<std::size_t>(j - xe[0]);
            const std::size_t wa = static_cast<std::size_t>(l - we[0]);
            const std::size_t xb = static_cast<std::size_t>(j - jshift - xe[0]);
            const std::size_t wb = static_cast<std::size_t>(l - lshift - we[0]);
            worst = std::max(worst,
                             std::abs(std::abs(moved.at(xa, wa)) - std::abs(base.at(xb, wb))));
        }
    CHECK(worst < 1e-8);
}

TEST_CASE("istft inverts the transform at the default density") {
    Window w = make_window(gaussian());
    SUBCASE("Gaussian-class inputs") {
        for (const auto& f :
             {initial_data_preset("gauss", kGeom),
              initial_data_preset("gauss", kGeom, 1.0, {3.0}, {1.5}),
              initial_data_preset("chirp", kGeom)}) {
            PhaseGrid pg = PhaseGrid::make_default(kGeom);
            GridFunction rec = istft(stft(f, w, pg), w);
            GridFunction diff = rec;
            diff -= f;
            CHECK(diff.l2_norm() / f.l2_norm() < 1e-6);
        }
    }
    SUBCASE("zero table reconstructs zero") {
        PhaseGrid pg = PhaseGrid::make_default(kGeom);
        STFTTable z{pg, kGeom, std::vector<Complex>(pg.node_count(), Complex{0, 0}), 0.0};
        GridFunction rec = istft(z, w);
        CHECK(rec.l2_norm() == 0.0);
    }
    SUBCASE("error decreases monotonically under lattice refinement") {
        GridFunction f = initial_data_preset("gauss", kGeom);
        std::vector<double> errs;
        for (double step : {1.0, 0.5, 0.25}) {
            PhaseGrid pg = PhaseGrid::make_default(kGeom, step);
            GridFunction rec = istft(stft(f, w, pg), w);
            GridFunction diff = rec;
            diff -= f;
            errs.push_back(diff.l2_norm() / f.l2_norm());
        }
        CHECK(errs[0] > errs[1]);
        CHECK(errs[1] > errs[2]);
    }
    SUBCASE("sparse lattices trigger the frame-density warning") {
        GridFunction f = initial_data_preset("gauss", kGeom);
        PhaseGrid pg = PhaseGrid::make_default(kGeom, 1.0);  // a*b ~ 1
        std::vector<std::string> warnings;
        (void)istft(stft(f, w, pg), w, &warnings);
        CHECK(!warnings.empty());
    }
}

TEST_CASE("weights evaluate to (1+|z|^2)^{s/2} and are submultiplicative") {
    CHECK(weight_eval(Weight{Weight::Kind::Full, 0.0}, make_point(3.0, -2.0)) == 1.0);
    CHECK(weight_eval(Weight{Weight::Kind::Full, 2.0}, make_point(0.0, 0.0)) == 1.0);
    // |z|^2 = 3 with s = 2 gives 4
    CHECK(weight_eval(Weight{Weight::Kind::Full, 2.0}, make_point(std::sqrt(3.0), 0.0)) ==
          doctest::Approx(4.0).epsilon(1e-14));
    // frequency-only kind ignores the position coordinate
    CHECK(weight_eval(Weight{Weight::Kind::FrequencyOnly, 2.0}, make_point(100.0, 0.0)) == 1.0);

    // Moderateness with the sharp Peetre constant: <z1+z2>^2 <= 2 <z1>^2 <z2>^2
    // holds pointwise (1 + (|a|-|b|)^2 + 2|a|^2|b|^2 >= 0), so for s >= 0
    //   v_s(z1+z2) <= 2^{s/2} v_s(z1) v_s(z2).
    // Plain submultiplicativity without the constant fails, e.g. at
    // z1 = z2 = (1/2, 0): sqrt(2) > 5/4.
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (double s : {0.0, 1.0, 2.5}) {
        const Weight w{Weight::Kind::Full, s};
        const double peetre = std::pow(2.0, 0.5 * s);
        for (int i = 0; i < 200; ++i) {
            const PhasePoint z1 = make_point(u(rng), u(rng));
            const PhasePoint z2 = make_point(u(rng), u(rng));
            const double lhs = weight_eval(w, z1 + z2);
            const double rhs = weight_eval(w, z1) * weight_eval(w, z2);
            CHECK(lhs <= peetre * rhs * (1.0 + 4e-16));
        }
        // equality case z2 = 0 needs no constant
        const PhasePoint z = make_point(1.5, -2.0);
        CHECK(weight_eval(w, z + make_point(0.0, 0.0)) <=
              weight_eval(w, z) * weight_eval(w, make_point(0.0, 0.0)) * (1.0 + 4e-16));
    }
    {
        const Weight w2{Weight::Kind::Full, 2.0};
        const PhasePoint half = make_point(0.5, 0.0);
        CHECK(weight_eval(w2, half + half) > weight_eval(w2, half) * weight_eval(w2, half));
    }
}

namespace {
STFTTable synthetic_table(double a, double b, long jmax, long lmax,
                          const std::vector<Complex>& values) {
    PhaseGrid pg;
    pg.a = a;
    pg.b = b;
    pg.x_extent.assign(1, {-jmax, jmax});
    pg.w_extent.assign(1, {-lmax, lmax});
    return STFTTable{pg, GridGeometry{1, 12.0, 64}, values, 0.0};
}
}  // namespace

TEST_CASE("mixed norm closed forms") {
    // single nonzero node
    const long jmax = 2, lmax = 2;
    const std::size_t nx = 5, nw = 5;
    std::vector<Complex> vals(nx * nw, Complex{0, 0});
    // node x = 1*a, w = -1*b -> x index 3, w index 1
    vals[3 * nw + 1] = Complex{0.0, -2.0};
    const double a = 0.5, b = 0.25;
    STFTTable t = synthetic_table(a, b, jmax, lmax, vals);
    const Weight w{Weight::Kind::Full, 1.0};
    const double wval = weight_eval(w, make_point(a, -b));

    for (double p : {1.0, 2.0, kInf})
        for (double q : {1.0, 2.0, kInf}) {
            const double xcell = std::isinf(p) ? 1.0 : std::pow(a, 1.0 / p);
            const double wcell = std::isinf(q) ? 1.0 : std::pow(b, 1.0 / q);
            CHECK(mixed_norm(t, p, q, w) ==
                  doctest::Approx(2.0 * wval * xcell * wcell).epsilon(1e-13));
        }

    SUBCASE("p = q = 2 with unit weight is the discrete L2 norm") {
        std::mt19937_64 rng(21);
        std::normal_distribution<double> nd;
        for (auto& v : vals) v = Complex{nd(rng), nd(rng)};
        STFTTable r = synthetic_table(a, b, jmax, lmax, vals);
        double l2 = 0.0;
        for (const auto& v : vals) l2 += std::norm(v);
        l2 = std::sqrt(l2 * a * b);
        CHECK(mixed_norm(r, 2.0, 2.0, Weight{}) == doctest::Approx(l2).epsilon(1e-13));
    }
    SUBCASE("exponents below one are rejected") {
        CHECK_THROWS_AS((void)mixed_norm(t, 0.5, 2.0, w), ValidationError);
        CHECK_THROWS_AS((void)mixed_norm(t, 2.0, 0.0, w), ValidationError);
    }
}

TEST_CASE("mixed-norm monotonicity in (p, q) on unit-measure lattices") {
    // With unit cells the discrete norm is a weighted l^p norm on a finite
    // index set, where the embedding inequality holds exactly.
    std::mt19937_64 rng(31);
    std::normal_distribution<double> nd;
    const Weight w{Weight::Kind::Full, 1.0};
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Complex> vals(7 * 7);
        for (auto& v : vals) v = Complex{nd(rng), nd(rng)};
        STFTTable t = synthetic_table(1.0, 1.0, 3, 3, vals);
        const double n11 = mixed_norm(t, 1.0, 1.0, w);
        const double n22 = mixed_norm(t, 2.0, 2.0, w);
        const double n2i = mixed_norm(t, 2.0, kInf, w);
        const double nii = mixed_norm(t, kInf, kInf, w);
        CHECK(n22 <= n11 * (1 + 1e-14));
        CHECK(n2i <= n22 * (1 + 1e-14));
        CHECK(nii <= n22 * (1 + 1e-14));
        CHECK(nii <= n11 * (1 + 1e-14));
    }
}

TEST_CASE("modulation norm: Moyal identity and refinement stability") {
    Window w = make_window(gaussian());
    const Weight w0{Weight::Kind::FrequencyOnly, 0.0};
    GridFunction f = initial_data_preset("gauss", kGeom, 1.0, {1.0}, {0.5});
    const double ref = f.l2_norm() * w.l2norm;
    CHECK(std::abs(mod_norm(f, w, 2.0, 2.0, w0) - ref) < 1e-6 * ref);

    GridFunction z(kGeom);
    CHECK(mod_norm(z, w, 2.0, 2.0, w0) == 0.0);

    // h0 in M^{1,1}_{v_1}: value stable to three significant digits under
    // lattice refinement
    auto basis_fn = initial_data_preset("hermite:0", kGeom);
    const Weight w1{Weight::Kind::FrequencyOnly, 1.0};
    const double coarse = mod_norm(basis_fn, w, 1.0, 1.0, w1, PhaseGrid::make_default(kGeom, 0.25));
    const double fine = mod_norm(basis_fn, w, 1.0, 1.0, w1, PhaseGrid::make_default(kGeom, 0.125));
    CHECK(std::abs(coarse - fine) / fine < 5e-4);
}

TEST_CASE("modulation norms computed with two windows stay uniformly comparable") {
    Window g1 = make_window(gaussian());
    // wider Gaussian window, normalized
    GridFunction g2v(kGeom);
    const auto xs = kGeom.axis();
    for (std::size_t i = 0; i < xs.size(); ++i)
        g2v[i] = std::exp(-M_PI * xs[i] * xs[i] / (1.3 * 1.3));
    g2v *= Complex{1.0 / g2v.l2_norm(), 0.0};
    Window g2 = make_window(g2v);

    const Weight w1{Weight::Kind::FrequencyOnly, 1.0};
    double rmin = kInf, rmax = 0.0;
    for (const auto& f :
         {initial_data_preset("gauss", kGeom), initial_data_preset("gauss", kGeom, 1.0, {2.0}),
          initial_data_preset("hermite:3", kGeom), initial_data_preset("chirp", kGeom)}) {
        const double r = mod_norm(f, g1, 1.0, 1.0, w1) / mod_norm(f, g2, 1.0, 1.0, w1);
        rmin = std::min(rmin, r);
        rmax = std::max(rmax, r);
    }
    CHECK(rmax / rmin < 10.0);  // window independence up to uniform constants
    MESSAGE("window-equivalence ratio range: ", rmin, " .. ", rmax);
}
