#include <cmath>

#include "doctest.h"
#include "modheat/evolution.hpp"
#include "modheat/presets.hpp"

using namespace modheat;

namespace {
BasisPtr small_basis() { return make_basis(1, 32, 12.0, 256); }
}  // namespace

TEST_CASE("nonlinearity evaluation") {
    SUBCASE("F(0) = 0 for every kind") {
        CHECK(Nonlinearity::power(Complex{2, 1}, 3)(Complex{0, 0}) == Complex{0, 0});
        Nonlinearity::SeriesTable t{{{1, 2}, Complex{1, 0}}};
        CHECK(Nonlinearity::series(t)(Complex{0, 0}) == Complex{0, 0});
    }
    SUBCASE("power arithmetic: lambda=1, k=1 on a constant patch of 2") {
        GridFunction u(GridGeometry{1, 4.0, 16});
        for (std::size_t i = 4; i < 8; ++i) u[i] = Complex{2.0, 0.0};
        GridFunction out = eval_nonlinearity(u, Nonlinearity::power(Complex{1, 0}, 1));
        CHECK(out[5] == Complex{8.0, 0.0});  // |2|^2 * 2
        CHECK(out[0] == Complex{0.0, 0.0});
    }
    SUBCASE("series with only c_{10} = 1 is the identity map") {
        Nonlinearity::SeriesTable t{{{1, 0}, Complex{1, 0}}};
        auto F = Nonlinearity::series(t);
        CHECK(F(Complex{0.3, -0.7}) == Complex{0.3, -0.7});
    }
    SUBCASE("series with c_{00} != 0 is rejected") {
        Nonlinearity::SeriesTable t{{{0, 0}, Complex{1, 0}}};
        CHECK_THROWS_AS(Nonlinearity::series(t), ValidationError);
    }
    SUBCASE("cubic gauge: lambda|u|^{2k}u against the explicit product") {
        const Complex u{0.4, -0.9};
        const Complex lam{0.0, 2.0};
        const Complex want = lam * std::norm(u) * std::norm(u) * u;
        CHECK(std::abs(Nonlinearity::power(lam, 2)(u) - want) < 1e-15);
    }
}

TEST_CASE("duhamel quadrature closed forms") {
    auto basis = small_basis();
    const TimeGrid tg{1.0, 48};
    const auto& idx = basis->indices();

    Trajectory zero{tg, {}}, constant{tg, {}}, linear{tg, {}};
    for (std::size_t i = 0; i <= tg.M; ++i) {
        zero.states.push_back(zero_field(basis));
        SpectralField ones = zero_field(basis);
        for (auto& v : ones.coeffs) v = Complex{1, 0};
        constant.states.push_back(ones);
        SpectralField lin = ones;
        lin *= Complex{tg.node(i), 0.0};
        linear.states.push_back(lin);
    }

    for (double beta : {0.5, 1.0}) {
        SpectralField bz = duhamel(zero, tg.M, beta);
        for (const auto& v : bz.coeffs) CHECK(v == Complex{0, 0});

        SpectralField bc = duhamel(constant, tg.M, beta);
        SpectralField bl = duhamel(linear, tg.M, beta);
        for (std::size_t c = 0; c < bc.coeffs.size(); ++c) {
            const double lam = eigenvalue(idx[c].order(), 1, beta);
            const double e = std::exp(-lam * tg.T);
            CHECK(std::abs(bc.coeffs[c] - Complex{(1.0 - e) / lam, 0.0}) < 1e-10);
            CHECK(std::abs(bl.coeffs[c] - Complex{(tg.T - (1.0 - e) / lam) / lam, 0.0}) < 1e-10);
        }
    }
    CHECK_THROWS_AS((void)duhamel(zero, tg.M + 1, 1.0), ValidationError);
}

TEST_CASE("picard fixed point") {
    auto basis = small_basis();
    SpectralField u0 = unit_field(basis, 0);
    u0 *= Complex{0.1, 0.0};
    const Nonlinearity cubic = Nonlinearity::power(Complex{-1, 0}, 1);

    SUBCASE("zero nonlinearity converges immediately to the linear flow") {
        auto res = picard_solve(u0, Nonlinearity::zero(), 1.0, 0.5, 32);
        CHECK(res.report.converged);
        CHECK(res.report.iterates == 1);
        REQUIRE(res.report.diffs.size() == 1);
        CHECK(res.report.diffs[0] == 0.0);
        // F = 0 path equals the semigroup at every node
        for (std::size_t i = 0; i <= 32; ++i) {
            SpectralField want = apply_semigroup(u0, res.trajectory.grid.node(i), 1.0);
            SpectralField d = res.trajectory.states[i];
            d -= want;
            CHECK(d.l2_norm() < 1e-12);
        }
    }
    SUBCASE("zero data stays exactly zero") {
        SpectralField z = zero_field(basis);
        auto res = picard_solve(z, cubic, 1.0, 0.5, 16);
        CHECK(res.report.converged);
        for (const auto& st : res.trajectory.states)
            for (const auto& v : st.coeffs) CHECK(v == Complex{0, 0});
    }
    SUBCASE("small data converges with strong contraction") {
        auto res = picard_solve(u0, cubic, 1.0, 0.1, 64);
        CHECK(res.report.converged);
        CHECK(res.report.iterates <= 8);
        for (double r : res.report.ratios) CHECK(r <= 0.5);
        // fixed-point residual below twice the tolerance
        Trajectory next = picard_step(res.trajectory, u0, cubic, 1.0);
        double resid = 0.0;
        for (std::size_t i = 0; i < next.states.size(); ++i) {
            SpectralField d = next.states[i];
            d -= res.trajectory.states[i];
            resid = std::max(resid, d.l2_norm());
        }
        CHECK(resid < 2e-10);
    }
    SUBCASE("energy decays for the dissipative cubic at beta = 1") {
        SpectralField big = unit_field(basis, 0);
        big *= Complex{0.5, 0.0};
        auto res = picard_solve(big, cubic, 1.0, 0.2, 64);
        double prev = res.trajectory.states[0].l2_norm();
        for (std::size_t i = 1; i < res.trajectory.states.size(); ++i) {
            const double cur = res.trajectory.states[i].l2_norm();
            CHECK(cur <= prev + 1e-6);
            prev = cur;
        }
    }
    SUBCASE("one Picard step on the linear flow matches perturbation scaling") {
        // distance between the first iterate and the fixed point shrinks
        // like the cube of the data (next order of the expansion)
        std::vector<double> errs;
        for (double scale : {0.05, 0.1, 0.2}) {
            SpectralField d0 = unit_field(basis, 0);
            d0 *= Complex{scale, 0.0};
            auto full = picard_solve(d0, cubic, 1.0, 0.1, 32);
            Trajectory lin = linear_trajectory(d0, 1.0, full.trajectory.grid);
            Trajectory one = picard_step(lin, d0, cubic, 1.0);
            double err = 0.0;
            for (std::size_t i = 0; i < one.states.size(); ++i) {
                SpectralField d = one.states[i];
                d -= full.trajectory.states[i];
                err = std::max(err, d.l2_norm());
            }
            errs.push_back(err);
        }
        // log-log slope across the doublings should be close to 5 (the
        // next term of the cubic expansion); demand at least quartic
        const double slope = std::log(errs[2] / errs[0]) / std::log(4.0);
        CHECK(slope >= 3.8);
    }
    SUBCASE("large data raises a non-convergence error with a growing tail") {
        SpectralField big = unit_field(basis, 0);
        big *= Complex{100.0, 0.0};
        try {
            (void)picard_solve(big, cubic, 1.0, 0.1, 64, 1e-10, 12);
            FAIL("expected ConvergenceError");
        } catch (const ConvergenceError& e) {
            CHECK_FALSE(e.report.converged);
            REQUIRE(e.report.diffs.size() >= 2);
            bool grew = false;
            for (std::size_t i = 1; i < e.report.diffs.size(); ++i)
                if (!(e.report.diffs[i] <= e.report.diffs[i - 1])) grew = true;
            CHECK(grew);
        }
    }
}

TEST_CASE("local time search") {
    auto basis = small_basis();
    SpectralField u0 = unit_field(basis, 0);
    u0 *= Complex{1.5, 0.0};

    SUBCASE("linear flow reaches the upper bisection bound") {
        auto res = local_time_search(u0, Nonlinearity::zero(), 1.0, 0.5, 16, 1e-9);
        CHECK(res.T_est == doctest::Approx(1.0));
        CHECK(res.any_converged);
    }
    SUBCASE("zero data is rejected") {
        CHECK_THROWS_AS(
            (void)local_time_search(zero_field(basis), Nonlinearity::zero(), 1.0), ValidationError);
    }
    SUBCASE("stronger nonlinearities and larger data shrink the horizon") {
        const auto k1 = Nonlinearity::power(Complex{-1, 0}, 1);
        const auto k2 = Nonlinearity::power(Complex{-1, 0}, 2);
        auto t_k1 = local_time_search(u0, k1, 1.0, 0.5, 16, 1e-9);
        auto t_k2 = local_time_search(u0, k2, 1.0, 0.5, 16, 1e-9);
        CHECK(t_k2.T_est <= t_k1.T_est);

        SpectralField u0big = u0;
        u0big *= Complex{2.0, 0.0};
        auto t_big = local_time_search(u0big, k1, 1.0, 0.5, 16, 1e-9);
        CHECK(t_big.T_est <= t_k1.T_est);
    }
}

TEST_CASE("lipschitz probe") {
    auto basis = small_basis();
    SpectralField u0 = unit_field(basis, 0);
    u0 *= Complex{0.1, 0.0};
    const Nonlinearity cubic = Nonlinearity::power(Complex{-1, 0}, 1);

    CHECK(lipschitz_probe(u0, u0, cubic, 1.0, 0.1) == 0.0);

    SpectralField v0 = u0;
    v0.coeffs[1] += Complex{1e-3, 0.0};
    CHECK(lipschitz_probe(u0, v0, Nonlinearity::zero(), 1.0, 0.5) <= 1.0 + 1e-12);
    CHECK(lipschitz_probe(u0, v0, cubic, 1.0, 0.1) <= 2.2);
}

TEST_CASE("semigroup bound probe at (2,2,0)") {
    const GridGeometry geom{1, 12.0, 1024};
    auto basis = make_basis(1, 32, geom.L, geom.n);
    const Window g = gaussian_window(geom);
    const PhaseGrid lattice = PhaseGrid::make_default(geom);
    auto fns = gaussian_class_test_set(geom, 3, 17);

    auto res = semigroup_bound_probe(2.0, 2.0, 0.0, 1.0, fns, {0.0, 0.5, 1.0}, basis, g, lattice);
    CHECK(res.C_emp <= 1.0 + 1e-6);
    // the t = 0 rows are pure basis projections: ratio = 1 up to the
    // analysis/synthesis round-trip (truncation) error of the test family
    for (const auto& row : res.rows)
        if (row.t == 0.0) CHECK(row.ratio == doctest::Approx(1.0).epsilon(1e-3));
    CHECK_THROWS_AS((void)semigroup_bound_probe(2.0, 2.0, 0.0, 1.0, std::vector<GridFunction>{},
                                                std::vector<double>{0.0}, basis, g, lattice),
                    ValidationError);
    // the (T, test_set) overload spans [0, T] with five nodes
    auto overT = semigroup_bound_probe(2.0, 2.0, 0.0, 1.0, 1.0, fns, basis, g, lattice);
    CHECK(overT.rows.size() == fns.size() * 5);
    CHECK(overT.C_emp <= 1.0 + 1e-6);
}
