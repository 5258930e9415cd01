#include <cmath>
#include <random>

#include "doctest.h"
#include "modheat/semigroup.hpp"
#include "modheat/verify.hpp"

using namespace modheat;

TEST_CASE("eigenvalues follow (2k+d)^beta") {
    CHECK(eigenvalue(0, 1, 1.0) == doctest::Approx(1.0));
    CHECK(eigenvalue(2, 3, 1.0) == doctest::Approx(7.0));
    CHECK(eigenvalue(2, 3, 0.5) == doctest::Approx(std::sqrt(7.0)));
    MultiIndex alpha{{1, 0, 1}};
    CHECK(eigenvalue(alpha, 3, 1.0) == doctest::Approx(7.0));
}

TEST_CASE("beta outside (0,1] and negative times are rejected") {
    CHECK_THROWS_AS(eigenvalue(1, 1, 0.0), ValidationError);
    CHECK_THROWS_AS(eigenvalue(1, 1, 1.5), ValidationError);
    CHECK_THROWS_AS(eigenvalue(1, 1, -0.3), ValidationError);
    auto basis = make_basis(1, 4, 8.0, 64);
    SpectralField c = unit_field(basis, 0);
    CHECK_THROWS_AS(apply_semigroup(c, -0.1, 1.0), ValidationError);
}

TEST_CASE("t = 0 is the exact identity") {
    auto basis = make_basis(1, 16, 10.0, 128);
    std::mt19937_64 rng(2);
    std::normal_distribution<double> nd;
    SpectralField c = zero_field(basis);
    for (auto& v : c.coeffs) v = Complex{nd(rng), nd(rng)};
    SpectralField r = apply_semigroup(c, 0.0, 0.25);
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) CHECK(r.coeffs[i] == c.coeffs[i]);
}

TEST_CASE("single eigenmode decays by exp(-t lambda)") {
    auto basis = make_basis(1, 8, 8.0, 128);
    SpectralField c = unit_field(basis, 0);
    SpectralField r = apply_semigroup(c, 1.0, 1.0);
    CHECK(r.coeffs[0].real() == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
}

TEST_CASE("semigroup law, contraction and monotone decay") {
    auto basis = make_basis(1, 32, 12.0, 64);
    std::mt19937_64 rng(4);
    std::normal_distribution<double> nd;
    SpectralField c = zero_field(basis);
    for (auto& v : c.coeffs) v = Complex{nd(rng), nd(rng)};
    c *= Complex{1.0 / c.l2_norm(), 0.0};

    double law = 0.0;
    for (double beta : {0.25, 0.5, 1.0})
        for (double t : {0.1, 0.5, 1.0})
            for (double s : {0.1, 0.5, 1.0}) {
                auto two = apply_semigroup(apply_semigroup(c, t, beta), s, beta);
                auto one = apply_semigroup(c, t + s, beta);
                for (std::size_t i = 0; i < c.coeffs.size(); ++i)
                    law = std::max(law, std::abs(two.coeffs[i] - one.coeffs[i]));
            }
    CHECK(law < 1e-12);

    double prev = c.l2_norm();
    for (double t : {0.1, 0.3, 0.7, 1.2}) {
        const double cur = apply_semigroup(c, t, 0.5).l2_norm();
        CHECK(cur <= prev);
        CHECK(cur < prev);  // strict for c != 0
        prev = cur;
    }
}

TEST_CASE("propagate reproduces eigenfunction decay and the t=0 round trip") {
    auto basis = make_basis(1, 32, 12.0, 2048);
    GridFunction h0 = basis->eigenfunction(0);

    GridFunction ut = propagate(h0, 0.5, 1.0, basis);
    GridFunction want = h0;
    want *= Complex{std::exp(-0.5), 0.0};
    GridFunction diff = ut;
    diff -= want;
    CHECK(diff.l2_norm() / want.l2_norm() < 1e-6);

    GridFunction round = propagate(h0, 0.0, 1.0, basis);
    GridFunction rdiff = round;
    rdiff -= h0;
    CHECK(rdiff.l2_norm() < 1e-10);
}

TEST_CASE("propagate agrees with the finite-difference backward-Euler oracle") {
    auto basis = make_basis(1, 32, 12.0, 2048);
    GridFunction u0(basis->geometry());
    const auto xs = basis->geometry().axis();
    for (std::size_t i = 0; i < xs.size(); ++i) u0[i] = std::exp(-M_PI * xs[i] * xs[i]);

    GridFunction spectral = propagate(u0, 0.3, 1.0, basis);
    GridFunction fd = oracle::heat_fd_solve(u0, 0.3, 2048);
    GridFunction diff = spectral;
    diff -= fd;
    CHECK(diff.l2_norm() / fd.l2_norm() < 1e-4);
}
