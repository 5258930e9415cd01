// Named verification suites. Each suite re-derives a quantitative statement
// from an independent route (closed forms, dual computations, high-order
// reference integrators) and reports one pass/fail line per check.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "modheat/evolution.hpp"

namespace modheat {

struct VerifyCheck {
    std::string name;
    double target = 0.0;
    double measured = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerifyReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<VerifyCheck> checks;
    std::vector<std::string> notes;
    bool overall = false;

    std::string to_json() const;  // deterministic serialization
};

// the fixed registry: {hermite, semigroup, moyal-inversion, lemma41,
// gbsm-decay, thm31-bound, picard-contraction, duhamel}
std::vector<std::pair<std::string, std::string>> list_suites();

// throws ValidationError for unknown suite names
VerifyReport run_suite(const std::string& name, std::uint64_t seed = 0);

namespace oracle {

// Fourth-order exponential time differencing (diagonal linear part) for
// dc/dt = -Lambda c + F(c); the reference integrator of the Picard suite.
SpectralField etdrk4_solve(const SpectralField& u0, const Nonlinearity& F, double beta, double T,
                           std::size_t M);

// Backward-Euler time stepping of du/dt = -(-u'' + x^2 u) with a 4th-order
// finite-difference Laplacian, Richardson-extrapolated in the step size:
// a reference route for the heat propagator that shares nothing with the
// eigenbasis path. d = 1 only, beta = 1.
GridFunction heat_fd_solve(const GridFunction& u0, double t, std::size_t M);

}  // namespace oracle

}  // namespace modheat
