// Semilinear Cauchy machinery: the Duhamel operator B = int_0^t K_beta(t-s) ds
// realized per eigenmode by exponential quadrature (exact on piecewise-linear
// forcing interpolants, stable for arbitrarily stiff modes), Picard iteration
// on u = K_beta(t) u0 + B F(u), and the empirical probes for the semigroup
// bound and the Lipschitz data-to-solution map.
#pragma once

#include <cstdint>
#include <vector>

#include "modheat/modnorm.hpp"
#include "modheat/nonlinearity.hpp"
#include "modheat/semigroup.hpp"

namespace modheat {

struct TimeGrid {
    double T = 1.0;
    std::size_t M = 64;

    double dt() const { return T / static_cast<double>(M); }
    double node(std::size_t i) const { return T * static_cast<double>(i) / static_cast<double>(M); }
    void validate() const {
        if (!(T > 0.0)) throw ValidationError("time horizon T must be positive");
        if (M < 1) throw ValidationError("time grid needs at least one step");
    }
    bool operator==(const TimeGrid&) const = default;
};

struct Trajectory {
    TimeGrid grid;
    std::vector<SpectralField> states;  // M + 1 nodes, shared basis
};

struct ContractionReport {
    std::size_t iterates = 0;
    std::vector<double> diffs;   // sup-in-time l2 coefficient differences
    std::vector<double> ratios;  // successive quotients where defined
    bool converged = false;
};

struct ConvergenceError : Error {
    ContractionReport report;
    ConvergenceError(const std::string& msg, ContractionReport r)
        : Error(msg), report(std::move(r)) {}
};

// B applied to a coefficient trajectory, evaluated at node t_index
SpectralField duhamel(const Trajectory& forcing, std::size_t t_index, double beta);
// all nodes at once via the prefix recursion (same quadrature)
Trajectory duhamel_all(const Trajectory& forcing, double beta);

Trajectory linear_trajectory(const SpectralField& u0, double beta, const TimeGrid& tg);

// one fixed-point update: K(t_i) u0 + B F(current)(t_i); the nonlinearity is
// evaluated through the synthesize -> F -> analyze sandwich at each node
Trajectory picard_step(const Trajectory& current, const SpectralField& u0,
                       const Nonlinearity& F, double beta);

struct PicardResult {
    Trajectory trajectory;
    ContractionReport report;
};

// Throws ConvergenceError (carrying the report) when the iteration fails to
// contract within max_iter or the iterates blow up.
PicardResult picard_solve(const SpectralField& u0, const Nonlinearity& F, double beta, double T,
                          std::size_t M, double tol = 1e-10, std::size_t max_iter = 25);

struct TimeSearchResult {
    double T_est = 0.0;
    bool any_converged = false;
    std::vector<std::pair<double, ContractionReport>> probes;
};

// bisection over T in [2^-10, 1]: largest probed horizon whose Picard run
// converges with contraction ratios <= target_ratio from the second iterate
TimeSearchResult local_time_search(const SpectralField& u0, const Nonlinearity& F, double beta,
                                   double target_ratio = 0.5, std::size_t M = 64,
                                   double tol = 1e-10, std::size_t max_iter = 25);

// sup-in-time trajectory distance over the data distance; 0 for identical data
double lipschitz_probe(const SpectralField& u0, const SpectralField& v0, const Nonlinearity& F,
                       double beta, double T, std::size_t M = 64, double tol = 1e-10);

struct BoundProbeRow {
    std::size_t fn_index;
    double t;
    double ratio;
};

struct BoundProbeResult {
    double C_emp = 0.0;
    std::vector<BoundProbeRow> rows;
};

// C_emp = max over the test set and t-samples of
//   mod_norm(propagate(u, t, beta)) / mod_norm(u)   in M^{p,q}_{1 (x) v_s}
BoundProbeResult semigroup_bound_probe(double p, double q, double s, double beta,
                                       const std::vector<GridFunction>& test_set,
                                       const std::vector<double>& t_samples, BasisPtr basis,
                                       const Window& g, const PhaseGrid& lattice);

// same probe over the default five-node grid on [0, T]
BoundProbeResult semigroup_bound_probe(double p, double q, double s, double beta, double T,
                                       const std::vector<GridFunction>& test_set, BasisPtr basis,
                                       const Window& g, const PhaseGrid& lattice);

}  // namespace modheat
