#include "modheat/evolution.hpp"

#include <cmath>
#include <string>

namespace modheat {

namespace {

// A(th) = int_0^1 e^{-th s} s ds,  B(th) = int_0^1 e^{-th s} (1-s) ds: the
// exponential-quadrature weights of the left/right node on one subinterval.
// Series below the crossover keeps full precision for stiff-to-soft modes.
void quad_weights(double th, double& A, double& B) {
    if (th < 1e-3) {
        A = 0.5 - th / 3.0 + th * th / 8.0 - th * th * th / 30.0 + th * th * th * th / 144.0;
        B = 0.5 - th / 6.0 + th * th / 24.0 - th * th * th / 120.0 + th * th * th * th / 720.0;
        return;
    }
    const double e = std::exp(-th);
    A = (1.0 - e * (1.0 + th)) / (th * th);
    B = (e - 1.0 + th) / (th * th);
}

void check_traj(const Trajectory& tr) {
    tr.grid.validate();
    if (tr.states.size() != tr.grid.M + 1)
        throw ValidationError("trajectory must hold M + 1 states");
    for (const auto& s : tr.states)
        if (s.basis != tr.states.front().basis)
            throw ValidationError("trajectory states must share one basis");
}

double sup_diff(const Trajectory& a, const Trajectory& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.states.size(); ++i) {
        double acc = 0.0;
        for (std::size_t c = 0; c < a.states[i].coeffs.size(); ++c)
            acc += std::norm(a.states[i].coeffs[c] - b.states[i].coeffs[c]);
        worst = std::max(worst, std::sqrt(acc));
    }
    return worst;
}

}  // namespace

Trajectory duhamel_all(const Trajectory& forcing, double beta) {
    check_traj(forcing);
    const auto basis = forcing.states.front().basis;
    const std::size_t nc = basis->coeff_count();
    const std::size_t d = basis->dim();
    const double dt = forcing.grid.dt();

    Trajectory out{forcing.grid, {}};
    out.states.assign(forcing.grid.M + 1, zero_field(basis));

    const auto& idx = basis->indices();
    for (std::size_t c = 0; c < nc; ++c) {
        const double lam = eigenvalue(idx[c].order(), d, beta);
        const double th = lam * dt;
        const double decay = std::exp(-th);
        double A, B;
        quad_weights(th, A, B);
        Complex acc{0, 0};
        for (std::size_t i = 0; i < forcing.grid.M; ++i) {
            acc = decay * acc +
                  dt * (A * forcing.states[i].coeffs[c] + B * forcing.states[i + 1].coeffs[c]);
            out.states[i + 1].coeffs[c] = acc;
        }
    }
    return out;
}

SpectralField duhamel(const Trajectory& forcing, std::size_t t_index, double beta) {
    check_traj(forcing);
    if (t_index > forcing.grid.M) throw ValidationError("time index outside the grid");
    return duhamel_all(forcing, beta).states[t_index];
}

Trajectory linear_trajectory(const SpectralField& u0, double beta, const TimeGrid& tg) {
    tg.validate();
    Trajectory tr{tg, {}};
    tr.states.reserve(tg.M + 1);
    for (std::size_t i = 0; i <= tg.M; ++i)
        tr.states.push_back(apply_semigroup(u0, tg.node(i), beta));
    return tr;
}

Trajectory picard_step(const Trajectory& current, const SpectralField& u0, const Nonlinearity& F,
                       double beta) {
    check_traj(current);
    if (current.states.front().basis != u0.basis)
        throw ValidationError("initial data and trajectory must share one basis");

    Trajectory nl{current.grid, {}};
    nl.states.reserve(current.grid.M + 1);
    for (const auto& state : current.states) {
        if (F.is_zero()) {
            nl.states.push_back(zero_field(state.basis));
        } else {
            nl.states.push_back(analyze(eval_nonlinearity(synthesize(state), F), state.basis));
        }
    }
    Trajectory bf = duhamel_all(nl, beta);
    Trajectory out = linear_trajectory(u0, beta, current.grid);
    for (std::size_t i = 0; i <= current.grid.M; ++i) out.states[i] += bf.states[i];
    return out;
}

PicardResult picard_solve(const SpectralField& u0, const Nonlinearity& F, double beta, double T,
                          std::size_t M, double tol, std::size_t max_iter) {
    if (!(tol > 0.0)) throw ValidationError("tolerance must be positive");
    TimeGrid tg{T, M};
    tg.validate();

    Trajectory cur = linear_trajectory(u0, beta, tg);
    ContractionReport rep;
    for (std::size_t it = 0; it < max_iter; ++it) {
        Trajectory next = picard_step(cur, u0, F, beta);
        const double d = sup_diff(next, cur);
        rep.iterates = it + 1;
        if (!rep.diffs.empty() && rep.diffs.back() > 0.0 && std::isfinite(d))
            rep.ratios.push_back(d / rep.diffs.back());
        rep.diffs.push_back(d);
        cur = std::move(next);
        if (!std::isfinite(d)) {
            rep.converged = false;
            throw ConvergenceError(
                "Picard iteration blew up at iterate " + std::to_string(it + 1) +
                    " (horizon too large for the data radius)",
                rep);
        }
        if (d < tol) {
            rep.converged = true;
            return PicardResult{std::move(cur), std::move(rep)};
        }
    }
    rep.converged = false;
    throw ConvergenceError("Picard iteration did not reach tolerance within " +
                               std::to_string(max_iter) + " iterates",
                           rep);
}

namespace {

bool probe_passes(const SpectralField& u0, const Nonlinearity& F, double beta, double T,
                  std::size_t M, double tol, std::size_t max_iter, double target_ratio,
                  ContractionReport& out) {
    try {
        auto res = picard_solve(u0, F, beta, T, M, tol, max_iter);
        out = res.report;
    } catch (const ConvergenceError& e) {
        out = e.report;
        return false;
    }
    // ratios[0] is the quotient at the second iterate; the contraction test
    // covers every quotient from there on
    for (double r : out.ratios)
        if (r > target_ratio + 1e-12) return false;
    return out.converged;
}

}  // namespace

TimeSearchResult local_time_search(const SpectralField& u0, const Nonlinearity& F, double beta,
                                   double target_ratio, std::size_t M, double tol,
                                   std::size_t max_iter) {
    if (u0.l2_norm() == 0.0) throw ValidationError("local_time_search requires non-zero data");
    TimeSearchResult res;
    const double lo0 = std::pow(2.0, -10.0), hi0 = 1.0;

    ContractionReport rep;
    if (!probe_passes(u0, F, beta, lo0, M, tol, max_iter, target_ratio, rep)) {
        res.probes.emplace_back(lo0, rep);
        res.T_est = lo0;  // smallest probe; nothing converged
        res.any_converged = false;
        return res;
    }
    res.probes.emplace_back(lo0, rep);
    res.any_converged = true;

    if (probe_passes(u0, F, beta, hi0, M, tol, max_iter, target_ratio, rep)) {
        res.probes.emplace_back(hi0, rep);
        res.T_est = hi0;
        return res;
    }
    res.probes.emplace_back(hi0, rep);

    double lo = lo0, hi = hi0;
    for (int it = 0; it < 12; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (probe_passes(u0, F, beta, mid, M, tol, max_iter, target_ratio, rep))
            lo = mid;
        else
            hi = mid;
        res.probes.emplace_back(mid, rep);
    }
    res.T_est = lo;
    return res;
}

double lipschitz_probe(const SpectralField& u0, const SpectralField& v0, const Nonlinearity& F,
                       double beta, double T, std::size_t M, double tol) {
    SpectralField diff0 = u0;
    diff0 -= v0;
    const double denom = diff0.l2_norm();
    if (denom == 0.0) return 0.0;  // identical data by convention

    auto a = picard_solve(u0, F, beta, T, M, tol);
    auto b = picard_solve(v0, F, beta, T, M, tol);
    return sup_diff(a.trajectory, b.trajectory) / denom;
}

BoundProbeResult semigroup_bound_probe(double p, double q, double s, double beta, double T,
                                       const std::vector<GridFunction>& test_set, BasisPtr basis,
                                       const Window& g, const PhaseGrid& lattice) {
    if (!(T > 0.0)) throw ValidationError("probe horizon must be positive");
    std::vector<double> ts;
    for (int i = 0; i <= 4; ++i) ts.push_back(T * static_cast<double>(i) / 4.0);
    return semigroup_bound_probe(p, q, s, beta, test_set, ts, std::move(basis), g, lattice);
}

BoundProbeResult semigroup_bound_probe(double p, double q, double s, double beta,
                                       const std::vector<GridFunction>& test_set,
                                       const std::vector<double>& t_samples, BasisPtr basis,
                                       const Window& g, const PhaseGrid& lattice) {
    if (test_set.empty()) throw ValidationError("bound probe needs a non-empty test set");
    const Weight w{Weight::Kind::FrequencyOnly, s};
    BoundProbeResult res;
    for (std::size_t fi = 0; fi < test_set.size(); ++fi) {
        const double base = mod_norm(test_set[fi], g, p, q, w, lattice);
        for (double t : t_samples) {
            const GridFunction ut = propagate(test_set[fi], t, beta, basis);
            const double ratio = mod_norm(ut, g, p, q, w, lattice) / base;
            res.rows.push_back({fi, t, ratio});
            res.C_emp = std::max(res.C_emp, ratio);
        }
    }
    return res;
}

}  // namespace modheat
