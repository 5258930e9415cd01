// tau-pseudodifferential operators Op_tau(sigma) through their Schwartz
// kernel, Gabor matrices by two independent routes, and the decay-bound fit
//
//   (Op_tau(sigma) f)(x) = int int e^{2 pi i (x-y) w} sigma((1-tau) x + tau y, w) f(y) dy dw
//
// The kernel is assembled once per (sigma, tau, grid) with the w-integral
// discretized on the DFT bins; for sigma = 1 this reduces to the discrete
// delta and Op(1) is exactly the identity on the grid.
//
// Direct route:   <Op_tau(sigma) pi(z) g, pi(y) g>, a dense matvec per z.
// Identity route: |V_{Phi_tau} sigma (T_tau(y,z), J(y-z))| with the Wigner
// window Phi_tau = W_tau(g,g); one weighted quadrature over phase space per
// pair. Note the argument order T_tau(y,z): with the conventions above, the
// window of the symbol-side STFT is centered at ((1-tau) y1 + tau z1,
// tau y2 + (1-tau) z2), which the direct route confirms numerically for all
// tau; the two coincide for tau = 1/2.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modheat/phase_space.hpp"
#include "modheat/stft.hpp"
#include "modheat/symbol.hpp"
#include "modheat/wigner.hpp"

namespace modheat {

class QuantKernel {
  public:
    QuantKernel(const Symbol& sigma, double tau, const GridGeometry& geom);

    GridFunction apply(const GridFunction& f) const;
    const GridGeometry& geometry() const { return geom_; }
    double tau() const { return tau_; }

  private:
    GridGeometry geom_;
    double tau_;
    std::vector<Complex> K_;  // n x n, row-major; Op f = h * K f
};

// one-shot application; emits a note when sigma varies on sub-Nyquist scales
GridFunction opt_apply(const Symbol& sigma, double tau, const GridFunction& f,
                       std::vector<std::string>* warnings = nullptr);

struct GaborMatrixSample {
    PhasePoint z, y;            // snapped, as used by both routes
    Complex direct_value;
    double identity_magnitude;
};

struct DecayFit {
    double C = 0.0;             // max |M| <y-z>^{2N} <T_tau(z,y)>^{-m}
    double slope = 0.0;         // log-log slope of max|M| vs |y-z| over [2, 8]
    bool slope_valid = false;
    double corollary_C = 0.0;   // <z+y>^m variant, tau in (0,1) only
    bool corollary_valid = false;
    std::size_t sample_count = 0;
    std::string box_meta;
};

DecayFit decay_fit(const std::vector<GaborMatrixSample>& samples, double m, std::size_t N,
                   double tau);

struct SweepSpec {
    std::vector<double> radii{0.0, 0.5, 1.0, 2.0, 4.0, 8.0};
    std::size_t directions = 8;
    double z_halfwidth = 1.25;  // z ranges over the lattice step * {-k..k}
    double z_step = 1.25;
    double snap = 0.25;         // pair offsets snapped to this lattice
    bool with_identity = true;
};

// Caches the kernel, the Wigner window Phi_tau and the sampled symbol table,
// so matrix sweeps amortize the expensive pieces across all (z, y) pairs.
// The sweep additionally applies the operator once per distinct z and reuses
// the result across every y on the rays through that z.
class GaborAnalyzer {
  public:
    GaborAnalyzer(Symbol sigma, double tau, Window g, GridGeometry ps_geom,
                  std::optional<GridFunction> wigner_window_cache = std::nullopt);
    GaborAnalyzer(Symbol sigma, double tau, Window g);  // default ps grid = working grid

    // W_tau(g,g) on the phase-space grid; reusable across symbols at fixed tau
    const GridFunction& wigner_window() const { return phi_tau_; }

    // snaps z1, y1 to the working grid and returns the pair actually used
    GaborMatrixSample sample(const PhasePoint& z, const PhasePoint& y, bool with_identity = true);

    Complex direct(const PhasePoint& z, const PhasePoint& y) const;
    double identity_magnitude(const PhasePoint& z, const PhasePoint& y) const;

    std::vector<GaborMatrixSample> sweep(const SweepSpec& spec);

    const Symbol& symbol() const { return sigma_; }
    double tau() const { return tau_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

  private:
    PhasePoint snap_point(const PhasePoint& p) const;
    GridFunction shifted_window(const PhasePoint& z) const;

    Symbol sigma_;
    double tau_;
    Window g_;
    GridGeometry ps_geom_;
    QuantKernel kernel_;
    GridFunction phi_tau_;                 // W_tau(g, g) on ps grid
    std::vector<Complex> sigma_table_;     // sigma on ps grid, row-major
    mutable std::vector<std::string> warnings_;
};

// Convenience single-pair entry points (one kernel build per call; prefer
// GaborAnalyzer for sweeps).
Complex gabor_matrix_direct(const Symbol& sigma, double tau, const Window& g,
                            const PhasePoint& z, const PhasePoint& y);
double gabor_matrix_identity(const Symbol& sigma, double tau, const Window& g,
                             const PhasePoint& z, const PhasePoint& y);

}  // namespace modheat
