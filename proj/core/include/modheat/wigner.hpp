// Cross tau-Wigner distribution
//   W_tau(f,g)(x,w) = int e^{-2 pi i y w} f(x + tau y) conj(g(x - (1-tau) y)) dy
// on a square phase-space grid, computed as a DFT in y per x row with
// band-limited interpolation for the off-grid arguments.
#pragma once

#include <array>

#include "modheat/grid.hpp"

namespace modheat {

struct TauParams {
    double tau = 0.5;
    explicit TauParams(double t) : tau(t) {
        if (!(t >= 0.0 && t <= 1.0))
            throw ValidationError("tau must lie in [0, 1]");
    }
};

// ps_geom must be 2-dimensional; the y-integration grid is derived from it
// (half-width 1/(2 h_ps), ps_geom.n samples) so the DFT bins coincide with
// the frequency axis of the phase-space grid. `offset` shifts the evaluation
// nodes: the value stored at node (x_i, w_j) is W_tau(f,g)(x_i + offset[0],
// w_j + offset[1]).
GridFunction tau_wigner(const GridFunction& f, const GridFunction& g, double tau,
                        const GridGeometry& ps_geom, std::array<double, 2> offset = {0.0, 0.0});

// default square phase-space geometry for d=1 inputs: same L and n
GridFunction tau_wigner(const GridFunction& f, const GridFunction& g, double tau);

}  // namespace modheat
