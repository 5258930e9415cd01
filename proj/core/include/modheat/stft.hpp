// Discrete short-time Fourier transform on finite sections of the lattice
// a Z^d x b Z^d, and the Riemann-sum inversion formula.
//
// V_g f(x, w) = <f, M_w T_x g> is computed, for each lattice translate x, as
// the DFT of f * conj(T_x g) read at the bins w = l b; b must be a multiple
// of the bin spacing 1/(2L). Translates are snapped to whole grid samples and
// the largest snap distance is recorded.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "modheat/grid.hpp"
#include "modheat/phase_space.hpp"

namespace modheat {

struct Window {
    GridFunction g;
    double l2norm = 0.0;
};

Window make_window(GridFunction g);

// L^2-normalized Gaussian 2^{d/4} e^{-pi |t|^2}
GridFunction gaussian_samples(const GridGeometry& geom);
Window gaussian_window(const GridGeometry& geom);

struct PhaseGrid {
    double a = 0.25;  // time-shift step
    double b = 0.25;  // frequency step
    std::vector<std::array<long, 2>> x_extent;  // per axis {jmin, jmax}
    std::vector<std::array<long, 2>> w_extent;  // per axis {lmin, lmax}

    std::size_t dim() const { return x_extent.size(); }
    double density() const { return a * b; }
    std::size_t x_count() const;
    std::size_t w_count() const;
    std::size_t node_count() const { return x_count() * w_count(); }

    std::vector<long> x_multi(std::size_t flat) const;
    std::vector<long> w_multi(std::size_t flat) const;

    // Lattice adapted to a grid: a is snapped to a whole number of samples, b
    // to a whole number of DFT bins, extents chosen to cover [-x_halfwidth,
    // x_halfwidth] and [-w_halfwidth, w_halfwidth].
    static PhaseGrid make_default(const GridGeometry& geom, double step = 0.25,
                                  double x_halfwidth = 10.0, double w_halfwidth = 10.0);
};

struct STFTTable {
    PhaseGrid grid;
    GridGeometry source;
    std::vector<Complex> values;  // x-major: x_flat * w_count + w_flat
    double max_snap_error = 0.0;

    const Complex& at(std::size_t x_flat, std::size_t w_flat) const {
        return values[x_flat * grid.w_count() + w_flat];
    }
};

struct TfShiftResult {
    GridFunction fn;
    PhasePoint actual;      // z with the position part snapped to the grid
    double snap_distance;   // max over axes |requested - snapped|
};

// samples of e^{2 pi i z2 . y} g(y - z1), z1 snapped to the nearest node
TfShiftResult tf_shift(const GridFunction& g, const PhasePoint& z);

STFTTable stft(const GridFunction& f, const Window& g, const PhaseGrid& grid);

// single off-lattice evaluation V_g f(x, w) by direct quadrature
Complex stft_point(const GridFunction& f, const Window& g, const PhasePoint& zw);

// (a b)^d / ||g||_2^2 * sum over lattice nodes of V(z) pi(z) g.
// Appends a note to *warnings when the lattice is too sparse (a b > 1/2).
GridFunction istft(const STFTTable& table, const Window& g,
                   std::vector<std::string>* warnings = nullptr);

}  // namespace modheat
