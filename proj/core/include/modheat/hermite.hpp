// Hermite eigenbasis of the harmonic oscillator -Delta + |x|^2 on a uniform
// grid, analysis/synthesis between grid samples and eigen-coefficients.
//
// 1-D functions h_k are L^2-normalized eigenfunctions of -d^2/dx^2 + x^2 with
// eigenvalue 2k+1; in d dimensions Phi_alpha is the tensor product with
// eigenvalue 2|alpha| + d.
#pragma once

#include <memory>
#include <vector>

#include "modheat/grid.hpp"
#include "modheat/multi_index.hpp"

namespace modheat {

// h_k sampled at the given points, stable normalized three-term recurrence
std::vector<double> hermite_eval(std::size_t k, const std::vector<double>& xs);

// Rule of thumb for the half-width: classical turning point sqrt(2K+d) plus a
// margin that pushes boundary values below 1e-12.
double default_half_width(std::size_t K, std::size_t d);

class HermiteBasis {
  public:
    HermiteBasis(std::size_t d, std::size_t K, double L, std::size_t n);

    std::size_t dim() const { return geom_.d; }
    std::size_t max_degree() const { return K_; }
    const GridGeometry& geometry() const { return geom_; }
    const std::vector<MultiIndex>& indices() const { return indices_; }
    std::size_t coeff_count() const { return indices_.size(); }

    // table(k) = h_k on the axis grid
    const std::vector<double>& table(std::size_t k) const { return tables_[k]; }

    // Phi_alpha sampled on the tensor grid
    GridFunction eigenfunction(std::size_t coeff_index) const;

    // max_{j,k<=K} |<h_j, h_k>_grid - delta_jk| on the 1-D axis
    double gram_max_deviation() const;

  private:
    GridGeometry geom_;
    std::size_t K_;
    std::vector<MultiIndex> indices_;
    std::vector<std::vector<double>> tables_;  // (K+1) x n
};

using BasisPtr = std::shared_ptr<const HermiteBasis>;

inline BasisPtr make_basis(std::size_t d, std::size_t K, double L, std::size_t n) {
    return std::make_shared<const HermiteBasis>(d, K, L, n);
}

struct SpectralField {
    BasisPtr basis;
    std::vector<Complex> coeffs;  // aligned with basis->indices()

    double l2_norm() const;
    // l^2 mass fraction sitting on the top degree shell |alpha| = K;
    // reported as the basis-truncation diagnostic.
    double top_shell_mass() const;

    SpectralField& operator+=(const SpectralField& o);
    SpectralField& operator-=(const SpectralField& o);
    SpectralField& operator*=(Complex s);
};

SpectralField zero_field(BasisPtr basis);
// coefficient unit vector e_alpha
SpectralField unit_field(BasisPtr basis, std::size_t coeff_index);

// c_alpha = <u, Phi_alpha> by the grid quadrature; evaluated with tensor
// contractions, one axis at a time.
SpectralField analyze(const GridFunction& u, BasisPtr basis);

// pointwise sum_alpha c_alpha Phi_alpha
GridFunction synthesize(const SpectralField& c);

}  // namespace modheat
