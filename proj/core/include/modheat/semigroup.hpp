// Fractional heat semigroup e^{-t H^beta}, exact in the eigenbasis: the
// coefficient of Phi_alpha is damped by exp(-t (2|alpha|+d)^beta).
#pragma once

#include "modheat/hermite.hpp"

namespace modheat {

// (2k + d)^beta for |alpha| = k; beta restricted to (0, 1]
double eigenvalue(std::size_t order, std::size_t d, double beta);
double eigenvalue(const MultiIndex& alpha, std::size_t d, double beta);

// diagonal action c_alpha -> e^{-t lambda_alpha} c_alpha; t >= 0
SpectralField apply_semigroup(const SpectralField& c, double t, double beta);

// synthesize(apply_semigroup(analyze(u0), t, beta))
GridFunction propagate(const GridFunction& u0, double t, double beta, BasisPtr basis);

}  // namespace modheat
