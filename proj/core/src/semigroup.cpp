#include "modheat/semigroup.hpp"

#include <cmath>
#include <string>

namespace modheat {

namespace {
void check_beta(double beta) {
    if (!(beta > 0.0) || beta > 1.0)
        throw ValidationError("fractional power beta must lie in (0, 1], got " +
                              std::to_string(beta));
}
}  // namespace

double eigenvalue(std::size_t order, std::size_t d, double beta) {
    check_beta(beta);
    const double base = 2.0 * static_cast<double>(order) + static_cast<double>(d);
    return beta == 1.0 ? base : std::pow(base, beta);
}

double eigenvalue(const MultiIndex& alpha, std::size_t d, double beta) {
    return eigenvalue(alpha.order(), d, beta);
}

SpectralField apply_semigroup(const SpectralField& c, double t, double beta) {
    check_beta(beta);
    if (t < 0.0)
        throw ValidationError("the heat semigroup is forward-only, got t = " + std::to_string(t));
    SpectralField out = c;
    if (t == 0.0) return out;  // exact identity
    const auto& basis = *c.basis;
    const std::size_t d = basis.dim();
    // one damping factor per degree shell
    std::vector<double> factor(basis.max_degree() + 1);
    for (std::size_t k = 0; k <= basis.max_degree(); ++k)
        factor[k] = std::exp(-t * eigenvalue(k, d, beta));
    const auto& idx = basis.indices();
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] *= factor[idx[i].order()];
    return out;
}

GridFunction propagate(const GridFunction& u0, double t, double beta, BasisPtr basis) {
    return synthesize(apply_semigroup(analyze(u0, std::move(basis)), t, beta));
}

}  // namespace modheat
