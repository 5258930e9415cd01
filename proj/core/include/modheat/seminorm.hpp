// Finite-difference estimators for the Hormander semi-norms
//   |sigma|_{N,m} = sup_{|alpha| <= N} |D^alpha sigma(z)| <z>^{-m}
// and the Shubin-adapted variant with weight <z>^{+|alpha|}, plus the global
// ellipticity probe a(z) >= C <z> for |z| >= R.
//
// Derivatives are central differences (up to total order 6) with step delta,
// Richardson-extrapolated from (delta, delta/2). The sup is located with a
// coarse scan followed by a local refinement pass.
#pragma once

#include <string>
#include <vector>

#include "modheat/phase_space.hpp"
#include "modheat/symbol.hpp"

namespace modheat {

struct SampleBox {
    double halfwidth = 4.0;
    double coarse_step = 0.25;
    double refine_step = 0.005;
    double fd_step = 0.0625;  // delta; Richardson pairs it with delta/2
};

struct SeminormEstimate {
    std::size_t N = 0;       // derivative order cap
    double m = 0.0;          // weight order
    double value = 0.0;
    bool converged = true;   // Richardson agreement across all retained maxima
    std::string grid_meta;
};

SeminormEstimate symbol_seminorm(const Symbol& sigma, std::size_t N, double m,
                                 const SampleBox& box = {});

// sup_{|alpha|+|beta| <= k} |D^{(alpha,beta)} a(z)| <z>^{|alpha|+|beta|}
SeminormEstimate shubin_seminorm(const Symbol& a, std::size_t k, const SampleBox& box = {});

struct EllipticityReport {
    bool satisfied = false;
    double min_ratio = 0.0;     // min over sampled |z| >= R of a(z)/<z>
    std::vector<double> argmin;
};

EllipticityReport ellipticity_check(const Symbol& a, double C, double R,
                                    const SampleBox& box = {});

}  // namespace modheat
