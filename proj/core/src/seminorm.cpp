#include "modheat/seminorm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace modheat {

namespace {

// central-difference stencils D^k f ~ sum c_i f(x + i delta) / delta^k,
// second-order accurate; offsets run -w..w
struct Stencil {
    int width;
    std::vector<double> coeff;  // length 2*width+1
};

const Stencil& stencil(std::size_t k) {
    static const std::vector<Stencil> table = {
        {0, {1.0}},
        {1, {-0.5, 0.0, 0.5}},
        {1, {1.0, -2.0, 1.0}},
        {2, {-0.5, 1.0, 0.0, -1.0, 0.5}},
        {2, {1.0, -4.0, 6.0, -4.0, 1.0}},
        {3, {-0.5, 2.0, -2.5, 0.0, 2.5, -2.0, 0.5}},
        {3, {1.0, -6.0, 15.0, -20.0, 15.0, -6.0, 1.0}},
    };
    if (k >= table.size())
        throw ValidationError("finite differences support derivative order <= 6");
    return table[k];
}

// D^{(a1,a2)} sigma(z) with step delta, d=1 phase space
Complex fd_derivative(const Symbol& sigma, double z1, double z2, std::size_t a1, std::size_t a2,
                      double delta) {
    const Stencil& s1 = stencil(a1);
    const Stencil& s2 = stencil(a2);
    Complex acc{0, 0};
    for (int i = -s1.width; i <= s1.width; ++i) {
        const double c1 = s1.coeff[static_cast<std::size_t>(i + s1.width)];
        if (c1 == 0.0) continue;
        for (int j = -s2.width; j <= s2.width; ++j) {
            const double c2 = s2.coeff[static_cast<std::size_t>(j + s2.width)];
            if (c2 == 0.0) continue;
            acc += c1 * c2 * sigma.eval2(z1 + i * delta, z2 + j * delta);
        }
    }
    return acc / std::pow(delta, static_cast<double>(a1 + a2));
}

struct WeightedSup {
    double value = 0.0;
    double z1 = 0.0, z2 = 0.0;
    bool converged = true;
};

// sup over alpha in `orders` and z in the box of
// |D^alpha sigma(z)| <z>^{weight_exp(|alpha|)}
template <typename WeightExp>
WeightedSup weighted_sup(const Symbol& sigma, const std::vector<std::pair<int, int>>& orders,
                         const SampleBox& box, WeightExp weight_exp) {
    auto rich = [&](double z1, double z2, int a1, int a2) {
        const Complex c1 = fd_derivative(sigma, z1, z2, a1, a2, box.fd_step);
        const Complex c2 = fd_derivative(sigma, z1, z2, a1, a2, box.fd_step / 2.0);
        const Complex ext = (4.0 * c2 - c1) / 3.0;
        const double drift = std::abs(c2 - c1);
        return std::pair<double, double>(std::abs(ext), drift);
    };
    auto weighted = [&](double z1, double z2, int a1, int a2, double& drift) {
        auto [mag, dr] = rich(z1, z2, a1, a2);
        drift = dr;
        const double w = std::pow(1.0 + z1 * z1 + z2 * z2, 0.5 * weight_exp(a1 + a2));
        return mag * w;
    };

    WeightedSup best;
    double best_drift = 0.0;
    const long nsteps = static_cast<long>(std::floor(box.halfwidth / box.coarse_step + 1e-9));
    const long rsteps = static_cast<long>(std::lround(1.2 * box.coarse_step / box.refine_step));
    for (const auto& [a1, a2] : orders) {
        // coarse scan for this derivative's own maximizer
        double amax = -1.0, az1 = 0.0, az2 = 0.0, adrift = 0.0;
        for (long i = -nsteps; i <= nsteps; ++i) {
            for (long j = -nsteps; j <= nsteps; ++j) {
                const double z1 = static_cast<double>(i) * box.coarse_step;
                const double z2 = static_cast<double>(j) * box.coarse_step;
                double drift;
                const double v = weighted(z1, z2, a1, a2, drift);
                if (v > amax) {
                    amax = v;
                    az1 = z1;
                    az2 = z2;
                    adrift = drift;
                }
            }
        }
        // local refinement around it
        for (long i = -rsteps; i <= rsteps; ++i) {
            for (long j = -rsteps; j <= rsteps; ++j) {
                const double z1 = az1 + static_cast<double>(i) * box.refine_step;
                const double z2 = az2 + static_cast<double>(j) * box.refine_step;
                double drift;
                const double v = weighted(z1, z2, a1, a2, drift);
                if (v > amax) {
                    amax = v;
                    adrift = drift;
                }
            }
        }
        if (amax > best.value) {
            best.value = amax;
            best.z1 = az1;
            best.z2 = az2;
            best_drift = adrift;
        }
    }
    best.converged = best_drift <= 1e-3 * (best.value + 1e-12);
    return best;
}

std::string box_meta(const SampleBox& b) {
    return "box halfwidth " + std::to_string(b.halfwidth) + ", coarse step " +
           std::to_string(b.coarse_step) + ", refine step " + std::to_string(b.refine_step) +
           ", fd step " + std::to_string(b.fd_step);
}

}  // namespace

SeminormEstimate symbol_seminorm(const Symbol& sigma, std::size_t N, double m,
                                 const SampleBox& box) {
    if (sigma.spatial_dim() != 1)
        throw ValidationError("seminorm estimators support d=1 symbols");
    std::vector<std::pair<int, int>> orders;
    for (std::size_t a1 = 0; a1 <= N; ++a1)
        for (std::size_t a2 = 0; a1 + a2 <= N; ++a2)
            orders.emplace_back(static_cast<int>(a1), static_cast<int>(a2));
    auto sup = weighted_sup(sigma, orders, box, [m](int) { return -m; });
    return SeminormEstimate{N, m, sup.value, sup.converged, box_meta(box)};
}

SeminormEstimate shubin_seminorm(const Symbol& a, std::size_t k, const SampleBox& box) {
    if (a.spatial_dim() != 1)
        throw ValidationError("seminorm estimators support d=1 symbols");
    std::vector<std::pair<int, int>> orders;
    for (std::size_t a1 = 0; a1 <= k; ++a1)
        for (std::size_t a2 = 0; a1 + a2 <= k; ++a2)
            orders.emplace_back(static_cast<int>(a1), static_cast<int>(a2));
    auto sup = weighted_sup(a, orders, box,
                            [](int total) { return static_cast<double>(total); });
    return SeminormEstimate{k, 0.0, sup.value, sup.converged, box_meta(box)};
}

EllipticityReport ellipticity_check(const Symbol& a, double C, double R, const SampleBox& box) {
    if (a.spatial_dim() != 1)
        throw ValidationError("ellipticity check supports d=1 symbols");
    EllipticityReport rep;
    rep.min_ratio = std::numeric_limits<double>::infinity();
    const long nsteps = static_cast<long>(std::floor(box.halfwidth / box.coarse_step + 1e-9));
    for (long i = -nsteps; i <= nsteps; ++i) {
        for (long j = -nsteps; j <= nsteps; ++j) {
            const double z1 = static_cast<double>(i) * box.coarse_step;
            const double z2 = static_cast<double>(j) * box.coarse_step;
            if (z1 * z1 + z2 * z2 < R * R) continue;
            const double ratio =
                a.eval2(z1, z2).real() / std::sqrt(1.0 + z1 * z1 + z2 * z2);
            if (ratio < rep.min_ratio) {
                rep.min_ratio = ratio;
                rep.argmin = {z1, z2};
            }
        }
    }
    rep.satisfied = rep.min_ratio >= C;
    return rep;
}

}  // namespace modheat
