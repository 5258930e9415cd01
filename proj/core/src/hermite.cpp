#include "modheat/hermite.hpp"

#include <cmath>
#include <string>

namespace modheat {

std::vector<double> hermite_eval(std::size_t k, const std::vector<double>& xs) {
    std::vector<double> out(xs.size());
    const double c0 = std::pow(M_PI, -0.25);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double x = xs[i];
        double hm1 = c0 * std::exp(-0.5 * x * x);  // h_0
        if (k == 0) {
            out[i] = hm1;
            continue;
        }
        double hk = std::sqrt(2.0) * x * hm1;  // h_1
        for (std::size_t j = 1; j < k; ++j) {
            const double hp = std::sqrt(2.0 / (j + 1.0)) * x * hk -
                              std::sqrt(j / (j + 1.0)) * hm1;
            hm1 = hk;
            hk = hp;
        }
        out[i] = hk;
    }
    return out;
}

double default_half_width(std::size_t K, std::size_t d) {
    return std::sqrt(2.0 * static_cast<double>(K) + static_cast<double>(d)) + 4.0;
}

HermiteBasis::HermiteBasis(std::size_t d, std::size_t K, double L, std::size_t n)
    : geom_{d, L, n}, K_(K) {
    geom_.validate();
    const double turning = std::sqrt(2.0 * static_cast<double>(K) + static_cast<double>(d));
    if (L < turning)
        throw ValidationError("grid half-width " + std::to_string(L) +
                              " does not cover the classical turning point " +
                              std::to_string(turning));
    indices_ = enumerate_multi_indices(d, K);
    const auto xs = geom_.axis();
    tables_.reserve(K + 1);
    for (std::size_t k = 0; k <= K; ++k) tables_.push_back(hermite_eval(k, xs));
}

GridFunction HermiteBasis::eigenfunction(std::size_t ci) const {
    const auto& alpha = indices_.at(ci);
    GridFunction out(geom_);
    const std::size_t total = geom_.node_count();
    for (std::size_t flat = 0; flat < total; ++flat) {
        auto idx = geom_.unflatten(flat);
        double v = 1.0;
        for (std::size_t ax = 0; ax < geom_.d; ++ax) v *= tables_[alpha.entries[ax]][idx[ax]];
        out[flat] = v;
    }
    return out;
}

double HermiteBasis::gram_max_deviation() const {
    const double h = geom_.spacing();
    double worst = 0.0;
    for (std::size_t j = 0; j <= K_; ++j) {
        for (std::size_t k = j; k <= K_; ++k) {
            double s = 0.0;
            for (std::size_t i = 0; i < geom_.n; ++i) s += tables_[j][i] * tables_[k][i];
            s *= h;
            const double dev = std::abs(s - (j == k ? 1.0 : 0.0));
            if (dev > worst) worst = dev;
        }
    }
    return worst;
}

double SpectralField::l2_norm() const {
    double s = 0.0;
    for (const auto& c : coeffs) s += std::norm(c);
    return std::sqrt(s);
}

double SpectralField::top_shell_mass() const {
    const std::size_t K = basis->max_degree();
    double shell = 0.0, total = 0.0;
    const auto& idx = basis->indices();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const double m = std::norm(coeffs[i]);
        total += m;
        if (idx[i].order() == K) shell += m;
    }
    return total > 0.0 ? shell / total : 0.0;
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    return *this;
}
SpectralField& SpectralField::operator-=(const SpectralField& o) {
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
    return *this;
}
SpectralField& SpectralField::operator*=(Complex s) {
    for (auto& c : coeffs) c *= s;
    return *this;
}

SpectralField zero_field(BasisPtr basis) {
    return SpectralField{basis, std::vector<Complex>(basis->coeff_count(), Complex{0, 0})};
}

SpectralField unit_field(BasisPtr basis, std::size_t ci) {
    auto f = zero_field(std::move(basis));
    f.coeffs.at(ci) = Complex{1.0, 0.0};
    return f;
}

SpectralField analyze(const GridFunction& u, BasisPtr basis) {
    check_same_grid(u.geometry(), basis->geometry(), "analyze");
    const std::size_t d = basis->dim();
    const std::size_t n = basis->geometry().n;
    const std::size_t Kp1 = basis->max_degree() + 1;
    const double h = basis->geometry().spacing();

    // Contract the trailing spatial axis against the 1-D tables, moving the
    // resulting degree axis to the front; after d passes the tensor is
    // C[k_0,...,k_{d-1}] with shape (K+1)^d.
    std::vector<Complex> cur = u.values();
    for (std::size_t pass = 0; pass < d; ++pass) {
        const std::size_t rows = cur.size() / n;
        std::vector<Complex> next(Kp1 * rows, Complex{0, 0});
        for (std::size_t k = 0; k < Kp1; ++k) {
            const auto& t = basis->table(k);
            for (std::size_t r = 0; r < rows; ++r) {
                Complex s{0, 0};
                const Complex* row = cur.data() + r * n;
                for (std::size_t j = 0; j < n; ++j) s += row[j] * t[j];
                next[k * rows + r] = s * h;
            }
        }
        cur.swap(next);
    }

    SpectralField out = zero_field(basis);
    const auto& idx = basis->indices();
    for (std::size_t i = 0; i < idx.size(); ++i) {
        std::size_t flat = 0;
        for (std::size_t ax = 0; ax < d; ++ax) flat = flat * Kp1 + idx[i].entries[ax];
        out.coeffs[i] = cur[flat];
    }
    return out;
}

GridFunction synthesize(const SpectralField& c) {
    const auto& basis = *c.basis;
    const std::size_t d = basis.dim();
    const std::size_t n = basis.geometry().n;
    const std::size_t Kp1 = basis.max_degree() + 1;

    // scatter coefficients into the dense (K+1)^d tensor
    std::size_t dense = 1;
    for (std::size_t ax = 0; ax < d; ++ax) dense *= Kp1;
    std::vector<Complex> cur(dense, Complex{0, 0});
    const auto& idx = basis.indices();
    for (std::size_t i = 0; i < idx.size(); ++i) {
        std::size_t flat = 0;
        for (std::size_t ax = 0; ax < d; ++ax) flat = flat * Kp1 + idx[i].entries[ax];
        cur[flat] = c.coeffs[i];
    }

    // expand the leading degree axis into a trailing spatial axis, d times
    for (std::size_t pass = 0; pass < d; ++pass) {
        const std::size_t rows = cur.size() / Kp1;
        std::vector<Complex> next(rows * n, Complex{0, 0});
        for (std::size_t k = 0; k < Kp1; ++k) {
            const auto& t = basis.table(k);
            for (std::size_t r = 0; r < rows; ++r) {
                const Complex a = cur[k * rows + r];
                if (a == Complex{0, 0}) continue;
                Complex* row = next.data() + r * n;
                for (std::size_t j = 0; j < n; ++j) row[j] += a * t[j];
            }
        }
        cur.swap(next);
    }
    return GridFunction(basis.geometry(), std::move(cur));
}

}  // namespace modheat
