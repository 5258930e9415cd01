#include "modheat/nonlinearity.hpp"

#include <cmath>

#include "modheat/errors.hpp"

namespace modheat {

Nonlinearity Nonlinearity::power(Complex lambda, std::size_t k) {
    Nonlinearity f;
    f.is_power_ = true;
    f.lambda_ = lambda;
    f.k_ = k;
    return f;
}

Nonlinearity Nonlinearity::series(SeriesTable coeffs) {
    auto it = coeffs.find({0, 0});
    if (it != coeffs.end() && it->second != Complex{0, 0})
        throw ValidationError("series nonlinearity requires F(0) = 0, i.e. c_{00} = 0");
    Nonlinearity f;
    f.is_power_ = false;
    f.coeffs_ = std::move(coeffs);
    return f;
}

Complex Nonlinearity::operator()(Complex u) const {
    if (is_power_) {
        if (lambda_ == Complex{0, 0}) return {0, 0};
        const double a2 = std::norm(u);
        double p = 1.0;
        for (std::size_t i = 0; i < k_; ++i) p *= a2;  // |u|^{2k}
        return lambda_ * p * u;
    }
    Complex acc{0, 0};
    const Complex uc = std::conj(u);
    for (const auto& [jk, c] : coeffs_) {
        if (c == Complex{0, 0}) continue;
        Complex t = c;
        for (std::size_t a = 0; a < jk.first; ++a) t *= u;
        for (std::size_t b = 0; b < jk.second; ++b) t *= uc;
        acc += t;
    }
    return acc;
}

bool Nonlinearity::is_zero() const {
    if (is_power_) return lambda_ == Complex{0, 0};
    for (const auto& [jk, c] : coeffs_)
        if (c != Complex{0, 0}) return false;
    return true;
}

std::string Nonlinearity::describe() const {
    if (is_power_)
        return "power(lambda=" + std::to_string(lambda_.real()) + "+" +
               std::to_string(lambda_.imag()) + "i, k=" + std::to_string(k_) + ")";
    return "series(" + std::to_string(coeffs_.size()) + " terms)";
}

GridFunction eval_nonlinearity(const GridFunction& u, const Nonlinearity& F) {
    GridFunction out(u.geometry());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = F(u[i]);
    return out;
}

}  // namespace modheat
