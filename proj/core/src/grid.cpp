#include "modheat/grid.hpp"

#include <cmath>
#include <string>

namespace modheat {

void GridGeometry::validate() const {
    if (d < 1) throw ValidationError("grid dimension must be >= 1");
    if (L <= 0.0) throw ValidationError("grid half-width must be positive");
    if (n < 2) throw ValidationError("grid needs at least 2 samples per axis");
}

double GridGeometry::cell_volume() const {
    double v = 1.0;
    for (std::size_t i = 0; i < d; ++i) v *= spacing();
    return v;
}

std::vector<double> GridGeometry::axis() const {
    std::vector<double> xs(n);
    const double h = spacing();
    for (std::size_t j = 0; j < n; ++j) xs[j] = -L + h * static_cast<double>(j);
    return xs;
}

std::vector<std::size_t> GridGeometry::unflatten(std::size_t flat) const {
    std::vector<std::size_t> idx(d);
    for (std::size_t ax = d; ax-- > 0;) {
        idx[ax] = flat % n;
        flat /= n;
    }
    return idx;
}

std::size_t GridGeometry::flatten(const std::vector<std::size_t>& idx) const {
    std::size_t flat = 0;
    for (std::size_t ax = 0; ax < d; ++ax) flat = flat * n + idx[ax];
    return flat;
}

std::vector<double> GridGeometry::node(std::size_t flat) const {
    const auto idx = unflatten(flat);
    const double h = spacing();
    std::vector<double> x(d);
    for (std::size_t ax = 0; ax < d; ++ax) x[ax] = -L + h * static_cast<double>(idx[ax]);
    return x;
}

GridFunction::GridFunction(GridGeometry g, std::vector<Complex> v)
    : geom_(g), values_(std::move(v)) {
    geom_.validate();
    if (values_.size() != geom_.node_count())
        throw ValidationError("sample count does not match grid geometry");
}

double GridFunction::l2_norm() const {
    double s = 0.0;
    for (const auto& v : values_) s += std::norm(v);
    return std::sqrt(s * geom_.cell_volume());
}

Complex GridFunction::inner(const GridFunction& other) const {
    check_same_grid(geom_, other.geom_, "inner product");
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < values_.size(); ++i) s += values_[i] * std::conj(other.values_[i]);
    return s * geom_.cell_volume();
}

GridFunction& GridFunction::operator+=(const GridFunction& other) {
    check_same_grid(geom_, other.geom_, "addition");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& other) {
    check_same_grid(geom_, other.geom_, "subtraction");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
    return *this;
}

GridFunction& GridFunction::operator*=(Complex s) {
    for (auto& v : values_) v *= s;
    return *this;
}

void check_same_grid(const GridGeometry& a, const GridGeometry& b, const char* what) {
    if (!(a == b)) {
        throw GridMismatchError(std::string("grid mismatch in ") + what + ": (d,L,n)=(" +
                                std::to_string(a.d) + "," + std::to_string(a.L) + "," +
                                std::to_string(a.n) + ") vs (" + std::to_string(b.d) + "," +
                                std::to_string(b.L) + "," + std::to_string(b.n) + ")");
    }
}

GridFunction shift_samples(const GridFunction& f, const std::vector<long>& shift) {
    const auto& g = f.geometry();
    if (shift.size() != g.d) throw ValidationError("shift vector length must equal dimension");
    GridFunction out(g);
    const long n = static_cast<long>(g.n);
    const std::size_t total = g.node_count();
    for (std::size_t flat = 0; flat < total; ++flat) {
        auto idx = g.unflatten(flat);
        bool inside = true;
        std::size_t src = 0;
        for (std::size_t ax = 0; ax < g.d; ++ax) {
            const long j = static_cast<long>(idx[ax]) - shift[ax];
            if (j < 0 || j >= n) {
                inside = false;
                break;
            }
            src = src * g.n + static_cast<std::size_t>(j);
        }
        if (inside) out[flat] = f[src];
    }
    return out;
}

}  // namespace modheat
