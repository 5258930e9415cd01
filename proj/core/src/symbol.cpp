#include "modheat/symbol.hpp"

#include <cmath>

#include "modheat/errors.hpp"

namespace modheat {

Symbol Symbol::closed_form(std::string label, double order, std::size_t spatial_dim, Fn fn) {
    Symbol s;
    s.label_ = std::move(label);
    s.order_ = order;
    s.spatial_dim_ = spatial_dim;
    s.fn_ = std::move(fn);
    return s;
}

Symbol Symbol::sampled(std::string label, double order, GridFunction table) {
    if (table.geometry().d % 2 != 0)
        throw ValidationError("sampled symbol table must have even dimension 2d");
    Symbol s;
    s.label_ = std::move(label);
    s.order_ = order;
    s.spatial_dim_ = table.geometry().d / 2;
    s.table_ = std::make_shared<const GridFunction>(std::move(table));
    return s;
}

namespace {

// 4-point Lagrange interpolation along one axis; t in [0,1) between nodes 1,2
inline void lagrange_weights(double t, double w[4]) {
    w[0] = -t * (t - 1.0) * (t - 2.0) / 6.0;
    w[1] = (t + 1.0) * (t - 1.0) * (t - 2.0) / 2.0;
    w[2] = -(t + 1.0) * t * (t - 2.0) / 2.0;
    w[3] = (t + 1.0) * t * (t - 1.0) / 6.0;
}

Complex interp_sampled(const GridFunction& tab, const std::vector<double>& z) {
    const auto& geom = tab.geometry();
    const double h = geom.spacing();
    const long n = static_cast<long>(geom.n);
    std::vector<long> base(geom.d);
    std::vector<double> wts(geom.d * 4);
    for (std::size_t ax = 0; ax < geom.d; ++ax) {
        const double u = (z[ax] + geom.L) / h;
        long i = static_cast<long>(std::floor(u));
        double t = u - static_cast<double>(i);
        // shift so i-1 .. i+2 are in range; outside the box the symbol decays
        if (i < 1) { i = 1; t = 0.0; }
        if (i > n - 3) { i = n - 3; t = 1.0; }
        if (u < 0.0 || u > static_cast<double>(n - 1)) return Complex{0.0, 0.0};
        base[ax] = i - 1;
        lagrange_weights(t, &wts[ax * 4]);
    }
    // tensor sum over the 4^d stencil
    std::vector<std::size_t> taps(geom.d, 0);
    Complex acc{0.0, 0.0};
    bool done = false;
    while (!done) {
        double w = 1.0;
        std::size_t flat = 0;
        for (std::size_t ax = 0; ax < geom.d; ++ax) {
            w *= wts[ax * 4 + taps[ax]];
            flat = flat * geom.n + static_cast<std::size_t>(base[ax] + static_cast<long>(taps[ax]));
        }
        acc += w * tab[flat];
        done = true;
        for (std::size_t ax = geom.d; ax-- > 0;) {
            if (++taps[ax] < 4) {
                done = false;
                break;
            }
            taps[ax] = 0;
        }
    }
    return acc;
}

}  // namespace

Complex Symbol::eval(const std::vector<double>& z) const {
    if (z.size() != 2 * spatial_dim_)
        throw ValidationError("symbol argument must have 2d coordinates");
    if (fn_) return fn_(z);
    return interp_sampled(*table_, z);
}

Complex Symbol::eval2(double u, double w) const {
    if (spatial_dim_ != 1) throw ValidationError("eval2 requires a d=1 symbol");
    if (fn_) {
        std::vector<double> z{u, w};
        return fn_(z);
    }
    std::vector<double> z{u, w};
    return interp_sampled(*table_, z);
}

Symbol symbol_preset(const std::string& name, std::size_t d) {
    if (name == "one") {
        return Symbol::closed_form("one", 0.0, d,
                                   [](const std::vector<double>&) { return Complex{1.0, 0.0}; });
    }
    if (name == "gauss") {
        return Symbol::closed_form("gauss", 0.0, d, [](const std::vector<double>& z) {
            double q = 0.0;
            for (double v : z) q += v * v;
            return Complex{std::exp(-q), 0.0};
        });
    }
    if (name.rfind("jbracket:", 0) == 0) {
        const double m = std::stod(name.substr(9));
        return Symbol::closed_form(name, m, d, [m](const std::vector<double>& z) {
            double q = 0.0;
            for (double v : z) q += v * v;
            return Complex{std::pow(1.0 + q, 0.5 * m), 0.0};
        });
    }
    if (name == "sin1") {
        return Symbol::closed_form("sin1", 0.0, d, [](const std::vector<double>& z) {
            return Complex{std::sin(z[0]), 0.0};
        });
    }
    throw ValidationError("unknown symbol preset: " + name);
}

}  // namespace modheat
