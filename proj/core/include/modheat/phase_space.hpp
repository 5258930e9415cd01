// Points z = (z1, z2) of phase space R^d x R^d and the two coordinate maps
// used by the Gabor-matrix analysis:
//   T_tau(z, y) = ((1-tau) z1 + tau y1, tau z2 + (1-tau) y2)
//   J(z) = (z2, -z1)
#pragma once

#include <cmath>
#include <vector>

#include "modheat/errors.hpp"

namespace modheat {

struct PhasePoint {
    std::vector<double> pos;   // z1, length d
    std::vector<double> freq;  // z2, length d

    std::size_t dim() const { return pos.size(); }
    double norm_sq() const {
        double s = 0.0;
        for (double v : pos) s += v * v;
        for (double v : freq) s += v * v;
        return s;
    }
    double norm() const { return std::sqrt(norm_sq()); }
    // Japanese bracket <z> = (1 + |z|^2)^{1/2}
    double bracket() const { return std::sqrt(1.0 + norm_sq()); }
};

inline PhasePoint make_point(double z1, double z2) { return PhasePoint{{z1}, {z2}}; }

inline void check_same_dim(const PhasePoint& a, const PhasePoint& b) {
    if (a.dim() != b.dim() || a.pos.size() != a.freq.size() || b.pos.size() != b.freq.size())
        throw ValidationError("phase-space points have mismatched dimensions");
}

inline PhasePoint operator+(const PhasePoint& a, const PhasePoint& b) {
    check_same_dim(a, b);
    PhasePoint r = a;
    for (std::size_t i = 0; i < r.pos.size(); ++i) {
        r.pos[i] += b.pos[i];
        r.freq[i] += b.freq[i];
    }
    return r;
}

inline PhasePoint operator-(const PhasePoint& a, const PhasePoint& b) {
    check_same_dim(a, b);
    PhasePoint r = a;
    for (std::size_t i = 0; i < r.pos.size(); ++i) {
        r.pos[i] -= b.pos[i];
        r.freq[i] -= b.freq[i];
    }
    return r;
}

inline PhasePoint t_tau(const PhasePoint& z, const PhasePoint& y, double tau) {
    check_same_dim(z, y);
    PhasePoint r = z;
    for (std::size_t i = 0; i < r.pos.size(); ++i) {
        r.pos[i] = (1.0 - tau) * z.pos[i] + tau * y.pos[i];
        r.freq[i] = tau * z.freq[i] + (1.0 - tau) * y.freq[i];
    }
    return r;
}

inline PhasePoint j_map(const PhasePoint& z) {
    PhasePoint r = z;
    for (std::size_t i = 0; i < r.pos.size(); ++i) {
        r.pos[i] = z.freq[i];
        r.freq[i] = -z.pos[i];
    }
    return r;
}

}  // namespace modheat
