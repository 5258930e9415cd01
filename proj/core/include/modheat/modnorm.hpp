// Polynomial weights v_s(z) = (1+|z|^2)^{s/2} and the weighted mixed-norm
// estimators behind the modulation-space norms: inner L^p in position with
// cell a^d, outer L^q in frequency with cell b^d, max replacing the sum when
// an index is infinite (weight applied before the max).
#pragma once

#include <limits>

#include "modheat/stft.hpp"

namespace modheat {

struct Weight {
    enum class Kind { FrequencyOnly, Full };  // 1 (x) v_s  vs  v_s on R^{2d}
    Kind kind = Kind::FrequencyOnly;
    double s = 0.0;
};

double weight_eval(const Weight& w, const PhasePoint& z);

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// p, q in [1, inf]; pass kInf for the sup norm on that index
double mixed_norm(const STFTTable& F, double p, double q, const Weight& w);

// mixed_norm(stft(f, g, grid), p, q, w); grid defaults to
// PhaseGrid::make_default(f.geometry())
double mod_norm(const GridFunction& f, const Window& g, double p, double q, const Weight& w);
double mod_norm(const GridFunction& f, const Window& g, double p, double q, const Weight& w,
                const PhaseGrid& grid);

}  // namespace modheat
