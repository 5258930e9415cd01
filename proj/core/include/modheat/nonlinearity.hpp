// Pointwise nonlinearities F with F(0) = 0: the power family lambda |u|^{2k} u
// and finite truncations of entire series sum c_{jk} u^j conj(u)^k.
#pragma once

#include <map>
#include <string>
#include <utility>

#include "modheat/grid.hpp"

namespace modheat {

class Nonlinearity {
  public:
    using SeriesTable = std::map<std::pair<std::size_t, std::size_t>, Complex>;

    static Nonlinearity power(Complex lambda, std::size_t k);
    static Nonlinearity series(SeriesTable coeffs);  // requires c_{00} = 0
    static Nonlinearity zero() { return power(Complex{0, 0}, 0); }

    Complex operator()(Complex u) const;
    bool is_zero() const;
    std::string describe() const;

  private:
    Nonlinearity() = default;
    bool is_power_ = true;
    Complex lambda_{0, 0};
    std::size_t k_ = 0;
    SeriesTable coeffs_;
};

GridFunction eval_nonlinearity(const GridFunction& u, const Nonlinearity& F);

}  // namespace modheat
