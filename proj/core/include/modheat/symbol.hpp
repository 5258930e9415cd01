// Phase-space symbols sigma(z), z in R^{2d}, with a declared order m.
// Closed-form symbols evaluate exactly anywhere; sampled symbols live on a
// phase-space grid and are interpolated with a 4-point Lagrange rule per axis.
#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "modheat/grid.hpp"

namespace modheat {

class Symbol {
  public:
    using Fn = std::function<Complex(const std::vector<double>&)>;

    static Symbol closed_form(std::string label, double order, std::size_t spatial_dim, Fn fn);
    // table is a GridFunction of dimension 2 * spatial_dim
    static Symbol sampled(std::string label, double order, GridFunction table);

    Complex eval(const std::vector<double>& z) const;
    Complex eval2(double u, double w) const;  // spatial_dim == 1 fast path

    const std::string& label() const { return label_; }
    double order() const { return order_; }
    std::size_t spatial_dim() const { return spatial_dim_; }
    bool is_closed_form() const { return static_cast<bool>(fn_); }

  private:
    Symbol() = default;
    std::string label_;
    double order_ = 0.0;
    std::size_t spatial_dim_ = 1;
    Fn fn_;
    std::shared_ptr<const GridFunction> table_;
};

// named presets: "one", "gauss" (e^{-|z|^2}), "jbracket:m" (<z>^m), "sin1"
Symbol symbol_preset(const std::string& name, std::size_t spatial_dim = 1);

}  // namespace modheat
