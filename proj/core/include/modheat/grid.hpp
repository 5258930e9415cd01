// Uniform tensor grids on [-L, L)^d and complex-valued functions sampled on
// them. The grid excludes the +L endpoint so that the n samples per axis are
// one period of the DFT; the trapezoid rule on the periodic extension is then
// h^d times the plain sum.
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "modheat/errors.hpp"

namespace modheat {

using Complex = std::complex<double>;

struct GridGeometry {
    std::size_t d = 1;   // ambient dimension
    double L = 12.0;     // half-width per axis
    std::size_t n = 2048;  // samples per axis

    double spacing() const { return 2.0 * L / static_cast<double>(n); }
    std::size_t node_count() const {
        std::size_t t = 1;
        for (std::size_t i = 0; i < d; ++i) t *= n;
        return t;
    }
    double cell_volume() const;
    std::vector<double> axis() const;

    // flat index <-> per-axis indices (row-major, axis 0 slowest)
    std::vector<std::size_t> unflatten(std::size_t flat) const;
    std::size_t flatten(const std::vector<std::size_t>& idx) const;
    std::vector<double> node(std::size_t flat) const;

    bool operator==(const GridGeometry&) const = default;

    void validate() const;
};

class GridFunction {
  public:
    GridFunction() = default;
    explicit GridFunction(GridGeometry g)
        : geom_(g), values_(g.node_count(), Complex{0.0, 0.0}) {
        geom_.validate();
    }
    GridFunction(GridGeometry g, std::vector<Complex> v);

    const GridGeometry& geometry() const { return geom_; }
    const std::vector<Complex>& values() const { return values_; }
    std::vector<Complex>& values() { return values_; }
    Complex& operator[](std::size_t i) { return values_[i]; }
    const Complex& operator[](std::size_t i) const { return values_[i]; }
    std::size_t size() const { return values_.size(); }

    double l2_norm() const;
    // <f, g> = h^d sum f conj(g)
    Complex inner(const GridFunction& other) const;

    GridFunction& operator+=(const GridFunction& other);
    GridFunction& operator-=(const GridFunction& other);
    GridFunction& operator*=(Complex s);

  private:
    GridGeometry geom_;
    std::vector<Complex> values_;
};

void check_same_grid(const GridGeometry& a, const GridGeometry& b, const char* what);

// Integer-sample translation with zero fill outside the domain; used by
// time-frequency shifts. shift[i] is in samples along axis i.
GridFunction shift_samples(const GridFunction& f, const std::vector<long>& shift);

}  // namespace modheat
