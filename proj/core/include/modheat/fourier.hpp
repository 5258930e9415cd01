// DFT plumbing shared by the STFT, Wigner and quantization modules.
//
// Conventions: forward transform is F(w) = int e^{-2 pi i w y} f(y) dy. On the
// grid y_j = -L + j h the quadrature at the bin frequency w_m = m/(2L) is
//   F(w_m) = h (-1)^m DFT_m[f],   m in [-n/2, n/2),
// with DFT_m = sum_j f_j e^{-2 pi i j m / n} (FFTW forward sign).
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "modheat/grid.hpp"

namespace modheat {

// In-place 1-D FFT, sign = -1 forward (FFTW convention), +1 backward
// (unnormalized). Plans are cached with FFTW_ESTIMATE for reproducibility.
void fft_1d(std::vector<Complex>& data, int sign);

// In-place rank-d FFT on a row-major tensor with n samples per axis.
void fft_nd(std::vector<Complex>& data, std::size_t d, std::size_t n, int sign);

// Signed bin for FFT storage index i in [0, n): i < n/2 ? i : i - n.
inline long signed_bin(std::size_t i, std::size_t n) {
    return i < n / 2 ? static_cast<long>(i) : static_cast<long>(i) - static_cast<long>(n);
}

// storage index of signed bin m (wraps modulo n)
inline std::size_t bin_index(long m, std::size_t n) {
    long r = m % static_cast<long>(n);
    if (r < 0) r += static_cast<long>(n);
    return static_cast<std::size_t>(r);
}

// Band-limited (trigonometric) interpolation of a 1-D grid function. Points
// outside (-L, L) evaluate to zero; the represented functions decay below
// round-off well inside the boundary. The Nyquist coefficient is split
// symmetrically (cosine form), which reproduces grid samples exactly.
class TrigInterpolator {
  public:
    explicit TrigInterpolator(const GridFunction& f);

    Complex eval(double x) const;
    std::vector<Complex> eval_many(const std::vector<double>& xs) const;

  private:
    double L_;
    std::size_t n_;
    std::vector<Complex> coeff_;  // DFT / n, FFT bin order
};

}  // namespace modheat
