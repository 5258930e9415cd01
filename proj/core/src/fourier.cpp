#include "modheat/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

#include "modheat/errors.hpp"

namespace modheat {

namespace {

class PlanCache {
  public:
    static PlanCache& instance() {
        static PlanCache c;
        return c;
    }

    fftw_plan get(std::size_t n, int sign) {
        std::scoped_lock lock(mu_);
        auto key = std::make_pair(n, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        std::vector<Complex> scratch(n);
        auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
        // FFTW_UNALIGNED lets the plan run on any caller buffer.
        fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n), buf, buf,
                                       sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!p) throw Error("fftw plan creation failed");
        plans_.emplace(key, p);
        return p;
    }

  private:
    PlanCache() = default;
    std::mutex mu_;
    std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

}  // namespace

void fft_1d(std::vector<Complex>& data, int sign) {
    fftw_plan p = PlanCache::instance().get(data.size(), sign);
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(p, buf, buf);
}

void fft_nd(std::vector<Complex>& data, std::size_t d, std::size_t n, int sign) {
    if (d == 1) {
        fft_1d(data, sign);
        return;
    }
    std::size_t total = data.size();
    std::vector<Complex> line(n);
    // axis = which index varies within the gathered line
    for (std::size_t axis = 0; axis < d; ++axis) {
        std::size_t stride = 1;
        for (std::size_t a = axis + 1; a < d; ++a) stride *= n;
        const std::size_t block = stride * n;
        for (std::size_t base = 0; base < total; base += block) {
            for (std::size_t off = 0; off < stride; ++off) {
                for (std::size_t j = 0; j < n; ++j) line[j] = data[base + off + j * stride];
                fft_1d(line, sign);
                for (std::size_t j = 0; j < n; ++j) data[base + off + j * stride] = line[j];
            }
        }
    }
}

TrigInterpolator::TrigInterpolator(const GridFunction& f)
    : L_(f.geometry().L), n_(f.geometry().n), coeff_(f.values()) {
    if (f.geometry().d != 1)
        throw ValidationError("TrigInterpolator supports 1-D grid functions");
    fft_1d(coeff_, -1);
    const double inv = 1.0 / static_cast<double>(n_);
    for (auto& c : coeff_) c *= inv;
}

Complex TrigInterpolator::eval(double x) const {
    std::vector<double> xs{x};
    return eval_many(xs)[0];
}

std::vector<Complex> TrigInterpolator::eval_many(const std::vector<double>& xs) const {
    std::vector<Complex> out(xs.size(), Complex{0.0, 0.0});
    const long half = static_cast<long>(n_ / 2);
    for (std::size_t p = 0; p < xs.size(); ++p) {
        const double x = xs[p];
        if (!(std::abs(x) < L_)) continue;  // clamp: represented functions vanish outside
        const double theta = (x + L_) / (2.0 * L_);
        const Complex q = std::polar(1.0, 2.0 * M_PI * theta);
        Complex acc{0.0, 0.0};
        // positive bins m = 0 .. n/2-1 live at storage 0 .. n/2-1
        Complex pw{1.0, 0.0};
        for (long m = 0; m < half; ++m) {
            acc += coeff_[static_cast<std::size_t>(m)] * pw;
            pw *= q;
            if ((m & 63) == 63) pw = std::polar(1.0, 2.0 * M_PI * theta * double(m + 1));
        }
        // negative bins m = -1 .. -(n/2-1) at storage n-1 .. n/2+1
        const Complex qc = std::conj(q);
        pw = qc;
        for (long m = 1; m < half; ++m) {
            acc += coeff_[n_ - static_cast<std::size_t>(m)] * pw;
            pw *= qc;
            if ((m & 63) == 63) pw = std::polar(1.0, -2.0 * M_PI * theta * double(m + 1));
        }
        // Nyquist bin (storage n/2) as cosine
        acc += coeff_[n_ / 2] * std::cos(2.0 * M_PI * theta * static_cast<double>(half));
        out[p] = acc;
    }
    return out;
}

}  // namespace modheat
