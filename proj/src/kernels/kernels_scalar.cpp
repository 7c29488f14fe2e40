#include "mmground/kernels.hpp"

namespace mmground::kernels {

void scale_scalar(double* dst, const double* src, std::size_t n, double s) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = src[i] * s;
}

void mag2_scalar(double* out, const double* interleaved, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        double re = interleaved[2 * i];
        double im = interleaved[2 * i + 1];
        out[i] = re * re + im * im;
    }
}

std::size_t argmax_scalar(const double* x, std::size_t n) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (x[i] > x[best]) best = i;
    }
    return best;
}

void u8_max_inplace_scalar(std::uint8_t* dst, const std::uint8_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        if (src[i] > dst[i]) dst[i] = src[i];
    }
}

}  // namespace mmground::kernels
