#ifndef MMGROUND_KERNELS_HPP
#define MMGROUND_KERNELS_HPP

#include <cstddef>
#include <cstdint>

// Dense array kernels used by the spectrum and costmap hot paths.
// Each kernel has a scalar reference implementation plus AVX2 (x86) and
// NEON (aarch64) variants selected once at startup from CPU features.
// SIMD variants avoid FMA contraction so every variant produces results
// bitwise identical to the scalar reference; the unit tests assert this.
//
// Set MMGROUND_FORCE_SCALAR=1 in the environment to pin the scalar path.

namespace mmground::kernels {

// dst[i] = src[i] * s, over n doubles. Interleaved complex data is
// just 2n doubles.
using ScaleFn = void (*)(double* dst, const double* src, std::size_t n, double s);

// out[i] = re[i]^2 + im[i]^2 for interleaved complex input (re,im pairs).
using Mag2Fn = void (*)(double* out, const double* interleaved, std::size_t n);

// Index of the largest element; first occurrence wins ties. n >= 1.
using ArgmaxFn = std::size_t (*)(const double* x, std::size_t n);

// dst[i] = max(dst[i], src[i]) over bytes.
using U8MaxFn = void (*)(std::uint8_t* dst, const std::uint8_t* src, std::size_t n);

extern const ScaleFn scale;
extern const Mag2Fn mag2;
extern const ArgmaxFn argmax;
extern const U8MaxFn u8_max_inplace;

// Scalar references, exported for equivalence tests.
void scale_scalar(double* dst, const double* src, std::size_t n, double s);
void mag2_scalar(double* out, const double* interleaved, std::size_t n);
std::size_t argmax_scalar(const double* x, std::size_t n);
void u8_max_inplace_scalar(std::uint8_t* dst, const std::uint8_t* src, std::size_t n);

// Name of the active variant: "scalar", "avx2" or "neon".
const char* active_variant();

}  // namespace mmground::kernels

#endif
