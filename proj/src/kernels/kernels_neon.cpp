// NEON variants (baseline on aarch64). No FMA contraction: vmulq/vaddq only,
// matching scalar rounding bit for bit.
#if defined(__aarch64__)

#include <arm_neon.h>

#include "mmground/kernels.hpp"

namespace mmground::kernels {

void scale_neon(double* dst, const double* src, std::size_t n, double s) {
    const float64x2_t vs = vdupq_n_f64(s);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(dst + i, vmulq_f64(vld1q_f64(src + i), vs));
    }
    for (; i < n; ++i) dst[i] = src[i] * s;
}

void mag2_neon(double* out, const double* interleaved, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2x2_t z = vld2q_f64(interleaved + 2 * i);  // deinterleave re/im
        float64x2_t re2 = vmulq_f64(z.val[0], z.val[0]);
        float64x2_t im2 = vmulq_f64(z.val[1], z.val[1]);
        vst1q_f64(out + i, vaddq_f64(re2, im2));
    }
    for (; i < n; ++i) {
        double re = interleaved[2 * i];
        double im = interleaved[2 * i + 1];
        out[i] = re * re + im * im;
    }
}

std::size_t argmax_neon(const double* x, std::size_t n) {
    if (n < 4) return argmax_scalar(x, n);
    float64x2_t best = vld1q_f64(x);
    uint64x2_t best_idx = {0, 1};
    uint64x2_t idx = best_idx;
    const uint64x2_t step = vdupq_n_u64(2);
    std::size_t i = 2;
    for (; i + 2 <= n; i += 2) {
        idx = vaddq_u64(idx, step);
        float64x2_t v = vld1q_f64(x + i);
        uint64x2_t gt = vcgtq_f64(v, best);
        best = vbslq_f64(gt, v, best);
        best_idx = vbslq_u64(gt, idx, best_idx);
    }
    double vals[2];
    std::uint64_t idxs[2];
    vst1q_f64(vals, best);
    vst1q_u64(idxs, best_idx);
    double best_val = vals[0];
    std::size_t best_i = std::size_t(idxs[0]);
    if (vals[1] > best_val || (vals[1] == best_val && std::size_t(idxs[1]) < best_i)) {
        best_val = vals[1];
        best_i = std::size_t(idxs[1]);
    }
    for (; i < n; ++i) {
        if (x[i] > best_val) {
            best_val = x[i];
            best_i = i;
        }
    }
    return best_i;
}

void u8_max_inplace_neon(std::uint8_t* dst, const std::uint8_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        vst1q_u8(dst + i, vmaxq_u8(vld1q_u8(dst + i), vld1q_u8(src + i)));
    }
    for (; i < n; ++i) {
        if (src[i] > dst[i]) dst[i] = src[i];
    }
}

}  // namespace mmground::kernels

#endif  // aarch64
