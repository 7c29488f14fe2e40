// AVX2 variants. Built with -mavx2 -mno-fma: plain mul/add/max only, so
// rounding matches the scalar reference exactly.
#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "mmground/kernels.hpp"

namespace mmground::kernels {

void scale_avx2(double* dst, const double* src, std::size_t n, double s) {
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(dst + i, _mm256_mul_pd(_mm256_loadu_pd(src + i), vs));
    }
    for (; i < n; ++i) dst[i] = src[i] * s;
}

void mag2_avx2(double* out, const double* interleaved, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d a = _mm256_loadu_pd(interleaved + 2 * i);      // re0 im0 re1 im1
        __m256d b = _mm256_loadu_pd(interleaved + 2 * i + 4);  // re2 im2 re3 im3
        __m256d aa = _mm256_mul_pd(a, a);
        __m256d bb = _mm256_mul_pd(b, b);
        // hadd pairs lanes as [0+1, 4+5, 2+3, 6+7]; restore order afterwards
        __m256d h = _mm256_hadd_pd(aa, bb);
        _mm256_storeu_pd(out + i, _mm256_permute4x64_pd(h, 0xD8));
    }
    for (; i < n; ++i) {
        double re = interleaved[2 * i];
        double im = interleaved[2 * i + 1];
        out[i] = re * re + im * im;
    }
}

std::size_t argmax_avx2(const double* x, std::size_t n) {
    if (n < 8) return argmax_scalar(x, n);
    // Per-lane running max over stride-4 subsequences; strict > keeps the
    // first occurrence within each lane, the final merge keeps the lowest
    // index among lanes that tie on value.
    __m256d best = _mm256_loadu_pd(x);
    __m256i best_idx = _mm256_setr_epi64x(0, 1, 2, 3);
    __m256i idx = best_idx;
    const __m256i step = _mm256_set1_epi64x(4);
    std::size_t i = 4;
    for (; i + 4 <= n; i += 4) {
        idx = _mm256_add_epi64(idx, step);
        __m256d v = _mm256_loadu_pd(x + i);
        __m256d gt = _mm256_cmp_pd(v, best, _CMP_GT_OQ);
        best = _mm256_blendv_pd(best, v, gt);
        best_idx = _mm256_blendv_epi8(best_idx, idx, _mm256_castpd_si256(gt));
    }
    alignas(32) double vals[4];
    alignas(32) long long idxs[4];
    _mm256_store_pd(vals, best);
    _mm256_store_si256(reinterpret_cast<__m256i*>(idxs), best_idx);
    double best_val = vals[0];
    std::size_t best_i = std::size_t(idxs[0]);
    for (int k = 1; k < 4; ++k) {
        if (vals[k] > best_val || (vals[k] == best_val && std::size_t(idxs[k]) < best_i)) {
            best_val = vals[k];
            best_i = std::size_t(idxs[k]);
        }
    }
    for (; i < n; ++i) {
        if (x[i] > best_val) {
            best_val = x[i];
            best_i = i;
        }
    }
    return best_i;
}

void u8_max_inplace_avx2(std::uint8_t* dst, const std::uint8_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_max_epu8(d, s));
    }
    for (; i < n; ++i) {
        if (src[i] > dst[i]) dst[i] = src[i];
    }
}

}  // namespace mmground::kernels

#endif  // x86_64
