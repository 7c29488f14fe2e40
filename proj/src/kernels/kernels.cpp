#include "mmground/kernels.hpp"

#include <cstdlib>

namespace mmground::kernels {

#if defined(__x86_64__) || defined(_M_X64)
void scale_avx2(double*, const double*, std::size_t, double);
void mag2_avx2(double*, const double*, std::size_t);
std::size_t argmax_avx2(const double*, std::size_t);
void u8_max_inplace_avx2(std::uint8_t*, const std::uint8_t*, std::size_t);
#endif
#if defined(__aarch64__)
void scale_neon(double*, const double*, std::size_t, double);
void mag2_neon(double*, const double*, std::size_t);
std::size_t argmax_neon(const double*, std::size_t);
void u8_max_inplace_neon(std::uint8_t*, const std::uint8_t*, std::size_t);
#endif

namespace {

struct Table {
    ScaleFn scale = scale_scalar;
    Mag2Fn mag2 = mag2_scalar;
    ArgmaxFn argmax = argmax_scalar;
    U8MaxFn u8max = u8_max_inplace_scalar;
    const char* name = "scalar";
};

Table pick() {
    Table t;
    const char* force = std::getenv("MMGROUND_FORCE_SCALAR");
    if (force && force[0] == '1') return t;
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2")) {
        t.scale = scale_avx2;
        t.mag2 = mag2_avx2;
        t.argmax = argmax_avx2;
        t.u8max = u8_max_inplace_avx2;
        t.name = "avx2";
    }
#elif defined(__aarch64__)
    t.scale = scale_neon;
    t.mag2 = mag2_neon;
    t.argmax = argmax_neon;
    t.u8max = u8_max_inplace_neon;
    t.name = "neon";
#endif
    return t;
}

const Table g_table = pick();

}  // namespace

const ScaleFn scale = g_table.scale;
const Mag2Fn mag2 = g_table.mag2;
const ArgmaxFn argmax = g_table.argmax;
const U8MaxFn u8_max_inplace = g_table.u8max;

const char* active_variant() { return g_table.name; }

}  // namespace mmground::kernels
