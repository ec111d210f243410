#include "vlab/kernels.hpp"

#include "vlab/exact.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define VLAB_X86 1
#include <immintrin.h>
#else
#define VLAB_X86 0
#endif

#if defined(__aarch64__) || defined(__ARM_NEON)
#define VLAB_NEON 1
#include <arm_neon.h>
#else
#define VLAB_NEON 0
#endif

namespace vlab::kernels {

namespace {

// f[hi + i] += f[lo + i] on one lattice block.
void add_block_scalar(std::int64_t* hi, const std::int64_t* lo, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) hi[i] += lo[i];
}

#if VLAB_X86
__attribute__((target("avx2"))) void add_block_avx2(std::int64_t* hi, const std::int64_t* lo,
                                                    std::size_t len) {
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<__m256i*>(hi + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(lo + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(hi + i), _mm256_add_epi64(a, b));
    }
    for (; i < len; ++i) hi[i] += lo[i];
}

__attribute__((target("avx2"))) void norm_sq_avx2(const double* dx, const double* dy,
                                                  const double* dz, double* out,
                                                  std::size_t count) {
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        __m256d x = _mm256_loadu_pd(dx + i);
        __m256d y = _mm256_loadu_pd(dy + i);
        __m256d z = _mm256_loadu_pd(dz + i);
        // mul then add, no FMA: matches the scalar path bit for bit.
        __m256d s = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(x, x), _mm256_mul_pd(y, y)),
                                  _mm256_mul_pd(z, z));
        _mm256_storeu_pd(out + i, s);
    }
    for (; i < count; ++i) out[i] = dx[i] * dx[i] + dy[i] * dy[i] + dz[i] * dz[i];
}
#endif

#if VLAB_NEON
void add_block_neon(std::int64_t* hi, const std::int64_t* lo, std::size_t len) {
    std::size_t i = 0;
    for (; i + 2 <= len; i += 2) {
        int64x2_t a = vld1q_s64(hi + i);
        int64x2_t b = vld1q_s64(lo + i);
        vst1q_s64(hi + i, vaddq_s64(a, b));
    }
    for (; i < len; ++i) hi[i] += lo[i];
}

void norm_sq_neon(const double* dx, const double* dy, const double* dz, double* out,
                  std::size_t count) {
    std::size_t i = 0;
    for (; i + 2 <= count; i += 2) {
        float64x2_t x = vld1q_f64(dx + i);
        float64x2_t y = vld1q_f64(dy + i);
        float64x2_t z = vld1q_f64(dz + i);
        float64x2_t s = vaddq_f64(vaddq_f64(vmulq_f64(x, x), vmulq_f64(y, y)), vmulq_f64(z, z));
        vst1q_f64(out + i, s);
    }
    for (; i < count; ++i) out[i] = dx[i] * dx[i] + dy[i] * dy[i] + dz[i] * dz[i];
}
#endif

Isa detect_isa() {
#if VLAB_X86
    if (__builtin_cpu_supports("avx2")) return Isa::Avx2;
#endif
#if VLAB_NEON
    return Isa::Neon;
#endif
    return Isa::Scalar;
}

Isa g_isa = detect_isa();

void zeta_with(std::int64_t* f, int bits,
               void (*add_block)(std::int64_t*, const std::int64_t*, std::size_t)) {
    const std::size_t size = std::size_t(1) << bits;
    for (int b = 0; b < bits; ++b) {
        const std::size_t half = std::size_t(1) << b;
        for (std::size_t base = 0; base < size; base += 2 * half)
            add_block(f + base + half, f + base, half);
    }
}

} // namespace

Isa active_isa() { return g_isa; }

std::string isa_name(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
        case Isa::Neon: return "neon";
    }
    return "?";
}

bool isa_supported(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return true;
        case Isa::Avx2:
#if VLAB_X86
            return __builtin_cpu_supports("avx2") != 0;
#else
            return false;
#endif
        case Isa::Neon:
#if VLAB_NEON
            return true;
#else
            return false;
#endif
    }
    return false;
}

void set_isa(Isa isa) {
    if (!isa_supported(isa)) throw RangeError("kernels: " + isa_name(isa) + " not supported here");
    g_isa = isa;
}

void subset_zeta_i64_scalar(std::int64_t* f, int bits) {
    zeta_with(f, bits, add_block_scalar);
}

void subset_zeta_i64(std::int64_t* f, int bits) {
    switch (g_isa) {
#if VLAB_X86
        case Isa::Avx2: zeta_with(f, bits, add_block_avx2); return;
#endif
#if VLAB_NEON
        case Isa::Neon: zeta_with(f, bits, add_block_neon); return;
#endif
        default: zeta_with(f, bits, add_block_scalar); return;
    }
}

void norm_sq_batch_scalar(const double* dx, const double* dy, const double* dz, double* out,
                          std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) out[i] = dx[i] * dx[i] + dy[i] * dy[i] + dz[i] * dz[i];
}

void norm_sq_batch(const double* dx, const double* dy, const double* dz, double* out,
                   std::size_t count) {
    switch (g_isa) {
#if VLAB_X86
        case Isa::Avx2: norm_sq_avx2(dx, dy, dz, out, count); return;
#endif
#if VLAB_NEON
        case Isa::Neon: norm_sq_neon(dx, dy, dz, out, count); return;
#endif
        default: norm_sq_batch_scalar(dx, dy, dz, out, count); return;
    }
}

} // namespace vlab::kernels
