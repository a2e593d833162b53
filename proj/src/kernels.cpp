#include "srw/kernels.hpp"

#include <cstddef>

#if defined(__x86_64__)
#include <immintrin.h>
#endif
#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace srw {

void vec_add_scalar(const Field& F, std::span<Elem> dst, std::span<const Elem> src) {
    const size_t n = dst.size();
    switch (F.add_kernel()) {
        case AddKernel::Char2:
            for (size_t i = 0; i < n; ++i) dst[i] ^= src[i];
            break;
        case AddKernel::OddPrime: {
            const Elem q = static_cast<Elem>(F.q());
            for (size_t i = 0; i < n; ++i) {
                Elem s = dst[i] + src[i];
                dst[i] = s >= q ? s - q : s;
            }
            break;
        }
        default:
            for (size_t i = 0; i < n; ++i) dst[i] = F.add(dst[i], src[i]);
    }
}

#if defined(__x86_64__)

namespace {

__attribute__((target("avx2")))
void xor_avx2(Elem* dst, const Elem* src, size_t n) {
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
    }
    for (; i < n; ++i) dst[i] ^= src[i];
}

__attribute__((target("avx2")))
void addmod_avx2(Elem* dst, const Elem* src, size_t n, Elem q) {
    const __m256i vq = _mm256_set1_epi32(static_cast<int>(q));
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i s = _mm256_add_epi32(a, b);
        // s - q wraps to a huge unsigned value when s < q, so the unsigned
        // min of s and s - q is the reduced residue
        __m256i r = _mm256_sub_epi32(s, vq);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_min_epu32(s, r));
    }
    for (; i < n; ++i) {
        Elem s = dst[i] + src[i];
        dst[i] = s >= q ? s - q : s;
    }
}

bool cpu_has_avx2() {
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok;
}

}  // namespace

bool simd_available() { return cpu_has_avx2(); }

void vec_add_simd(const Field& F, std::span<Elem> dst, std::span<const Elem> src) {
    if (!cpu_has_avx2()) {
        vec_add_scalar(F, dst, src);
        return;
    }
    switch (F.add_kernel()) {
        case AddKernel::Char2:
            xor_avx2(dst.data(), src.data(), dst.size());
            break;
        case AddKernel::OddPrime:
            addmod_avx2(dst.data(), src.data(), dst.size(), static_cast<Elem>(F.q()));
            break;
        default:
            vec_add_scalar(F, dst, src);
    }
}

#elif defined(__aarch64__)

namespace {

void xor_neon(Elem* dst, const Elem* src, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        uint32x4_t a = vld1q_u32(dst + i);
        uint32x4_t b = vld1q_u32(src + i);
        vst1q_u32(dst + i, veorq_u32(a, b));
    }
    for (; i < n; ++i) dst[i] ^= src[i];
}

void addmod_neon(Elem* dst, const Elem* src, size_t n, Elem q) {
    const uint32x4_t vq = vdupq_n_u32(q);
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        uint32x4_t s = vaddq_u32(vld1q_u32(dst + i), vld1q_u32(src + i));
        uint32x4_t mask = vcgeq_u32(s, vq);
        vst1q_u32(dst + i, vsubq_u32(s, vandq_u32(mask, vq)));
    }
    for (; i < n; ++i) {
        Elem s = dst[i] + src[i];
        dst[i] = s >= q ? s - q : s;
    }
}

}  // namespace

bool simd_available() { return true; }

void vec_add_simd(const Field& F, std::span<Elem> dst, std::span<const Elem> src) {
    switch (F.add_kernel()) {
        case AddKernel::Char2:
            xor_neon(dst.data(), src.data(), dst.size());
            break;
        case AddKernel::OddPrime:
            addmod_neon(dst.data(), src.data(), dst.size(), static_cast<Elem>(F.q()));
            break;
        default:
            vec_add_scalar(F, dst, src);
    }
}

#else

bool simd_available() { return false; }

void vec_add_simd(const Field& F, std::span<Elem> dst, std::span<const Elem> src) {
    vec_add_scalar(F, dst, src);
}

#endif

void vec_add(const Field& F, std::span<Elem> dst, std::span<const Elem> src) {
    if (simd_available() && F.add_kernel() != AddKernel::Generic)
        vec_add_simd(F, dst, src);
    else
        vec_add_scalar(F, dst, src);
}

}  // namespace srw
