#if defined(__x86_64__)

#include <immintrin.h>

#include "derilab/kernels/modp.hpp"

namespace derilab::kernels {

bool avx2_available() { return __builtin_cpu_supports("avx2"); }

namespace {

// Shoup modular multiplication: with ash = floor(a*2^32/p) precomputed,
// a*x mod p = a*x - floor(ash*x/2^32)*p up to one conditional subtract.
// Valid for a, x < p < 2^31.
inline __m256i mul_mod_shoup(__m256i x, __m256i av, __m256i ashv, __m256i pv64, __m256i pv32) {
    const __m256i lo_mask = _mm256_set1_epi64x(0x00000000ffffffffll);
    __m256i x_odd = _mm256_srli_epi64(x, 32);

    __m256i q_e = _mm256_srli_epi64(_mm256_mul_epu32(x, ashv), 32);
    __m256i q_o = _mm256_srli_epi64(_mm256_mul_epu32(x_odd, ashv), 32);
    __m256i t_e = _mm256_sub_epi64(_mm256_mul_epu32(x, av), _mm256_mul_epu32(q_e, pv64));
    __m256i t_o = _mm256_sub_epi64(_mm256_mul_epu32(x_odd, av), _mm256_mul_epu32(q_o, pv64));

    __m256i r = _mm256_or_si256(_mm256_and_si256(t_e, lo_mask), _mm256_slli_epi64(t_o, 32));
    // r in [0, 2p): fold once
    return _mm256_min_epu32(r, _mm256_sub_epi32(r, pv32));
}

}  // namespace

void modp_axpy_avx2(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n,
                    std::uint32_t p) {
    if (a == 0) return;
    const std::uint32_t ash = std::uint32_t((std::uint64_t(a) << 32) / p);
    const __m256i av = _mm256_set1_epi64x(a);
    const __m256i ashv = _mm256_set1_epi64x(ash);
    const __m256i pv64 = _mm256_set1_epi64x(p);
    const __m256i pv32 = _mm256_set1_epi32(int(p));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i xv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        __m256i yv = _mm256_loadu_si256(reinterpret_cast<__m256i*>(y + i));
        __m256i prod = mul_mod_shoup(xv, av, ashv, pv64, pv32);
        __m256i s = _mm256_add_epi32(yv, prod);
        s = _mm256_min_epu32(s, _mm256_sub_epi32(s, pv32));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), s);
    }
    if (i < n) modp_axpy_scalar(y + i, x + i, a, n - i, p);
}

void modp_scale_avx2(std::uint32_t* y, std::uint32_t a, std::size_t n, std::uint32_t p) {
    const std::uint32_t ash = std::uint32_t((std::uint64_t(a) << 32) / p);
    const __m256i av = _mm256_set1_epi64x(a);
    const __m256i ashv = _mm256_set1_epi64x(ash);
    const __m256i pv64 = _mm256_set1_epi64x(p);
    const __m256i pv32 = _mm256_set1_epi32(int(p));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i yv = _mm256_loadu_si256(reinterpret_cast<__m256i*>(y + i));
        __m256i prod = mul_mod_shoup(yv, av, ashv, pv64, pv32);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), prod);
    }
    if (i < n) modp_scale_scalar(y + i, a, n - i, p);
}

}  // namespace derilab::kernels

#endif
