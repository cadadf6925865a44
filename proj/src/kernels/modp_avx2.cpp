#include "hf/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace hf::kern {

namespace {

constexpr uint32_t DOUBLE_SAFE_P = 1u << 26;  // products stay below 2^52

inline __m256i reduce_once(__m256i t, __m256i vp) {
    // t in [0, 2p): subtract p where t >= p (unsigned compare via min)
    __m256i m = _mm256_min_epu32(t, _mm256_sub_epi32(t, vp));
    return m;
}

void a_addmod(uint32_t* r, const uint32_t* a, const uint32_t* b, size_t n, uint32_t p) {
    __m256i vp = _mm256_set1_epi32((int)p);
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i va = _mm256_loadu_si256((const __m256i*)(a + i));
        __m256i vb = _mm256_loadu_si256((const __m256i*)(b + i));
        __m256i t = _mm256_add_epi32(va, vb);
        _mm256_storeu_si256((__m256i*)(r + i), reduce_once(t, vp));
    }
    for (; i < n; ++i) {
        uint32_t t = a[i] + b[i];
        r[i] = t >= p ? t - p : t;
    }
}

void a_submod(uint32_t* r, const uint32_t* a, const uint32_t* b, size_t n, uint32_t p) {
    __m256i vp = _mm256_set1_epi32((int)p);
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i va = _mm256_loadu_si256((const __m256i*)(a + i));
        __m256i vb = _mm256_loadu_si256((const __m256i*)(b + i));
        __m256i t = _mm256_sub_epi32(va, vb);
        // where a < b the subtraction wrapped; adding p fixes it
        __m256i fixed = _mm256_add_epi32(t, vp);
        _mm256_storeu_si256((__m256i*)(r + i), _mm256_min_epu32(t, fixed));
    }
    for (; i < n; ++i) {
        uint32_t t = a[i] - b[i];
        r[i] = a[i] < b[i] ? t + p : t;
    }
}

// (a*x + add) mod p on 4 lanes via doubles; valid for p < 2^26
inline __m256d mulmod4(__m256d vx, __m256d va, __m256d vadd, __m256d vp, __m256d vinvp) {
    __m256d prod = _mm256_mul_pd(vx, va);
    __m256d q = _mm256_floor_pd(_mm256_mul_pd(prod, vinvp));
    __m256d rem = _mm256_sub_pd(prod, _mm256_mul_pd(q, vp));
    // q may be off by one either way
    __m256d rem_lo = _mm256_add_pd(rem, vp);
    rem = _mm256_blendv_pd(rem, rem_lo, rem);  // rem < 0 ? rem+p : rem  (sign bit blend)
    __m256d rem_hi = _mm256_sub_pd(rem, vp);
    rem = _mm256_blendv_pd(rem_hi, rem, _mm256_cmp_pd(rem, vp, _CMP_LT_OQ));
    rem = _mm256_add_pd(rem, vadd);
    rem_hi = _mm256_sub_pd(rem, vp);
    rem = _mm256_blendv_pd(rem_hi, rem, _mm256_cmp_pd(rem, vp, _CMP_LT_OQ));
    return rem;
}

template <bool Subtract>
void axpy_impl(uint32_t* r, const uint32_t* x, uint32_t a, size_t n, uint32_t p) {
    __m256d vp = _mm256_set1_pd((double)p);
    __m256d vinvp = _mm256_set1_pd(1.0 / (double)p);
    __m256d va = _mm256_set1_pd((double)(Subtract ? (a == 0 ? 0 : p - a) : a));
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m128i xi = _mm_loadu_si128((const __m128i*)(x + i));
        __m128i ri = _mm_loadu_si128((const __m128i*)(r + i));
        __m256d vx = _mm256_cvtepi32_pd(xi);
        __m256d vr = _mm256_cvtepi32_pd(ri);
        __m256d res = mulmod4(vx, va, vr, vp, vinvp);
        _mm_storeu_si128((__m128i*)(r + i), _mm256_cvttpd_epi32(res));
    }
    uint64_t aa = Subtract ? (a == 0 ? 0 : p - a) : a;
    for (; i < n; ++i) {
        uint64_t t = (uint64_t)x[i] * aa % p + r[i];
        r[i] = (uint32_t)(t >= p ? t - p : t);
    }
}

void a_scalmul(uint32_t* r, const uint32_t* x, uint32_t s, size_t n, uint32_t p) {
    if (p >= DOUBLE_SAFE_P) {
        scalar_kernels().vec_scalmul(r, x, s, n, p);
        return;
    }
    __m256d vp = _mm256_set1_pd((double)p);
    __m256d vinvp = _mm256_set1_pd(1.0 / (double)p);
    __m256d va = _mm256_set1_pd((double)s);
    __m256d vzero = _mm256_setzero_pd();
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m128i xi = _mm_loadu_si128((const __m128i*)(x + i));
        __m256d vx = _mm256_cvtepi32_pd(xi);
        __m256d res = mulmod4(vx, va, vzero, vp, vinvp);
        _mm_storeu_si128((__m128i*)(r + i), _mm256_cvttpd_epi32(res));
    }
    for (; i < n; ++i) r[i] = (uint32_t)((uint64_t)x[i] * s % p);
}

void a_axpy(uint32_t* r, const uint32_t* x, uint32_t a, size_t n, uint32_t p) {
    if (p >= DOUBLE_SAFE_P) {
        scalar_kernels().vec_axpy(r, x, a, n, p);
        return;
    }
    axpy_impl<false>(r, x, a, n, p);
}

void a_axmy(uint32_t* r, const uint32_t* x, uint32_t a, size_t n, uint32_t p) {
    if (p >= DOUBLE_SAFE_P) {
        scalar_kernels().vec_axmy(r, x, a, n, p);
        return;
    }
    axpy_impl<true>(r, x, a, n, p);
}

}  // namespace

const Kernels& avx2_kernels() {
    static const Kernels k{"avx2", a_addmod, a_submod, a_scalmul, a_axpy, a_axmy};
    return k;
}

}  // namespace hf::kern

#else

namespace hf::kern {
const Kernels& avx2_kernels() { return scalar_kernels(); }
}  // namespace hf::kern

#endif
