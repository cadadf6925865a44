#include "hf/kernels.hpp"

namespace hf::kern {

namespace {

void s_addmod(uint32_t* r, const uint32_t* a, const uint32_t* b, size_t n, uint32_t p) {
    // a, b < p < 2^31 so the sum never wraps
    for (size_t i = 0; i < n; ++i) {
        uint32_t t = a[i] + b[i];
        r[i] = t >= p ? t - p : t;
    }
}

void s_submod(uint32_t* r, const uint32_t* a, const uint32_t* b, size_t n, uint32_t p) {
    for (size_t i = 0; i < n; ++i) {
        uint32_t t = a[i] - b[i];
        r[i] = a[i] < b[i] ? t + p : t;
    }
}

void s_scalmul(uint32_t* r, const uint32_t* a, uint32_t s, size_t n, uint32_t p) {
    for (size_t i = 0; i < n; ++i) r[i] = (uint32_t)((uint64_t)a[i] * s % p);
}

void s_axpy(uint32_t* r, const uint32_t* x, uint32_t a, size_t n, uint32_t p) {
    for (size_t i = 0; i < n; ++i) {
        uint64_t t = (uint64_t)x[i] * a % p + r[i];
        r[i] = (uint32_t)(t >= p ? t - p : t);
    }
}

void s_axmy(uint32_t* r, const uint32_t* x, uint32_t a, size_t n, uint32_t p) {
    for (size_t i = 0; i < n; ++i) {
        uint32_t t = (uint32_t)((uint64_t)x[i] * a % p);
        r[i] = r[i] < t ? r[i] - t + p : r[i] - t;
    }
}

}  // namespace

const Kernels& scalar_kernels() {
    static const Kernels k{"scalar", s_addmod, s_submod, s_scalmul, s_axpy, s_axmy};
    return k;
}

}  // namespace hf::kern
