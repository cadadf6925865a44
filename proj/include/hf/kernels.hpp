#pragma once

#include <cstddef>
#include <cstdint>

namespace hf::kern {

// Vector kernels over residues mod p, p < 2^31. Inputs are assumed reduced.
// r and x may alias only as r == x for scalmul.
struct Kernels {
    const char* name;
    void (*vec_addmod)(uint32_t* r, const uint32_t* a, const uint32_t* b, size_t n, uint32_t p);
    void (*vec_submod)(uint32_t* r, const uint32_t* a, const uint32_t* b, size_t n, uint32_t p);
    void (*vec_scalmul)(uint32_t* r, const uint32_t* a, uint32_t s, size_t n, uint32_t p);
    // r[i] = (r[i] + a*x[i]) mod p
    void (*vec_axpy)(uint32_t* r, const uint32_t* x, uint32_t a, size_t n, uint32_t p);
    // r[i] = (r[i] - a*x[i]) mod p
    void (*vec_axmy)(uint32_t* r, const uint32_t* x, uint32_t a, size_t n, uint32_t p);
};

const Kernels& scalar_kernels();
const Kernels& avx2_kernels();   // falls back to scalar per-call when p >= 2^26
const Kernels& active();         // picked once at startup from CPU features

}  // namespace hf::kern
