#include "hf/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace hf::kern {

const Kernels& active() {
    static const Kernels* chosen = [] {
        const char* force = std::getenv("HF_KERNEL");
        if (force && std::strcmp(force, "scalar") == 0) return &scalar_kernels();
#if defined(__x86_64__) || defined(_M_X64)
        if (__builtin_cpu_supports("avx2")) return &avx2_kernels();
#endif
        return &scalar_kernels();
    }();
    return *chosen;
}

}  // namespace hf::kern
