#include "doctest.h"

#include "hf/kernels.hpp"

#include <random>
#include <vector>

using namespace hf;

namespace {

std::vector<uint32_t> random_vec(std::mt19937_64& rng, size_t n, uint32_t p) {
    std::vector<uint32_t> v(n);
    for (auto& x : v) x = (uint32_t)(rng() % p);
    return v;
}

}  // namespace

TEST_CASE("simd kernels agree with scalar reference") {
    const auto& S = kern::scalar_kernels();
    const auto& A = kern::avx2_kernels();
    std::mt19937_64 rng(12345);
    std::vector<uint32_t> primes = {2, 3, 5, 97, 65521, (1u << 26) - 5, 2147483629u};
    for (uint32_t p : primes) {
        for (size_t n : {0, 1, 3, 7, 8, 9, 31, 100, 1025}) {
            auto a = random_vec(rng, n, p);
            auto b = random_vec(rng, n, p);
            uint32_t s = (uint32_t)(rng() % p);

            std::vector<uint32_t> r1(n), r2(n);
            S.vec_addmod(r1.data(), a.data(), b.data(), n, p);
            A.vec_addmod(r2.data(), a.data(), b.data(), n, p);
            CHECK(r1 == r2);

            S.vec_submod(r1.data(), a.data(), b.data(), n, p);
            A.vec_submod(r2.data(), a.data(), b.data(), n, p);
            CHECK(r1 == r2);

            S.vec_scalmul(r1.data(), a.data(), s, n, p);
            A.vec_scalmul(r2.data(), a.data(), s, n, p);
            CHECK(r1 == r2);

            r1 = b;
            r2 = b;
            S.vec_axpy(r1.data(), a.data(), s, n, p);
            A.vec_axpy(r2.data(), a.data(), s, n, p);
            CHECK(r1 == r2);

            r1 = b;
            r2 = b;
            S.vec_axmy(r1.data(), a.data(), s, n, p);
            A.vec_axmy(r2.data(), a.data(), s, n, p);
            CHECK(r1 == r2);
        }
    }
}

TEST_CASE("kernel edge values") {
    const auto& S = kern::scalar_kernels();
    const auto& A = kern::avx2_kernels();
    uint32_t p = (1u << 26) - 5;  // largest prime regime the double path handles
    std::vector<uint32_t> a(16, p - 1), r1(16, p - 1), r2(16, p - 1);
    S.vec_axpy(r1.data(), a.data(), p - 1, 16, p);
    A.vec_axpy(r2.data(), a.data(), p - 1, 16, p);
    CHECK(r1 == r2);
}
