#pragma once

#include "hf/kernels.hpp"
#include "hf/unipoly.hpp"

#include <cstdint>

namespace hf {

// Dense polynomial over F_p, p < 2^31 prime. Coefficients reduced, no trailing zeros.
struct PolyMod {
    uint32_t p = 0;
    std::vector<uint32_t> c;

    PolyMod() = default;
    explicit PolyMod(uint32_t prime) : p(prime) {}
    PolyMod(uint32_t prime, std::vector<uint32_t> coeffs) : p(prime), c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return (int)c.size() - 1; }
    uint32_t lc() const { return c.back(); }
    bool operator==(const PolyMod& o) const { return p == o.p && c == o.c; }
};

uint32_t inv_mod(uint32_t a, uint32_t p);
uint32_t pow_mod_u32(uint32_t a, uint64_t e, uint32_t p);

PolyMod pm_from_z(const ZPoly& f, uint32_t p);
ZPoly pm_to_z(const PolyMod& f);            // lifts to [0, p)
ZPoly pm_to_z_sym(const PolyMod& f);        // lifts to (-p/2, p/2]
PolyMod pm_add(const PolyMod& a, const PolyMod& b);
PolyMod pm_sub(const PolyMod& a, const PolyMod& b);
PolyMod pm_mul(const PolyMod& a, const PolyMod& b);
PolyMod pm_scal(const PolyMod& a, uint32_t s);
PolyMod pm_monic(const PolyMod& a);
void pm_divrem(const PolyMod& a, const PolyMod& b, PolyMod& q, PolyMod& r);
PolyMod pm_rem(const PolyMod& a, const PolyMod& b);
PolyMod pm_gcd(const PolyMod& a, const PolyMod& b);  // monic
PolyMod pm_derivative(const PolyMod& a);
uint32_t pm_eval(const PolyMod& a, uint32_t x);
PolyMod pm_mulmod(const PolyMod& a, const PolyMod& b, const PolyMod& f);
PolyMod pm_powmod(const PolyMod& a, const Int& e, const PolyMod& f);
PolyMod pm_pow(const PolyMod& a, unsigned long e);

struct ModPFactorization {
    uint32_t p = 0;
    uint32_t unit = 1;   // leading unit after reduction
    int degree_drop = 0; // deg f - deg (f mod p), recorded when lc vanishes mod p
    std::vector<std::pair<PolyMod, int>> factors;  // monic irreducible, multiplicity
};

// Complete factorization over F_p: squarefree split, then distinct-degree,
// then seeded equal-degree splitting. Deterministic run to run.
ModPFactorization factor_mod_p(const UniPoly& f, const Int& p);
ModPFactorization factor_mod_p(const ZPoly& f, uint32_t p);

// Multiset of irreducible factor degrees at an unramified prime, sorted descending.
// Throws if p ramifies (repeated factors mod p or leading-coefficient drop).
std::vector<int> frobenius_partition(const UniPoly& f, const Int& p);
std::vector<int> frobenius_partition(const ZPoly& f, uint32_t p);

}  // namespace hf
