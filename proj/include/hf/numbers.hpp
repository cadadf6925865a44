#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hf {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& b, long e) {
    if (e >= 0) {
        Rat r;
        mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), (unsigned long)e);
        mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), (unsigned long)e);
        r.canonicalize();
        return r;
    }
    if (b == 0) throw std::domain_error("rat_pow: 0 to negative power");
    return rat_pow(Rat(1) / b, -e);
}

inline bool is_prime(const Int& p) { return mpz_probab_prime_p(p.get_mpz_t(), 32) != 0; }

// Largest e with p^e | n; n must be nonzero. Cofactor n/p^e written back through `rest`.
inline unsigned long remove_factor(const Int& n, const Int& p, Int& rest) {
    return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

// p-adic valuation of a nonzero rational.
inline long qval(const Rat& x, const Int& p) {
    if (x == 0) throw std::domain_error("qval: zero");
    Int t;
    long vn = (long)mpz_remove(t.get_mpz_t(), x.get_num_mpz_t(), p.get_mpz_t());
    if (vn > 0) return vn;
    return -(long)mpz_remove(t.get_mpz_t(), x.get_den_mpz_t(), p.get_mpz_t());
}

struct FactoredInteger {
    int sign = 1;                   // +1 or -1
    std::map<Int, unsigned long> factors;  // prime -> exponent, primes from the requested set only
    Int cofactor = 1;               // the part coprime to the requested primes

    Int reassemble() const {
        Int r = cofactor * sign;
        for (const auto& [p, e] : factors) r *= int_pow(p, e);
        return r;
    }
};

// Extract all factors supported on `primes`; cofactor keeps the rest.
FactoredInteger smooth_factor(const Int& n, const std::vector<Int>& primes);

// True iff |n| = prod p^e over the given primes (units of Z[1/P]).
bool is_smooth(const Int& n, const std::vector<Int>& primes);
bool is_unit_of(const Rat& x, const std::vector<Int>& primes);

// Signed squarefree part of the P-supported portion; throws if the cofactor is not a perfect square.
Int squarefree_part_smooth(const Int& n, const std::vector<Int>& primes);

Int factorial(unsigned n);

std::string rat_to_string(const Rat& x);
Rat rat_from_string(const std::string& s);

}  // namespace hf
