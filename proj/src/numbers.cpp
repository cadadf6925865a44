#include "hf/numbers.hpp"

namespace hf {

FactoredInteger smooth_factor(const Int& n, const std::vector<Int>& primes) {
    if (n == 0) throw std::domain_error("smooth_factor: n = 0");
    FactoredInteger f;
    f.sign = sgn(n) < 0 ? -1 : 1;
    Int m = abs(n);
    for (const Int& p : primes) {
        if (p < 2) throw std::domain_error("smooth_factor: bad prime");
        Int rest;
        unsigned long e = remove_factor(m, p, rest);
        if (e > 0) f.factors[p] = e;
        m = rest;
    }
    f.cofactor = m;
    return f;
}

bool is_smooth(const Int& n, const std::vector<Int>& primes) {
    if (n == 0) return false;
    Int m = abs(n);
    for (const Int& p : primes) {
        Int rest;
        remove_factor(m, p, rest);
        m = rest;
    }
    return m == 1;
}

bool is_unit_of(const Rat& x, const std::vector<Int>& primes) {
    if (x == 0) return false;
    return is_smooth(Int(x.get_num()), primes) && is_smooth(Int(x.get_den()), primes);
}

Int squarefree_part_smooth(const Int& n, const std::vector<Int>& primes) {
    FactoredInteger f = smooth_factor(n, primes);
    if (mpz_perfect_square_p(f.cofactor.get_mpz_t()) == 0)
        throw std::domain_error("squarefree_part_smooth: cofactor " + f.cofactor.get_str() +
                                " is not a perfect square");
    Int r = f.sign;
    for (const auto& [p, e] : f.factors)
        if (e % 2) r *= p;
    return r;
}

Int factorial(unsigned n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

std::string rat_to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

}  // namespace hf
