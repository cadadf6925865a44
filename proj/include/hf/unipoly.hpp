#pragma once

#include "hf/numbers.hpp"

#include <optional>
#include <utility>

namespace hf {

// Dense univariate polynomial over Z. c[i] is the x^i coefficient; no trailing zeros.
struct ZPoly {
    std::vector<Int> c;

    ZPoly() = default;
    explicit ZPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }
    static ZPoly constant(Int v) {
        ZPoly p;
        if (v != 0) p.c.push_back(std::move(v));
        return p;
    }
    static ZPoly monomial(Int v, size_t e) {
        ZPoly p;
        if (v != 0) {
            p.c.assign(e + 1, Int(0));
            p.c[e] = std::move(v);
        }
        return p;
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return (int)c.size() - 1; }
    const Int& lc() const { return c.back(); }
    Int coeff(size_t i) const { return i < c.size() ? c[i] : Int(0); }

    bool operator==(const ZPoly& o) const { return c == o.c; }
};

ZPoly operator+(const ZPoly& a, const ZPoly& b);
ZPoly operator-(const ZPoly& a, const ZPoly& b);
ZPoly operator*(const ZPoly& a, const ZPoly& b);
ZPoly operator-(const ZPoly& a);
ZPoly operator*(const ZPoly& a, const Int& k);
ZPoly zp_shift_up(const ZPoly& a, size_t e);  // a * x^e

Int zp_content(const ZPoly& a);                     // gcd of coefficients, >= 0
ZPoly zp_primitive(const ZPoly& a, Int* content = nullptr);
ZPoly zp_divexact(const ZPoly& a, const Int& k);
// Exact polynomial division; throws if not divisible.
ZPoly zp_divexact(const ZPoly& a, const ZPoly& b);
bool zp_divides(const ZPoly& b, const ZPoly& a);  // b | a
ZPoly zp_derivative(const ZPoly& a);
Int zp_eval(const ZPoly& a, const Int& x);
Rat zp_eval(const ZPoly& a, const Rat& x);
ZPoly zp_compose_shift(const ZPoly& a, const Int& cshift);  // a(x + cshift)
ZPoly zp_scale_arg(const ZPoly& a, const Rat& s);           // numerator of a(s*x), den-cleared
ZPoly zp_reverse(const ZPoly& a);
ZPoly zp_pow(const ZPoly& a, unsigned long e);

// lc(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b.
void zp_pseudo_divrem(const ZPoly& a, const ZPoly& b, ZPoly& q, ZPoly& r);
ZPoly zp_gcd(const ZPoly& a, const ZPoly& b);  // primitive, positive lc
Int zp_resultant(const ZPoly& a, const ZPoly& b);
Int zp_disc(const ZPoly& a);

// Univariate polynomial over Q. Invariant: no trailing zero coefficient; zero poly has empty list.
struct UniPoly {
    std::string var = "x";
    std::vector<Rat> c;

    UniPoly() = default;
    UniPoly(std::string v, std::vector<Rat> coeffs) : var(std::move(v)), c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return (int)c.size() - 1; }
    const Rat& lc() const { return c.back(); }
    Rat coeff(size_t i) const { return i < c.size() ? c[i] : Rat(0); }
    bool operator==(const UniPoly& o) const { return c == o.c; }

    static UniPoly from_z(const ZPoly& z, std::string var = "x");
};

UniPoly operator+(const UniPoly& a, const UniPoly& b);
UniPoly operator-(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const UniPoly& a, const Rat& k);
UniPoly operator-(const UniPoly& a);
UniPoly up_derivative(const UniPoly& a);
Rat up_eval(const UniPoly& a, const Rat& x);
UniPoly up_pow(const UniPoly& a, unsigned long e);
UniPoly up_monic(const UniPoly& a);
void up_divrem(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
UniPoly up_gcd(const UniPoly& a, const UniPoly& b);  // monic
UniPoly up_compose(const UniPoly& a, const UniPoly& b);

// a = content * primitive with primitive integral, positive lc... sign goes to content.
ZPoly up_to_z(const UniPoly& a, Rat* content = nullptr);

Rat up_resultant(const UniPoly& a, const UniPoly& b);
Rat up_disc(const UniPoly& a);
bool up_separable(const UniPoly& a);

// Yun decomposition: f = content * prod g_i^{m_i}, g_i monic squarefree pairwise coprime.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f);

// Multiset of multiplicities as a partition of deg f (sorted descending).
std::vector<int> multiplicity_profile(const UniPoly& f);

}  // namespace hf
