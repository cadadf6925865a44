#include "hf/modpoly.hpp"

#include <algorithm>
#include <random>

namespace hf {

uint32_t inv_mod(uint32_t a, uint32_t p) {
    int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw std::domain_error("inv_mod: not invertible");
    return (uint32_t)(t < 0 ? t + p : t);
}

uint32_t pow_mod_u32(uint32_t a, uint64_t e, uint32_t p) {
    uint64_t r = 1, b = a % p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return (uint32_t)r;
}

PolyMod pm_from_z(const ZPoly& f, uint32_t p) {
    PolyMod r(p);
    r.c.resize(f.c.size());
    Int ip((unsigned long)p);
    for (size_t i = 0; i < f.c.size(); ++i) {
        Int m = f.c[i] % ip;
        if (m < 0) m += ip;
        r.c[i] = (uint32_t)m.get_ui();
    }
    r.trim();
    return r;
}

ZPoly pm_to_z(const PolyMod& f) {
    ZPoly r;
    r.c.assign(f.c.size(), Int(0));
    for (size_t i = 0; i < f.c.size(); ++i) r.c[i] = (unsigned long)f.c[i];
    r.trim();
    return r;
}

ZPoly pm_to_z_sym(const PolyMod& f) {
    ZPoly r;
    r.c.assign(f.c.size(), Int(0));
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i] > f.p / 2) r.c[i] = -Int((unsigned long)(f.p - f.c[i]));
        else r.c[i] = (unsigned long)f.c[i];
    }
    r.trim();
    return r;
}

PolyMod pm_add(const PolyMod& a, const PolyMod& b) {
    PolyMod r(a.p);
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    std::copy(a.c.begin(), a.c.end(), r.c.begin());
    if (!b.c.empty()) {
        kern::active().vec_addmod(r.c.data(), r.c.data(), b.c.data(), b.c.size(), a.p);
    }
    r.trim();
    return r;
}

PolyMod pm_sub(const PolyMod& a, const PolyMod& b) {
    PolyMod r(a.p);
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    std::copy(a.c.begin(), a.c.end(), r.c.begin());
    if (!b.c.empty()) {
        kern::active().vec_submod(r.c.data(), r.c.data(), b.c.data(), b.c.size(), a.p);
    }
    r.trim();
    return r;
}

PolyMod pm_mul(const PolyMod& a, const PolyMod& b) {
    PolyMod r(a.p);
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    const auto& K = kern::active();
    for (size_t i = 0; i < a.c.size(); ++i)
        if (a.c[i]) K.vec_axpy(r.c.data() + i, b.c.data(), a.c[i], b.c.size(), a.p);
    r.trim();
    return r;
}

PolyMod pm_scal(const PolyMod& a, uint32_t s) {
    PolyMod r(a.p);
    if (s == 0 || a.is_zero()) return r;
    r.c.resize(a.c.size());
    kern::active().vec_scalmul(r.c.data(), a.c.data(), s, a.c.size(), a.p);
    r.trim();
    return r;
}

PolyMod pm_monic(const PolyMod& a) {
    if (a.is_zero() || a.lc() == 1) return a;
    return pm_scal(a, inv_mod(a.lc(), a.p));
}

void pm_divrem(const PolyMod& a, const PolyMod& b, PolyMod& q, PolyMod& r) {
    if (b.is_zero()) throw std::domain_error("pm_divrem: zero divisor");
    q = PolyMod(a.p);
    r = a;
    if (a.degree() < b.degree()) return;
    q.c.assign(a.degree() - b.degree() + 1, 0);
    uint32_t li = inv_mod(b.lc(), a.p);
    const auto& K = kern::active();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        uint32_t f = (uint32_t)((uint64_t)r.lc() * li % a.p);
        q.c[k] = f;
        K.vec_axmy(r.c.data() + k, b.c.data(), f, b.c.size(), a.p);
        r.trim();
    }
    q.trim();
}

PolyMod pm_rem(const PolyMod& a, const PolyMod& b) {
    PolyMod q, r;
    pm_divrem(a, b, q, r);
    return r;
}

PolyMod pm_gcd(const PolyMod& a, const PolyMod& b) {
    PolyMod x = a, y = b;
    while (!y.is_zero()) {
        PolyMod r = pm_rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return pm_monic(x);
}

PolyMod pm_derivative(const PolyMod& a) {
    PolyMod r(a.p);
    if (a.c.size() <= 1) return r;
    r.c.resize(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = (uint32_t)((uint64_t)a.c[i] * (i % a.p) % a.p);
    r.trim();
    return r;
}

uint32_t pm_eval(const PolyMod& a, uint32_t x) {
    uint64_t r = 0;
    for (size_t i = a.c.size(); i-- > 0;) r = (r * x + a.c[i]) % a.p;
    return (uint32_t)r;
}

PolyMod pm_mulmod(const PolyMod& a, const PolyMod& b, const PolyMod& f) {
    return pm_rem(pm_mul(a, b), f);
}

PolyMod pm_powmod(const PolyMod& a, const Int& e, const PolyMod& f) {
    PolyMod r(a.p, {1});
    PolyMod base = pm_rem(a, f);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return r;
    for (size_t i = bits; i-- > 0;) {
        r = pm_mulmod(r, r, f);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = pm_mulmod(r, base, f);
    }
    return r;
}

PolyMod pm_pow(const PolyMod& a, unsigned long e) {
    PolyMod r(a.p, {1});
    PolyMod b = a;
    while (e) {
        if (e & 1) r = pm_mul(r, b);
        e >>= 1;
        if (e) b = pm_mul(b, b);
    }
    return r;
}

namespace {

PolyMod pm_x(uint32_t p) { return PolyMod(p, {0, 1}); }

// p-th root of g(x^p) over F_p (Frobenius fixes the prime field)
PolyMod pth_root(const PolyMod& f) {
    PolyMod r(f.p);
    r.c.resize(f.c.size() / f.p + 1, 0);
    for (size_t i = 0; i * f.p < f.c.size(); ++i) r.c[i] = f.c[i * f.p];
    r.trim();
    return r;
}

// monic squarefree decomposition in characteristic p
void pm_squarefree(const PolyMod& f, unsigned long outer, std::vector<std::pair<PolyMod, int>>& out) {
    if (f.degree() == 0) return;
    PolyMod df = pm_derivative(f);
    if (df.is_zero()) {
        pm_squarefree(pth_root(f), outer * f.p, out);
        return;
    }
    PolyMod c = pm_gcd(f, df);
    PolyMod w, r;
    pm_divrem(f, c, w, r);
    int i = 1;
    while (w.degree() > 0) {
        PolyMod y = pm_gcd(w, c);
        PolyMod z, r2;
        pm_divrem(w, y, z, r2);
        if (z.degree() > 0) out.emplace_back(pm_monic(z), (int)(outer * i));
        PolyMod cq;
        pm_divrem(c, y, cq, r2);
        c = std::move(cq);
        w = std::move(y);
        ++i;
    }
    if (c.degree() > 0) pm_squarefree(pth_root(c), outer * f.p, out);
}

// distinct-degree decomposition of a monic squarefree f
std::vector<std::pair<PolyMod, int>> pm_ddf(const PolyMod& f) {
    std::vector<std::pair<PolyMod, int>> out;
    PolyMod g = f;
    PolyMod h = pm_rem(pm_x(f.p), f);
    Int p((unsigned long)f.p);
    int d = 0;
    while (2 * (d + 1) <= g.degree()) {
        ++d;
        h = pm_powmod(h, p, g);  // x^(p^d) mod g
        PolyMod t = pm_sub(h, pm_x(f.p));
        PolyMod gd = pm_gcd(t, g);
        if (gd.degree() > 0) {
            out.emplace_back(gd, d);
            PolyMod q, r;
            pm_divrem(g, gd, q, r);
            g = std::move(q);
            h = pm_rem(h, g);
        }
    }
    if (g.degree() > 0) out.emplace_back(g, g.degree());
    return out;
}

// split a monic product of irreducibles all of degree d (Cantor-Zassenhaus, fixed seed)
void pm_edf(const PolyMod& f, int d, std::mt19937_64& rng, std::vector<PolyMod>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    uint32_t p = f.p;
    PolyMod a(p);
    while (true) {
        a.c.resize(f.degree());
        for (auto& x : a.c) x = (uint32_t)(rng() % p);
        a.trim();
        if (a.degree() < 1) continue;
        PolyMod g = pm_gcd(a, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            PolyMod q, r;
            pm_divrem(f, g, q, r);
            pm_edf(g, d, rng, out);
            pm_edf(q, d, rng, out);
            return;
        }
        PolyMod b;
        if (p == 2) {
            // trace map over F_2
            b = PolyMod(p);
            PolyMod t = pm_rem(a, f);
            for (int i = 0; i < d; ++i) {
                b = pm_add(b, t);
                t = pm_mulmod(t, t, f);
            }
        } else {
            Int e = (int_pow(Int((unsigned long)p), (unsigned long)d) - 1) / 2;
            b = pm_sub(pm_powmod(a, e, f), PolyMod(p, {1}));
        }
        g = pm_gcd(b, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            PolyMod q, r;
            pm_divrem(f, g, q, r);
            pm_edf(g, d, rng, out);
            pm_edf(q, d, rng, out);
            return;
        }
    }
}

}  // namespace

ModPFactorization factor_mod_p(const ZPoly& f, uint32_t p) {
    if (!is_prime(Int((unsigned long)p))) throw std::domain_error("factor_mod_p: p is not prime");
    if (f.is_zero()) throw std::domain_error("factor_mod_p: zero polynomial");
    ModPFactorization out;
    out.p = p;
    PolyMod fp = pm_from_z(f, p);
    out.degree_drop = f.degree() - fp.degree();
    if (fp.is_zero()) {
        out.unit = 0;
        return out;
    }
    out.unit = fp.lc();
    fp = pm_monic(fp);
    std::vector<std::pair<PolyMod, int>> sqf;
    pm_squarefree(fp, 1, sqf);
    std::mt19937_64 rng(0x48465345454431ull ^ p);  // fixed seed: reproducible splits
    for (const auto& [g, m] : sqf) {
        for (const auto& [h, d] : pm_ddf(g)) {
            std::vector<PolyMod> irr;
            pm_edf(h, d, rng, irr);
            std::sort(irr.begin(), irr.end(), [](const PolyMod& x, const PolyMod& y) {
                if (x.degree() != y.degree()) return x.degree() < y.degree();
                return std::lexicographical_compare(x.c.begin(), x.c.end(), y.c.begin(), y.c.end());
            });
            for (auto& q : irr) out.factors.emplace_back(std::move(q), m);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) {
        if (x.first.degree() != y.first.degree()) return x.first.degree() > y.first.degree();
        return std::lexicographical_compare(x.first.c.begin(), x.first.c.end(), y.first.c.begin(),
                                            y.first.c.end());
    });
    return out;
}

ModPFactorization factor_mod_p(const UniPoly& f, const Int& p) {
    if (!is_prime(p)) throw std::domain_error("factor_mod_p: p is not prime");
    if (p >= Int(1) << 31) throw std::domain_error("factor_mod_p: prime exceeds 2^31 kernel bound");
    Rat cont;
    ZPoly z = up_to_z(f, &cont);
    // a denominator divisible by p would change the reduction; reject
    if (mpz_divisible_p(cont.get_den().get_mpz_t(), p.get_mpz_t()))
        throw std::domain_error("factor_mod_p: content denominator divisible by p");
    return factor_mod_p(z, (uint32_t)p.get_ui());
}

std::vector<int> frobenius_partition(const ZPoly& f, uint32_t p) {
    PolyMod fp = pm_from_z(f, p);
    if (fp.degree() != f.degree())
        throw std::domain_error("frobenius_partition: ramified (leading coefficient drop) at p=" +
                                std::to_string(p));
    if (pm_gcd(fp, pm_derivative(fp)).degree() != 0)
        throw std::domain_error("frobenius_partition: ramified (repeated factors) at p=" +
                                std::to_string(p));
    auto fac = factor_mod_p(f, p);
    std::vector<int> part;
    for (const auto& [g, m] : fac.factors) {
        if (m != 1) throw std::logic_error("frobenius_partition: unexpected multiplicity");
        part.push_back(g.degree());
    }
    std::sort(part.rbegin(), part.rend());
    return part;
}

std::vector<int> frobenius_partition(const UniPoly& f, const Int& p) {
    Rat cont;
    ZPoly z = up_to_z(f, &cont);
    if (p >= Int(1) << 31) throw std::domain_error("frobenius_partition: prime exceeds 2^31");
    if (mpz_divisible_p(cont.get_den().get_mpz_t(), p.get_mpz_t()))
        throw std::domain_error("frobenius_partition: content denominator divisible by p");
    return frobenius_partition(z, (uint32_t)p.get_ui());
}

}  // namespace hf
