#include "hf/unipoly.hpp"

#include <algorithm>

namespace hf {

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
}

ZPoly operator-(const ZPoly& a) {
    ZPoly r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    ZPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            mpz_addmul(r.c[i + j].get_mpz_t(), a.c[i].get_mpz_t(), b.c[j].get_mpz_t());
    }
    r.trim();
    return r;
}

ZPoly operator*(const ZPoly& a, const Int& k) {
    if (k == 0) return {};
    ZPoly r = a;
    for (auto& x : r.c) x *= k;
    return r;
}

ZPoly zp_shift_up(const ZPoly& a, size_t e) {
    if (a.is_zero()) return {};
    ZPoly r;
    r.c.assign(a.c.size() + e, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i + e] = a.c[i];
    return r;
}

Int zp_content(const ZPoly& a) {
    Int g = 0;
    for (const auto& x : a.c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly zp_primitive(const ZPoly& a, Int* content) {
    if (a.is_zero()) {
        if (content) *content = 0;
        return {};
    }
    Int g = zp_content(a);
    if (sgn(a.lc()) < 0) g = -g;
    if (content) *content = g;
    return zp_divexact(a, g);
}

ZPoly zp_divexact(const ZPoly& a, const Int& k) {
    if (k == 0) throw std::domain_error("zp_divexact: divide by zero");
    ZPoly r = a;
    for (auto& x : r.c) {
        Int q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
        if (rem != 0) throw std::logic_error("zp_divexact(Int): not divisible");
        x = q;
    }
    return r;
}

ZPoly zp_divexact(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw std::domain_error("zp_divexact: divide by zero poly");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw std::logic_error("zp_divexact: not divisible (degree)");
    ZPoly rem = a;
    ZPoly q;
    q.c.assign(a.degree() - b.degree() + 1, Int(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int d = rem.degree() - b.degree();
        Int qc, r2;
        mpz_tdiv_qr(qc.get_mpz_t(), r2.get_mpz_t(), rem.lc().get_mpz_t(), b.lc().get_mpz_t());
        if (r2 != 0) throw std::logic_error("zp_divexact: not divisible (lc)");
        q.c[d] = qc;
        // rem -= qc * x^d * b
        for (size_t i = 0; i < b.c.size(); ++i)
            mpz_submul(rem.c[i + d].get_mpz_t(), qc.get_mpz_t(), b.c[i].get_mpz_t());
        rem.trim();
    }
    if (!rem.is_zero()) throw std::logic_error("zp_divexact: nonzero remainder");
    q.trim();
    return q;
}

bool zp_divides(const ZPoly& b, const ZPoly& a) {
    if (a.is_zero()) return true;
    if (b.is_zero()) return false;
    if (a.degree() < b.degree()) return false;
    ZPoly rem = a;
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int d = rem.degree() - b.degree();
        Int qc, r2;
        mpz_tdiv_qr(qc.get_mpz_t(), r2.get_mpz_t(), rem.lc().get_mpz_t(), b.lc().get_mpz_t());
        if (r2 != 0) return false;
        for (size_t i = 0; i < b.c.size(); ++i)
            mpz_submul(rem.c[i + d].get_mpz_t(), qc.get_mpz_t(), b.c[i].get_mpz_t());
        rem.trim();
    }
    return rem.is_zero();
}

ZPoly zp_derivative(const ZPoly& a) {
    ZPoly r;
    if (a.c.size() <= 1) return r;
    r.c.resize(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = a.c[i] * Int((unsigned long)i);
    r.trim();
    return r;
}

Int zp_eval(const ZPoly& a, const Int& x) {
    Int r = 0;
    for (size_t i = a.c.size(); i-- > 0;) {
        r *= x;
        r += a.c[i];
    }
    return r;
}

Rat zp_eval(const ZPoly& a, const Rat& x) {
    Rat r = 0;
    for (size_t i = a.c.size(); i-- > 0;) {
        r *= x;
        r += a.c[i];
    }
    return r;
}

ZPoly zp_compose_shift(const ZPoly& a, const Int& cshift) {
    // Horner: a(x+c) built bottom-up.
    ZPoly r;
    for (size_t i = a.c.size(); i-- > 0;) {
        // r = r*(x+c) + a[i]
        ZPoly nr;
        nr.c.assign(r.c.size() + 1, Int(0));
        for (size_t j = 0; j < r.c.size(); ++j) {
            nr.c[j + 1] += r.c[j];
            mpz_addmul(nr.c[j].get_mpz_t(), r.c[j].get_mpz_t(), cshift.get_mpz_t());
        }
        nr.c[0] += a.c[i];
        nr.trim();
        r = std::move(nr);
    }
    return r;
}

ZPoly zp_scale_arg(const ZPoly& a, const Rat& s) {
    if (a.is_zero()) return {};
    int n = a.degree();
    // a(s x) * den(s)^n, exact in Z
    Int num = s.get_num(), den = s.get_den();
    ZPoly r;
    r.c.resize(n + 1);
    Int np = 1;
    for (int i = 0; i <= n; ++i) {
        r.c[i] = a.c[i] * np * int_pow(den, (unsigned long)(n - i));
        np *= num;
    }
    r.trim();
    return r;
}

ZPoly zp_reverse(const ZPoly& a) {
    ZPoly r;
    r.c.assign(a.c.rbegin(), a.c.rend());
    r.trim();
    return r;
}

ZPoly zp_pow(const ZPoly& a, unsigned long e) {
    ZPoly r = ZPoly::constant(1);
    ZPoly b = a;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

void zp_pseudo_divrem(const ZPoly& a, const ZPoly& b, ZPoly& q, ZPoly& r) {
    if (b.is_zero()) throw std::domain_error("zp_pseudo_divrem: zero divisor");
    int da = a.degree(), db = b.degree();
    if (da < db) {
        q = {};
        r = a;
        return;
    }
    r = a;
    q = {};
    q.c.assign(da - db + 1, Int(0));
    const Int& d = b.lc();
    int e = da - db + 1;
    while (!r.is_zero() && r.degree() >= db) {
        int k = r.degree() - db;
        Int lr = r.lc();
        // q = q*d + lr*x^k ; r = r*d - lr*x^k*b
        for (auto& x : q.c) x *= d;
        q.c[k] += lr;
        for (auto& x : r.c) x *= d;
        for (size_t i = 0; i < b.c.size(); ++i)
            mpz_submul(r.c[i + k].get_mpz_t(), lr.get_mpz_t(), b.c[i].get_mpz_t());
        r.trim();
        --e;
    }
    // scale so the identity lc(b)^(da-db+1) a = q b + r holds with the full power
    Int f = int_pow(d, (unsigned long)e);
    for (auto& x : q.c) x *= f;
    for (auto& x : r.c) x *= f;
    q.trim();
    r.trim();
}

ZPoly zp_gcd(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero()) return zp_primitive(b);
    if (b.is_zero()) return zp_primitive(a);
    Int ca, cb;
    ZPoly A = zp_primitive(a, &ca), B = zp_primitive(b, &cb);
    Int cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    cg = abs(cg);
    if (A.degree() < B.degree()) std::swap(A, B);
    // subresultant PRS, primitive parts only
    while (!B.is_zero()) {
        ZPoly q, r;
        zp_pseudo_divrem(A, B, q, r);
        A = std::move(B);
        B = zp_primitive(r);
    }
    A = zp_primitive(A);
    return A * cg;
}

// Resultant by the subresultant PRS (Cohen, Alg. 3.3.7).
Int zp_resultant(const ZPoly& A0, const ZPoly& B0) {
    if (A0.is_zero() || B0.is_zero()) return 0;
    if (A0.degree() == 0) return int_pow(A0.c[0], (unsigned long)B0.degree());
    if (B0.degree() == 0) return int_pow(B0.c[0], (unsigned long)A0.degree());
    ZPoly A = A0, B = B0;
    int s = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        std::swap(A, B);
    }
    Int g = 1, h = 1;
    while (true) {
        int delta = A.degree() - B.degree();
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        ZPoly q, R;
        zp_pseudo_divrem(A, B, q, R);
        A = std::move(B);
        if (R.is_zero()) return 0;
        {
            Int dv = g * int_pow(h, (unsigned long)delta);
            B = zp_divexact(R, dv);
        }
        g = A.lc();
        if (delta == 0) {
            // h unchanged
        } else {
            // h = g^delta / h^(delta-1)
            Int num = int_pow(g, (unsigned long)delta);
            Int den = int_pow(h, (unsigned long)(delta - 1));
            Int qq, rr;
            mpz_tdiv_qr(qq.get_mpz_t(), rr.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (rr != 0) throw std::logic_error("zp_resultant: inexact h update");
            h = qq;
        }
        if (B.degree() == 0) {
            // res = s * h^(1-dA) * lc(B)^dA
            Int num = int_pow(B.c[0], (unsigned long)A.degree());
            Int den = int_pow(h, (unsigned long)(A.degree() - 1));
            Int qq, rr;
            mpz_tdiv_qr(qq.get_mpz_t(), rr.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (rr != 0) throw std::logic_error("zp_resultant: inexact final division");
            return s < 0 ? Int(-qq) : qq;
        }
    }
}

Int zp_disc(const ZPoly& a) {
    if (a.degree() < 1) throw std::domain_error("zp_disc: degree < 1");
    Int res = zp_resultant(a, zp_derivative(a));
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), res.get_mpz_t(), a.lc().get_mpz_t());
    if (r != 0) throw std::logic_error("zp_disc: lc does not divide resultant");
    int d = a.degree();
    if (((long)d * (d - 1) / 2) % 2) q = -q;
    return q;
}

UniPoly UniPoly::from_z(const ZPoly& z, std::string var) {
    UniPoly p;
    p.var = std::move(var);
    p.c.assign(z.c.begin(), z.c.end());
    p.trim();
    return p;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.var = a.var;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.var = a.var;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.var, {});
    UniPoly r;
    r.var = a.var;
    r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

UniPoly operator*(const UniPoly& a, const Rat& k) {
    if (k == 0) return UniPoly(a.var, {});
    UniPoly r = a;
    for (auto& x : r.c) x *= k;
    return r;
}

UniPoly operator-(const UniPoly& a) {
    UniPoly r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

UniPoly up_derivative(const UniPoly& a) {
    UniPoly r;
    r.var = a.var;
    if (a.c.size() <= 1) return r;
    r.c.resize(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = a.c[i] * Rat((unsigned long)i);
    r.trim();
    return r;
}

Rat up_eval(const UniPoly& a, const Rat& x) {
    Rat r = 0;
    for (size_t i = a.c.size(); i-- > 0;) {
        r *= x;
        r += a.c[i];
    }
    return r;
}

UniPoly up_pow(const UniPoly& a, unsigned long e) {
    UniPoly r(a.var, {Rat(1)});
    UniPoly b = a;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

UniPoly up_monic(const UniPoly& a) {
    if (a.is_zero()) return a;
    return a * (Rat(1) / a.lc());
}

void up_divrem(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.is_zero()) throw std::domain_error("up_divrem: zero divisor");
    q = UniPoly(a.var, {});
    r = a;
    if (a.degree() < b.degree()) return;
    q.c.assign(a.degree() - b.degree() + 1, Rat(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        Rat f = r.lc() / b.lc();
        q.c[k] += f;
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i + k] -= f * b.c[i];
        r.trim();
    }
    q.trim();
}

UniPoly up_gcd(const UniPoly& a, const UniPoly& b) {
    // over Q via the integer subresultant gcd; returned monic
    if (a.is_zero()) return up_monic(b);
    if (b.is_zero()) return up_monic(a);
    ZPoly za = up_to_z(a), zb = up_to_z(b);
    ZPoly g = zp_gcd(za, zb);
    return up_monic(UniPoly::from_z(g, a.var));
}

UniPoly up_compose(const UniPoly& a, const UniPoly& b) {
    UniPoly r(a.var, {});
    for (size_t i = a.c.size(); i-- > 0;) {
        r = r * b;
        r = r + UniPoly(a.var, {a.c[i]});
    }
    r.var = b.var;
    return r;
}

ZPoly up_to_z(const UniPoly& a, Rat* content) {
    if (a.is_zero()) {
        if (content) *content = 0;
        return {};
    }
    Int den = 1;
    for (const auto& x : a.c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    ZPoly z;
    z.c.resize(a.c.size());
    for (size_t i = 0; i < a.c.size(); ++i) {
        Rat t = a.c[i] * Rat(den);
        z.c[i] = Int(t.get_num());
    }
    Int cont;
    z = zp_primitive(z, &cont);
    if (content) *content = Rat(cont) / Rat(den);
    return z;
}

Rat up_resultant(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    Rat ca, cb;
    ZPoly za = up_to_z(a, &ca), zb = up_to_z(b, &cb);
    Rat r = Rat(zp_resultant(za, zb));
    r *= rat_pow(ca, b.degree());
    r *= rat_pow(cb, a.degree());
    return r;
}

Rat up_disc(const UniPoly& a) {
    if (a.degree() < 1) throw std::domain_error("up_disc: degree < 1");
    Rat res = up_resultant(a, up_derivative(a));
    res /= a.lc();
    int d = a.degree();
    if (((long)d * (d - 1) / 2) % 2) res = -res;
    return res;
}

bool up_separable(const UniPoly& a) {
    if (a.degree() < 1) return true;
    return up_gcd(a, up_derivative(a)).degree() == 0;
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f) {
    if (f.is_zero()) throw std::domain_error("squarefree_decomposition: zero polynomial");
    std::vector<std::pair<UniPoly, int>> out;
    if (f.degree() == 0) return out;
    // Yun over Q
    UniPoly a = up_monic(f);
    UniPoly da = up_derivative(a);
    UniPoly g = up_gcd(a, da);
    UniPoly q, r;
    up_divrem(a, g, q, r);
    UniPoly c = q;  // a/g
    up_divrem(da, g, q, r);
    UniPoly d = q - up_derivative(c);
    int m = 1;
    while (c.degree() > 0) {
        UniPoly p = up_gcd(c, d);
        if (p.degree() > 0) out.emplace_back(p, m);
        up_divrem(c, p, q, r);
        c = q;
        up_divrem(d, p, q, r);
        d = q - up_derivative(c);
        ++m;
    }
    return out;
}

std::vector<int> multiplicity_profile(const UniPoly& f) {
    auto dec = squarefree_decomposition(f);
    std::vector<int> prof;
    for (const auto& [g, m] : dec)
        for (int i = 0; i < g.degree(); ++i) prof.push_back(m);
    std::sort(prof.rbegin(), prof.rend());
    return prof;
}

}  // namespace hf
