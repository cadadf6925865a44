#include "hf/specpoints.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace hf {

NuShape nu_shape(const std::vector<int>& nu) {
    if (nu == std::vector<int>{1, 1, 1, 1}) return NuShape::N1111;
    if (nu == std::vector<int>{2, 1, 1, 1}) return NuShape::N2111;
    if (nu == std::vector<int>{3, 1, 1}) return NuShape::N311;
    if (nu == std::vector<int>{4, 1}) return NuShape::N41;
    if (nu == std::vector<int>{3, 1}) return NuShape::N31;
    throw std::invalid_argument("unsupported nu shape");
}

std::string nu_shape_name(NuShape s) {
    switch (s) {
        case NuShape::N1111: return "1,1,1,1";
        case NuShape::N2111: return "2,1,1,1";
        case NuShape::N311: return "3,1,1";
        case NuShape::N41: return "4,1";
        case NuShape::N31: return "3,1";
    }
    return "?";
}

int nu_shape_arity(NuShape s) {
    switch (s) {
        case NuShape::N2111:
        case NuShape::N311:
        case NuShape::N41: return 2;
        default: return 1;
    }
}

Rat disc_kernel(const Rat& u, const Rat& v) {
    return 4 * u * u * u - u * u - 18 * u * v + 27 * v * v + 4 * v;
}

NormalizedQuartic quartic_normalize(const UniPoly& q) {
    if (q.degree() != 4) throw std::domain_error("quartic_normalize: degree != 4");
    if (!up_separable(q)) throw std::domain_error("quartic_normalize: not separable");
    // monic and depressed
    Rat a3 = q.coeff(3) / q.lc();
    Rat beta = -a3 / 4;
    UniPoly shifted = up_compose(q, UniPoly(q.var, {beta, Rat(1)}));
    Rat b2 = shifted.coeff(2) / shifted.lc();
    Rat b3 = shifted.coeff(1) / shifted.lc();
    Rat b4 = shifted.coeff(0) / shifted.lc();
    if (b2 == 0 || b3 == 0)
        throw std::domain_error("quartic_normalize: secondary family (b2 or b3 vanishes)");
    // scaling t -> alpha t sends (b2, b3, b4) to (alpha^2 b2, alpha^3 b3, alpha^4 b4);
    // match -2v = alpha^2 b2 and -8v^2 = alpha^3 b3
    Rat alpha = -b3 / (2 * b2 * b2);
    Rat v = -alpha * alpha * b2 / 2;
    Rat u = (v * v - rat_pow(alpha, 4) * b4) / (4 * v * v);
    NormalizedQuartic out;
    out.u = u;
    out.v = v;
    out.d = disc_kernel(u, v);
    out.scale = alpha;
    out.shift = beta;
    if (out.v == 0 || out.d == 0) throw std::logic_error("quartic_normalize: degenerate image");
    return out;
}

PointCertificate is_integral_point(NuShape nu, const std::vector<Rat>& coords,
                                   const std::vector<Int>& P) {
    if ((int)coords.size() != nu_shape_arity(nu))
        throw std::invalid_argument("is_integral_point: arity mismatch");
    PointCertificate cert;
    auto add = [&](const std::string& name, const Rat& val) {
        cert.checks.push_back({name, val, val != 0 && is_unit_of(val, P)});
    };
    switch (nu) {
        case NuShape::N1111: {
            const Rat& w = coords[0];
            add("w", w);
            add("w-1", w - 1);
            break;
        }
        case NuShape::N31: {
            const Rat& j = coords[0];
            add("j", j);
            add("j-1", j - 1);
            break;
        }
        case NuShape::N311:
        case NuShape::N41: {
            const Rat& u = coords[0];
            const Rat& v = coords[1];
            // u only needs to live in Z[1/P]
            bool u_ok = is_smooth(Int(u.get_den()), P);
            cert.checks.push_back({"den(u)", Rat(u.get_den()), u_ok});
            add("v", v);
            add("d", disc_kernel(u, v));
            break;
        }
        case NuShape::N2111: {
            const Rat& u = coords[0];
            const Rat& v = coords[1];
            add("u", u);
            add("v", v);
            add("conic", (u - v) * (u - v) - 2 * (u + v) + 1);
            break;
        }
    }
    cert.ok = true;
    for (const auto& c : cert.checks) cert.ok &= c.ok;
    return cert;
}

std::vector<Rat> smooth_rationals(const std::vector<Int>& P, int B) {
    std::vector<Rat> vals = {Rat(1)};
    for (const Int& p : P) {
        std::vector<Rat> next;
        next.reserve(vals.size() * (2 * B + 1));
        for (const Rat& v : vals)
            for (int e = -B; e <= B; ++e) next.push_back(v * rat_pow(Rat(p), e));
        vals = std::move(next);
    }
    std::vector<Rat> out;
    out.reserve(2 * vals.size());
    for (const Rat& v : vals) {
        out.push_back(v);
        out.push_back(-v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int unit_height(const Rat& x, const std::vector<Int>& P) {
    if (x == 0) throw std::domain_error("unit_height: zero");
    int h = 0;
    Int n = abs(Int(x.get_num()));
    Int d = Int(x.get_den());
    for (const Int& p : P) {
        Int rest;
        h = std::max(h, (int)remove_factor(n, p, rest));
        n = rest;
        h = std::max(h, (int)remove_factor(d, p, rest));
        d = rest;
    }
    if (n != 1 || d != 1) throw std::domain_error("unit_height: not a P-unit");
    return h;
}

namespace {

struct SmoothVal {
    Rat q;
    Int num, den;  // reduced, den > 0
    double logabs;
    int height;
};

std::vector<SmoothVal> smooth_values(const std::vector<Int>& P, int B) {
    std::vector<SmoothVal> out;
    for (const Rat& q : smooth_rationals(P, B)) {
        SmoothVal sv;
        sv.q = q;
        sv.num = Int(q.get_num());
        sv.den = Int(q.get_den());
        sv.logabs = std::log(std::abs(mpq_get_d(q.get_mpq_t())) + 1e-300);
        sv.height = unit_height(q, P);
        out.push_back(std::move(sv));
    }
    return out;
}

// one-coordinate shapes: x and x-1 both units
void enumerate_unit_pairs(SpecSet& out, const std::vector<Int>& P, int B) {
    for (const Rat& w : smooth_rationals(P, B)) {
        if (w == 0 || w == 1) continue;
        Rat wm1 = w - 1;
        if (wm1 == 0) continue;
        if (!is_unit_of(wm1, P)) continue;
        if (unit_height(wm1, P) > B) continue;
        out.points.push_back({{w}});
    }
}

long double ld_of(const Int& x) {
    long exp2;
    double m = mpz_get_d_2exp(&exp2, x.get_mpz_t());
    return ldexpl((long double)m, exp2);
}

Int int_from_ld(long double x) {
    // round to nearest via a base-2^32 expansion
    bool neg = x < 0;
    if (neg) x = -x;
    x += 0.5L;
    Int r = 0;
    while (x >= 1.0L) {
        int k = ilogbl(x);
        int chunk = std::min(k, 62);
        long double hi = floorl(ldexpl(x, -(k - chunk)));  // top chunk+1 bits
        long long hv = (long long)hi;
        Int part(std::to_string(hv));
        r += part << (unsigned)(k - chunk);
        x -= ldexpl((long double)hv, k - chunk);
        if (x < 1.0L) break;
    }
    return neg ? Int(-r) : r;
}

// integer Newton polish toward a root of the monic cubic w^3 + b w^2 + c w + d
bool integer_cubic_root(const Int& b, const Int& c, const Int& d, long double approx, Int& root) {
    if (!std::isfinite((double)(approx / (fabsl(approx) + 1.0L)))) return false;
    Int w = int_from_ld(approx);
    for (int it = 0; it < 64; ++it) {
        Int val = ((w + b) * w + c) * w + d;
        if (val == 0) {
            root = w;
            return true;
        }
        Int der = (3 * w + 2 * b) * w + c;
        if (der == 0) break;
        // rounded Newton step
        Int num = val, q;
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), der.get_mpz_t());
        // round to nearest: compare remainders
        Int r = num - q * der;
        if (2 * abs(r) > abs(der)) q += sgn(r) == sgn(der) ? 1 : -1;
        if (q == 0) {
            // try the two neighbors before giving up
            for (long delta : {-1L, 1L}) {
                Int wt = w + delta;
                if (((wt + b) * wt + c) * wt + d == 0) {
                    root = wt;
                    return true;
                }
            }
            return false;
        }
        w -= q;
    }
    return false;
}

// (3,1,1) and (4,1): v and d = 4u^3-u^2-18uv+27v^2+4v are units; u comes out of
// the cubic 4u^3 - u^2 - 18vu + (27v^2+4v-d0) = 0 as a rational root.
void enumerate_cubic_shape(SpecSet& out, const std::vector<Int>& P, int B,
                           unsigned long pair_budget) {
    auto units = smooth_values(P, B);
    unsigned long pairs = (unsigned long)units.size() * units.size();
    if (pairs > pair_budget) {
        out.budget_exhausted = true;
        return;
    }
    std::set<std::pair<Rat, Rat>> found;
    for (const auto& v : units) {
        // common denominator M = lcm(vden^2, dden); coefficients of the cleared cubic
        Rat v2 = v.q * v.q;
        for (const auto& d0 : units) {
            Int M;
            mpz_lcm(M.get_mpz_t(), Int(v.den * v.den).get_mpz_t(), d0.den.get_mpz_t());
            Int A = 4 * M;
            Int Bq = -M;
            Rat cv = -18 * v.q;
            Int C = Int(Rat(cv * Rat(M)).get_num());
            Rat dv = 27 * v2 + 4 * v.q - d0.q;
            Int D = Int(Rat(dv * Rat(M)).get_num());
            // integer roots w = A*u of w^3 + (B')w^2 + (A C)w + (A^2 D)
            Int b2 = Bq, c2 = A * C, d2 = A * A * D;
            long double bd = ld_of(b2), cd = ld_of(c2), dd = ld_of(d2);
            // real roots of the monic cubic in long double (exponent range matters here)
            long double roots[3];
            int nroots = 0;
            {
                // depressed: w = t - bd/3 turns it into t^3 + pt + q
                long double sh = bd / 3.0L;
                long double p = cd - bd * bd / 3.0L;
                long double qq = 2.0L * sh * sh * sh - sh * cd + dd;
                long double disc = qq * qq / 4.0L + p * p * p / 27.0L;
                if (disc > 0) {
                    long double s = sqrtl(disc);
                    roots[nroots++] = cbrtl(-qq / 2.0L + s) + cbrtl(-qq / 2.0L - s) - sh;
                } else {
                    long double mmag = 2.0L * sqrtl(std::max(0.0L, -p / 3.0L));
                    if (mmag == 0) {
                        roots[nroots++] = -sh;
                    } else {
                        long double carg = -4.0L * qq / (mmag * mmag * mmag);
                        carg = std::clamp(carg, -1.0L, 1.0L);
                        long double phi = acosl(carg) / 3.0L;
                        for (int k = 0; k < 3; ++k)
                            roots[nroots++] = mmag * cosl(phi - 2.0L * (long double)M_PI * k / 3.0L) - sh;
                    }
                }
            }
            for (int k = 0; k < nroots; ++k) {
                Int w;
                if (!integer_cubic_root(b2, c2, d2, roots[k], w)) continue;
                Rat u = Rat(w) / Rat(A);
                u.canonicalize();
                auto cert = is_integral_point(out.nu, {u, v.q}, P);
                if (!cert.ok) continue;
                if (unit_height(disc_kernel(u, v.q), P) > B) continue;
                found.emplace(u, v.q);
            }
        }
    }
    for (auto& [u, v] : found) out.points.push_back({{u, v}});
}

// (2,1,1,1): u, v and the conic value are units; for fixed (u, c0) the quadratic
// gives v = (u+1) +- sqrt(4u + c0).
void enumerate_conic_shape(SpecSet& out, const std::vector<Int>& P, int B,
                           unsigned long pair_budget) {
    auto units = smooth_values(P, B);
    unsigned long pairs = (unsigned long)units.size() * units.size();
    if (pairs > pair_budget) {
        out.budget_exhausted = true;
        return;
    }
    std::set<std::pair<Rat, Rat>> found;
    for (const auto& u : units) {
        Rat up1 = u.q + 1;
        for (const auto& c0 : units) {
            // N = 4u + c0 must be a rational square
            Rat N = 4 * u.q + c0.q;
            if (N < 0) continue;
            Int prod = Int(N.get_num()) * Int(N.get_den());
            if (mpz_perfect_square_p(prod.get_mpz_t()) == 0) continue;
            Int sn, sd;
            mpz_sqrt(sn.get_mpz_t(), Int(N.get_num()).get_mpz_t());
            mpz_sqrt(sd.get_mpz_t(), Int(N.get_den()).get_mpz_t());
            Rat s = Rat(sn) / Rat(sd);
            for (int sign = -1; sign <= 1; sign += 2) {
                Rat v = up1 + (sign > 0 ? s : -s);
                if (v == 0) continue;
                auto cert = is_integral_point(NuShape::N2111, {u.q, v}, P);
                if (!cert.ok) continue;
                if (unit_height(v, P) > B) continue;
                found.emplace(u.q, v);
            }
        }
    }
    for (auto& [u, v] : found) out.points.push_back({{u, v}});
}

int point_height(NuShape nu, const SpecPoint& pt, const std::vector<Int>& P) {
    int h = 0;
    switch (nu) {
        case NuShape::N1111:
        case NuShape::N31:
            h = std::max(unit_height(pt.coords[0], P), unit_height(pt.coords[0] - 1, P));
            break;
        case NuShape::N311:
        case NuShape::N41:
            h = std::max(unit_height(pt.coords[1], P),
                         unit_height(disc_kernel(pt.coords[0], pt.coords[1]), P));
            break;
        case NuShape::N2111: {
            const Rat& u = pt.coords[0];
            const Rat& v = pt.coords[1];
            h = std::max({unit_height(u, P), unit_height(v, P),
                          unit_height((u - v) * (u - v) - 2 * (u + v) + 1, P)});
            break;
        }
    }
    return h;
}

}  // namespace

SpecSet enumerate_points(NuShape nu, const std::vector<Int>& P, int B, unsigned long pair_budget) {
    SpecSet out;
    out.nu = nu;
    out.P = P;
    out.bound = B;
    if (P.empty() || B < 1) {
        out.plateau = true;
        return out;
    }
    switch (nu) {
        case NuShape::N1111:
        case NuShape::N31: enumerate_unit_pairs(out, P, B); break;
        case NuShape::N311:
        case NuShape::N41: enumerate_cubic_shape(out, P, B, pair_budget); break;
        case NuShape::N2111: enumerate_conic_shape(out, P, B, pair_budget); break;
    }
    std::sort(out.points.begin(), out.points.end());
    out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
    out.count_at_prev = 0;
    for (const auto& pt : out.points)
        if (point_height(nu, pt, P) <= B - 1) ++out.count_at_prev;
    out.plateau = !out.budget_exhausted && out.count_at_prev == out.points.size();
    return out;
}

Specialization specialize(const MultiPoly& fixture, const std::string& keep,
                          const std::vector<std::pair<std::string, Rat>>& values) {
    MultiPoly cur = fixture;
    for (const auto& [var, val] : values)
        if (cur.var_index(var) >= 0) cur = mp_subst(cur, var, val);
    for (const auto& v : cur.vars)
        if (v != keep && cur.degree(v) > 0)
            throw std::invalid_argument("specialize: leftover variable " + v);
    Specialization out;
    UniPoly p = mp_to_unipoly(cur);
    p.var = keep;
    if (p.is_zero()) throw std::domain_error("specialize: fixture vanished");
    Rat cont;
    ZPoly z = up_to_z(p, &cont);
    out.poly = UniPoly::from_z(z, keep);
    out.content = cont;
    out.separable = up_separable(out.poly);
    return out;
}

}  // namespace hf
