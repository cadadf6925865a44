#include "hf/polyfactor.hpp"

#include <algorithm>
#include <bitset>
#include <numeric>

namespace hf {

UniPoly RationalFactorization::reassemble(const std::string& var) const {
    UniPoly r(var, {content});
    for (const auto& [g, m] : factors) r = r * up_pow(g, (unsigned long)m);
    return r;
}

std::vector<int> RationalFactorization::degree_shape() const {
    std::vector<int> d;
    for (const auto& [g, m] : factors)
        for (int i = 0; i < m; ++i) d.push_back(g.degree());
    std::sort(d.rbegin(), d.rend());
    return d;
}

namespace {

// arithmetic on Z[x] with coefficients reduced into [0, m)
ZPoly zm_reduce(const ZPoly& a, const Int& m) {
    ZPoly r = a;
    for (auto& x : r.c) {
        x %= m;
        if (x < 0) x += m;
    }
    r.trim();
    return r;
}

ZPoly zm_mul(const ZPoly& a, const ZPoly& b, const Int& m) { return zm_reduce(a * b, m); }

ZPoly zm_sub(const ZPoly& a, const ZPoly& b, const Int& m) { return zm_reduce(a - b, m); }

Int inv_mod_m(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::logic_error("inv_mod_m: not invertible");
    return r;
}

// divrem mod m; divisor's lc must be invertible mod m
void zm_divrem(const ZPoly& a, const ZPoly& b, const Int& m, ZPoly& q, ZPoly& r) {
    Int li = inv_mod_m(b.lc(), m);
    r = zm_reduce(a, m);
    q = {};
    if (r.degree() >= b.degree()) q.c.assign(r.degree() - b.degree() + 1, Int(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        Int f = r.lc() * li % m;
        q.c[k] = f;
        for (size_t i = 0; i < b.c.size(); ++i) {
            r.c[i + k] = (r.c[i + k] - f * b.c[i]) % m;
            if (r.c[i + k] < 0) r.c[i + k] += m;
        }
        r.trim();
    }
    q.trim();
}

ZPoly zm_rem(const ZPoly& a, const ZPoly& b, const Int& m) {
    ZPoly q, r;
    zm_divrem(a, b, m, q, r);
    return r;
}

ZPoly zp_symmetric(const ZPoly& a, const Int& m) {
    ZPoly r = zm_reduce(a, m);
    Int half = m / 2;
    for (auto& x : r.c)
        if (x > half) x -= m;
    r.trim();
    return r;
}

// One quadratic Hensel step: from f = g*h (mod q) with s*g + t*h = 1 (mod q)
// to the same congruences mod q^2.  h is monic and stays monic; g carries lc(f).
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Int& q) {
    Int q2 = q * q;
    ZPoly e = zm_sub(f, g * h, q2);
    ZPoly qq, r;
    zm_divrem(zm_mul(s, e, q2), h, q2, qq, r);
    ZPoly g1 = zm_reduce(g + zm_mul(t, e, q2) + zm_mul(qq, g, q2), q2);
    ZPoly h1 = zm_reduce(h + r, q2);
    ZPoly b = zm_sub(zm_mul(s, g1, q2) + zm_mul(t, h1, q2), ZPoly::constant(1), q2);
    ZPoly cc, d;
    zm_divrem(zm_mul(s, b, q2), h1, q2, cc, d);
    ZPoly s1 = zm_sub(s, d, q2);
    ZPoly t1 = zm_sub(t, zm_mul(t, b, q2) + zm_mul(cc, g1, q2), q2);
    g = std::move(g1);
    h = std::move(h1);
    s = std::move(s1);
    t = std::move(t1);
}

// Lift a two-way split f = g*h (mod p), h monic, to mod p^2^k >= bound.
void hensel_lift_pair(const ZPoly& f, ZPoly& g, ZPoly& h, uint32_t p, const Int& bound, Int& q_out) {
    // Bezout pair mod p with deg s < deg h, deg t < deg g
    PolyMod gp = pm_from_z(g, p), hp = pm_from_z(h, p);
    PolyMod sp(p), tp(p);
    {
        PolyMod a = gp, b = hp;
        PolyMod sa(p, {1}), sb(p);
        while (!b.is_zero()) {
            PolyMod q, r;
            pm_divrem(a, b, q, r);
            PolyMod ns = pm_sub(sa, pm_mul(q, sb));
            a = std::move(b);
            b = std::move(r);
            sa = std::move(sb);
            sb = std::move(ns);
        }
        if (a.degree() != 0) throw std::logic_error("hensel: factors not coprime mod p");
        sp = pm_rem(pm_scal(sa, inv_mod(a.lc(), p)), hp);
        // t = (1 - s g) / h exactly over F_p
        PolyMod num = pm_sub(PolyMod(p, {1}), pm_mul(sp, gp));
        PolyMod q, r;
        pm_divrem(num, hp, q, r);
        if (!r.is_zero()) throw std::logic_error("hensel: bezout division not exact");
        tp = std::move(q);
    }
    ZPoly s = pm_to_z(sp), t = pm_to_z(tp);
    Int q((unsigned long)p);
    while (q < bound) {
        hensel_step(f, g, h, s, t, q);
        q = q * q;
    }
    q_out = q;
}

// Lift lc(f) * prod(monic factors) = f (mod p) to mod q >= bound via a factor
// tree; `factors` is replaced by the lifted monic factors mod q.
void hensel_lift_tree(const ZPoly& f, std::vector<ZPoly>& factors, uint32_t p, const Int& bound,
                      Int& q_out) {
    if (factors.size() == 1) {
        Int q((unsigned long)p);
        while (q < bound) q = q * q;
        q_out = q;
        Int lm = f.lc() % q;
        if (lm < 0) lm += q;
        factors[0] = zm_reduce(f * inv_mod_m(lm, q), q);
        return;
    }
    size_t half = factors.size() / 2;
    std::vector<ZPoly> left(factors.begin(), factors.begin() + half);
    std::vector<ZPoly> right(factors.begin() + half, factors.end());
    auto prod_mod = [&](const std::vector<ZPoly>& v, const Int& m) {
        ZPoly r = ZPoly::constant(1);
        for (const auto& x : v) r = zm_mul(r, x, m);
        return r;
    };
    Int pp((unsigned long)p);
    ZPoly g = zm_reduce(prod_mod(left, pp) * f.lc(), pp);  // carries the leading coefficient
    ZPoly h = prod_mod(right, pp);                         // monic
    hensel_lift_pair(f, g, h, p, bound, q_out);
    std::vector<ZPoly> lf = left, rf = right;
    hensel_lift_tree(g, lf, p, bound, q_out);
    hensel_lift_tree(h, rf, p, bound, q_out);
    factors.clear();
    factors.insert(factors.end(), lf.begin(), lf.end());
    factors.insert(factors.end(), rf.begin(), rf.end());
}

Int landau_mignotte_bound(const ZPoly& f) {
    // 2^n * sqrt(n+1) * ||f||inf * |lc| is a safe factor-coefficient bound
    Int maxc = 0;
    for (const auto& x : f.c) maxc = std::max(maxc, Int(abs(x)));
    Int b = maxc * abs(f.lc());
    mpf_class s = sqrt(mpf_class(f.degree() + 1)) + 1;
    b *= Int(s);
    b <<= (unsigned)(f.degree() + 1);
    return b;
}

// Zassenhaus on a primitive squarefree polynomial of degree >= 1.
std::vector<ZPoly> zassenhaus(const ZPoly& f, int subset_cap) {
    if (f.degree() == 1) return {f};
    // prime choice: lc survives, reduction squarefree; keep the one with fewest factors
    uint32_t best_p = 0;
    ModPFactorization best;
    int usable = 0;
    Int pc = 2;
    while (usable < 6 && pc < 100000) {
        mpz_nextprime(pc.get_mpz_t(), pc.get_mpz_t());
        uint32_t p = (uint32_t)pc.get_ui();
        if (mpz_divisible_ui_p(f.lc().get_mpz_t(), p)) continue;
        PolyMod fp = pm_from_z(f, p);
        if (pm_gcd(fp, pm_derivative(fp)).degree() != 0) continue;
        ModPFactorization fac = factor_mod_p(f, p);
        ++usable;
        if (best_p == 0 || fac.factors.size() < best.factors.size()) {
            best_p = p;
            best = std::move(fac);
        }
        if (best.factors.size() == 1) break;
    }
    if (best_p == 0) throw std::logic_error("zassenhaus: no usable prime found");
    if (best.factors.size() == 1) return {f};

    Int bound = landau_mignotte_bound(f) * 2 + 1;
    std::vector<ZPoly> lifted;
    for (const auto& [g, m] : best.factors) lifted.push_back(pm_to_z(g));
    Int q;
    hensel_lift_tree(f, lifted, best_p, bound, q);

    std::vector<ZPoly> result;
    std::vector<int> live(lifted.size());
    std::iota(live.begin(), live.end(), 0);
    ZPoly rem_poly = f;

    auto try_subset = [&](const std::vector<int>& subset) -> bool {
        ZPoly prod = ZPoly::constant(rem_poly.lc());
        for (int i : subset) prod = zm_mul(prod, lifted[i], q);
        ZPoly cand = zp_symmetric(prod, q);
        cand = zp_primitive(cand);
        if (!zp_divides(cand, rem_poly)) return false;
        result.push_back(cand);
        rem_poly = zp_divexact(rem_poly, cand);
        std::vector<int> nl;
        for (int i : live)
            if (std::find(subset.begin(), subset.end(), i) == subset.end()) nl.push_back(i);
        live = nl;
        return true;
    };

    while (!live.empty()) {
        if (live.size() == 1) {
            result.push_back(rem_poly);
            break;
        }
        int half = (int)live.size() / 2;
        int limit = std::min(subset_cap, half);
        bool found = false;
        for (int s = 1; s <= limit && !found; ++s) {
            std::vector<int> idx(s);
            std::iota(idx.begin(), idx.end(), 0);
            while (true) {
                std::vector<int> subset;
                for (int i : idx) subset.push_back(live[i]);
                if (try_subset(subset)) {
                    found = true;
                    break;
                }
                int i = s - 1;
                while (i >= 0 && idx[i] == (int)live.size() - s + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
        if (!found) {
            if (limit == half) {
                // every proper split was tested; the remainder is irreducible
                result.push_back(rem_poly);
                break;
            }
            throw recombination_cap_error("zassenhaus: recombination needs subsets larger than cap " +
                                          std::to_string(subset_cap));
        }
    }
    return result;
}

}  // namespace

RationalFactorization factor_over_Q(const UniPoly& f, int subset_cap) {
    if (f.is_zero()) throw std::domain_error("factor_over_Q: zero polynomial");
    RationalFactorization out;
    auto sqf = squarefree_decomposition(f);
    // content: f / prod(monic squarefree parts^mult) is a constant
    UniPoly prod(f.var, {Rat(1)});
    std::vector<std::pair<UniPoly, int>> work;
    for (const auto& [g, m] : sqf) {
        Rat cont;
        ZPoly zg = up_to_z(g, &cont);
        std::vector<ZPoly> irr = zassenhaus(zg, subset_cap);
        std::sort(irr.begin(), irr.end(), [](const ZPoly& a, const ZPoly& b) {
            if (a.degree() != b.degree()) return a.degree() > b.degree();
            return a.c < b.c;
        });
        for (const auto& h : irr) work.emplace_back(UniPoly::from_z(h, f.var), m);
    }
    for (const auto& [g, m] : work) prod = prod * up_pow(g, (unsigned long)m);
    out.content = f.lc() / prod.lc();
    out.factors = std::move(work);
    return out;
}

IrreducibilityResult irreducible_over_Q(const UniPoly& f, const std::vector<Int>& primes,
                                        bool allow_factor) {
    IrreducibilityResult res;
    res.verdict = IrreducibilityResult::Verdict::Inconclusive;
    if (f.degree() < 1) throw std::domain_error("irreducible_over_Q: degree < 1");
    if (!up_separable(f)) {
        res.verdict = IrreducibilityResult::Verdict::NotIrreducible;
        res.method = "not squarefree";
        return res;
    }
    int n = f.degree();
    std::vector<char> possible(n + 1, 1);  // achievable proper-factor degrees so far
    bool have_any = false;
    for (const Int& p : primes) {
        std::vector<int> part;
        try {
            part = frobenius_partition(f, p);
        } catch (const std::domain_error&) {
            continue;  // ramified or unusable prime
        }
        res.used_partitions.emplace_back(p, part);
        if (part.size() == 1) {
            res.verdict = IrreducibilityResult::Verdict::Irreducible;
            res.method = "irreducible mod " + Int(p).get_str();
            return res;
        }
        // subset sums achievable from this partition
        std::vector<char> reach(n + 1, 0);
        reach[0] = 1;
        for (int d : part)
            for (int k = n; k >= d; --k)
                if (reach[k - d]) reach[k] = 1;
        for (int k = 0; k <= n; ++k) possible[k] &= reach[k];
        have_any = true;
        bool any_proper = false;
        for (int k = 1; k < n; ++k) any_proper |= possible[k] != 0;
        if (!any_proper) {
            res.verdict = IrreducibilityResult::Verdict::Irreducible;
            res.method = "degree patterns admit no proper factor";
            return res;
        }
    }
    (void)have_any;
    if (allow_factor) {
        RationalFactorization fac = factor_over_Q(f);
        res.factor_degrees = fac.degree_shape();
        res.method = "factorization";
        res.verdict = fac.factors.size() == 1 && fac.factors[0].second == 1
                          ? IrreducibilityResult::Verdict::Irreducible
                          : IrreducibilityResult::Verdict::NotIrreducible;
    }
    return res;
}

}  // namespace hf
