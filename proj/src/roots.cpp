#include "hf/roots.hpp"

#include <algorithm>
#include <cmath>

namespace hf {

namespace {

struct CF {
    mpf_class re, im;

    CF() = default;
    CF(mpf_class r, mpf_class i) : re(std::move(r)), im(std::move(i)) {}
};

CF operator+(const CF& a, const CF& b) { return {a.re + b.re, a.im + b.im}; }
CF operator-(const CF& a, const CF& b) { return {a.re - b.re, a.im - b.im}; }
CF operator*(const CF& a, const CF& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
mpf_class norm2(const CF& a) { return a.re * a.re + a.im * a.im; }
CF operator/(const CF& a, const CF& b) {
    mpf_class n = norm2(b);
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

}  // namespace

int sturm_real_count(const UniPoly& f) {
    if (f.degree() < 1) return 0;
    std::vector<UniPoly> chain = {f, up_derivative(f)};
    while (chain.back().degree() > 0) {
        UniPoly q, r;
        up_divrem(chain[chain.size() - 2], chain.back(), q, r);
        if (r.is_zero()) throw std::domain_error("sturm_real_count: polynomial not squarefree");
        chain.push_back(-r);
    }
    auto variations = [&](int at_inf) {
        int var = 0, last = 0;
        for (const auto& p : chain) {
            if (p.is_zero()) continue;
            int s = sgn(p.lc());
            if (at_inf < 0 && p.degree() % 2) s = -s;
            if (last != 0 && s != last) ++var;
            last = s;
        }
        return var;
    };
    return variations(-1) - variations(+1);
}

RootScatter root_scatter(const UniPoly& f, int precision) {
    if (f.degree() < 1) throw std::domain_error("root_scatter: degree < 1");
    if (!up_separable(f)) throw std::domain_error("root_scatter: polynomial not squarefree");
    int n = f.degree();
    unsigned long bits = (unsigned long)(precision * 3.33) + 96;
    // monic coefficients at working precision
    std::vector<mpf_class> mc(n + 1);
    for (int i = 0; i <= n; ++i) {
        mpq_class q = f.coeff(i) / f.lc();
        mc[i] = mpf_class(q, bits);
    }
    auto eval = [&](const CF& z, CF& val, CF& der) {
        val = CF(mpf_class(0, bits), mpf_class(0, bits));
        der = val;
        for (int i = n; i >= 0; --i) {
            if (i < n) {
                der = der * z + val;
            }
            val = val * z + CF(mc[i], mpf_class(0, bits));
        }
    };
    // initial points on a slightly eccentric circle
    mpf_class radius(1, bits);
    for (int i = 0; i < n; ++i) {
        mpf_class c = abs(mc[i]);
        if (c > radius) radius = c;
    }
    radius += 1;
    std::vector<CF> z(n);
    for (int k = 0; k < n; ++k) {
        double ang = 2 * M_PI * (k + 0.25) / n + 0.42;
        double rr = 0.6 + 0.8 * (k % 7) / 7.0;
        z[k] = CF(mpf_class(radius * rr * std::cos(ang), bits),
                  mpf_class(radius * rr * std::sin(ang), bits));
    }
    mpf_class tol(1, bits);
    mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), (unsigned long)(precision * 3.33 / 2) + 8);
    mpf_class tol2 = tol * tol;
    int iter = 0, cap = 400;
    for (; iter < cap; ++iter) {
        bool done = true;
        for (int k = 0; k < n; ++k) {
            CF val, der;
            eval(z[k], val, der);
            if (norm2(val) < tol2) continue;
            done = false;
            if (norm2(der) == 0) {
                // nudge off the critical point
                z[k].re += tol + 1e-3;
                continue;
            }
            CF w = val / der;
            CF s(mpf_class(0, bits), mpf_class(0, bits));
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                CF d = z[k] - z[j];
                if (norm2(d) == 0) {
                    d.re += tol + 1e-6;
                }
                s = s + CF(mpf_class(1, bits), mpf_class(0, bits)) / d;
            }
            CF denom = CF(mpf_class(1, bits), mpf_class(0, bits)) - w * s;
            CF corr = norm2(denom) == 0 ? w : w / denom;
            z[k] = z[k] - corr;
        }
        if (done) break;
    }
    if (iter >= cap) throw std::runtime_error("root_scatter: no convergence within the iteration cap");

    RootScatter out;
    out.precision = precision;
    out.real_count = sturm_real_count(f);
    // snap the real roots: the `real_count` values with the smallest |imag|
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return abs(z[a].im) < abs(z[b].im);
    });
    std::vector<char> is_real(n, 0);
    for (int i = 0; i < out.real_count; ++i) {
        is_real[order[i]] = 1;
        z[order[i]].im = 0;
    }
    std::vector<int> sorted(n);
    for (int i = 0; i < n; ++i) sorted[i] = i;
    std::sort(sorted.begin(), sorted.end(), [&](int a, int b) {
        if (z[a].re != z[b].re) return z[a].re < z[b].re;
        return z[a].im < z[b].im;
    });
    mp_exp_t e;
    for (int i : sorted) {
        auto str = [&](const mpf_class& x) {
            mpf_class rounded = x;
            std::string digits = rounded.get_str(e, 10, (size_t)precision);
            if (digits.empty()) return std::string("0");
            std::string sign = digits[0] == '-' ? "-" : "";
            if (!sign.empty()) digits = digits.substr(1);
            std::string mant = "0." + digits;
            return sign + mant + "e" + std::to_string(e);
        };
        out.roots.emplace_back(str(z[i].re), str(z[i].im));
    }
    return out;
}

}  // namespace hf
