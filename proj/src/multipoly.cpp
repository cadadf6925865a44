#include "hf/multipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hf {

namespace {

// graded-lex, `true` when a > b
bool exp_gt(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    unsigned da = 0, db = 0;
    for (auto x : a) da += x;
    for (auto x : b) db += x;
    if (da != db) return da > db;
    return a > b;
}

struct ExpLess {
    bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
        return exp_gt(b, a);
    }
};

// Recursive dense polynomial over Z. level 0 holds a constant; level L holds
// coefficients of the top variable, each at level L-1. Zero at level L>0 is an
// empty coefficient list.
struct RP {
    int level = 0;
    Int k = 0;
    std::vector<RP> f;

    bool is_zero() const { return level == 0 ? k == 0 : f.empty(); }
    int deg() const { return level == 0 ? 0 : (int)f.size() - 1; }
};

RP rp_zero(int level) {
    RP r;
    r.level = level;
    return r;
}

RP rp_const(int level, const Int& v) {
    if (level == 0) {
        RP r;
        r.k = v;
        return r;
    }
    RP r;
    r.level = level;
    if (v != 0) r.f.push_back(rp_const(level - 1, v));
    return r;
}

void rp_trim(RP& a) {
    if (a.level == 0) return;
    while (!a.f.empty() && a.f.back().is_zero()) a.f.pop_back();
}

RP rp_add(const RP& a, const RP& b);
RP rp_sub(const RP& a, const RP& b);
RP rp_mul(const RP& a, const RP& b);

RP rp_add(const RP& a, const RP& b) {
    if (a.level == 0) {
        RP r;
        r.k = a.k + b.k;
        return r;
    }
    RP r = rp_zero(a.level);
    r.f.resize(std::max(a.f.size(), b.f.size()), rp_zero(a.level - 1));
    for (size_t i = 0; i < a.f.size(); ++i) r.f[i] = a.f[i];
    for (size_t i = 0; i < b.f.size(); ++i) r.f[i] = rp_add(r.f[i], b.f[i]);
    rp_trim(r);
    return r;
}

RP rp_sub(const RP& a, const RP& b) {
    if (a.level == 0) {
        RP r;
        r.k = a.k - b.k;
        return r;
    }
    RP r = rp_zero(a.level);
    r.f.resize(std::max(a.f.size(), b.f.size()), rp_zero(a.level - 1));
    for (size_t i = 0; i < a.f.size(); ++i) r.f[i] = a.f[i];
    for (size_t i = 0; i < b.f.size(); ++i) r.f[i] = rp_sub(r.f[i], b.f[i]);
    rp_trim(r);
    return r;
}

RP rp_mul(const RP& a, const RP& b) {
    if (a.level == 0) {
        RP r;
        r.k = a.k * b.k;
        return r;
    }
    RP r = rp_zero(a.level);
    if (a.is_zero() || b.is_zero()) return r;
    r.f.assign(a.f.size() + b.f.size() - 1, rp_zero(a.level - 1));
    for (size_t i = 0; i < a.f.size(); ++i) {
        if (a.f[i].is_zero()) continue;
        for (size_t j = 0; j < b.f.size(); ++j) {
            if (b.f[j].is_zero()) continue;
            r.f[i + j] = rp_add(r.f[i + j], rp_mul(a.f[i], b.f[j]));
        }
    }
    rp_trim(r);
    return r;
}

RP rp_neg(const RP& a) {
    if (a.level == 0) {
        RP r;
        r.k = -a.k;
        return r;
    }
    RP r = a;
    for (auto& x : r.f) x = rp_neg(x);
    return r;
}

// coefficient-ring multiply: c lives one level below a
RP rp_mul_coeff(const RP& a, const RP& c) {
    RP r = rp_zero(a.level);
    if (a.is_zero() || c.is_zero()) return r;
    r.f.reserve(a.f.size());
    for (const auto& x : a.f) r.f.push_back(rp_mul(x, c));
    rp_trim(r);
    return r;
}

RP rp_lc(const RP& a) {
    if (a.level == 0) return a;
    if (a.f.empty()) return rp_zero(a.level - 1);
    return a.f.back();
}

// exact division, throws on failure
RP rp_divexact(const RP& a, const RP& b) {
    if (b.is_zero()) throw std::domain_error("rp_divexact: zero divisor");
    if (a.level == 0) {
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.k.get_mpz_t(), b.k.get_mpz_t());
        if (r != 0) throw std::logic_error("rp_divexact: inexact integer division");
        RP out;
        out.k = q;
        return out;
    }
    RP rem = a, q = rp_zero(a.level);
    if (rem.is_zero()) return q;
    if (rem.deg() < b.deg()) throw std::logic_error("rp_divexact: degree too small");
    q.f.assign(rem.deg() - b.deg() + 1, rp_zero(a.level - 1));
    while (!rem.is_zero() && rem.deg() >= b.deg()) {
        int d = rem.deg() - b.deg();
        RP qc = rp_divexact(rp_lc(rem), rp_lc(b));
        q.f[d] = qc;
        for (size_t i = 0; i < b.f.size(); ++i)
            rem.f[i + d] = rp_sub(rem.f[i + d], rp_mul(qc, b.f[i]));
        rp_trim(rem);
    }
    if (!rem.is_zero()) throw std::logic_error("rp_divexact: nonzero remainder");
    rp_trim(q);
    return q;
}

void rp_int_content_acc(const RP& a, Int& g) {
    if (a.level == 0) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.k.get_mpz_t());
        return;
    }
    for (const auto& x : a.f) {
        rp_int_content_acc(x, g);
        if (g == 1) return;
    }
}

Int zp_contentish(const RP& a) {
    Int g = 0;
    rp_int_content_acc(a, g);
    return g == 0 ? Int(1) : g;
}

RP rp_div_int(const RP& a, const Int& g) {
    if (a.level == 0) {
        RP r;
        Int q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), a.k.get_mpz_t(), g.get_mpz_t());
        if (rem != 0) throw std::logic_error("rp_div_int: inexact");
        r.k = q;
        return r;
    }
    RP r = rp_zero(a.level);
    r.f.reserve(a.f.size());
    for (const auto& x : a.f) r.f.push_back(rp_div_int(x, g));
    return r;
}

// divide every top-level coefficient by c (one level below)
RP rp_divexact_coeff(const RP& a, const RP& c) {
    RP r = rp_zero(a.level);
    r.f.reserve(a.f.size());
    for (const auto& x : a.f) r.f.push_back(rp_divexact(x, c));
    rp_trim(r);
    return r;
}

RP rp_pow_coeff(const RP& c, unsigned long e) {
    RP r = rp_const(c.level, 1);
    RP b = c;
    while (e) {
        if (e & 1) r = rp_mul(r, b);
        e >>= 1;
        if (e) b = rp_mul(b, b);
    }
    return r;
}

// lc(b)^(deg a - deg b + 1) * a mod b
RP rp_prem(const RP& a, const RP& b) {
    RP r = a;
    RP d = rp_lc(b);
    int e = a.deg() - b.deg() + 1;
    while (!r.is_zero() && r.deg() >= b.deg()) {
        int k = r.deg() - b.deg();
        RP lr = rp_lc(r);
        RP nr = rp_zero(r.level);
        nr.f.assign(r.f.size(), rp_zero(r.level - 1));
        for (size_t i = 0; i < r.f.size(); ++i) nr.f[i] = rp_mul(r.f[i], d);
        for (size_t i = 0; i < b.f.size(); ++i)
            nr.f[i + k] = rp_sub(nr.f[i + k], rp_mul(lr, b.f[i]));
        rp_trim(nr);
        r = std::move(nr);
        --e;
    }
    if (e > 0) r = rp_mul_coeff(r, rp_pow_coeff(d, (unsigned long)e));
    return r;
}

// Resultant with respect to the top variable (subresultant PRS); result is one level down.
RP rp_resultant(const RP& A0, const RP& B0) {
    int level = A0.level;
    if (A0.is_zero() || B0.is_zero()) return rp_zero(level - 1);
    if (A0.deg() == 0 && B0.deg() == 0) throw std::domain_error("rp_resultant: both constant");
    if (A0.deg() == 0) return rp_pow_coeff(A0.f[0], (unsigned long)B0.deg());
    if (B0.deg() == 0) return rp_pow_coeff(B0.f[0], (unsigned long)A0.deg());
    RP A = A0, B = B0;
    int s = 1;
    if (A.deg() < B.deg()) {
        if ((A.deg() & 1) && (B.deg() & 1)) s = -s;
        std::swap(A, B);
    }
    RP g = rp_const(level - 1, 1), h = rp_const(level - 1, 1);
    while (true) {
        int delta = A.deg() - B.deg();
        if ((A.deg() & 1) && (B.deg() & 1)) s = -s;
        RP R = rp_prem(A, B);
        A = std::move(B);
        if (R.is_zero()) return rp_zero(level - 1);
        B = rp_divexact_coeff(R, rp_mul(g, rp_pow_coeff(h, (unsigned long)delta)));
        g = rp_lc(A);
        if (delta > 0)
            h = rp_divexact(rp_pow_coeff(g, (unsigned long)delta),
                            rp_pow_coeff(h, (unsigned long)(delta - 1)));
        if (B.deg() == 0) {
            RP num = rp_pow_coeff(B.f[0], (unsigned long)A.deg());
            RP den = rp_pow_coeff(h, (unsigned long)(A.deg() - 1));
            RP res = rp_divexact(num, den);
            return s < 0 ? rp_neg(res) : res;
        }
    }
}

// sparse<->dense conversion; `order` maps rp nesting (outermost first) to var indices
void sparse_to_rp_insert(RP& dst, const std::vector<unsigned>& exps, const Int& coef,
                         const std::vector<int>& order, size_t pos) {
    if (pos == order.size()) {
        dst.k += coef;
        return;
    }
    unsigned e = exps[order[pos]];
    if (dst.f.size() <= e) dst.f.resize(e + 1, rp_zero(dst.level - 1));
    sparse_to_rp_insert(dst.f[e], exps, coef, order, pos + 1);
}

void rp_to_sparse_walk(const RP& a, const std::vector<int>& order, size_t pos,
                       std::vector<unsigned>& exps,
                       std::map<std::vector<unsigned>, Rat, ExpLess>& acc, size_t nvars) {
    if (a.level == 0) {
        if (a.k != 0) acc[exps] += Rat(a.k);
        return;
    }
    for (size_t i = 0; i < a.f.size(); ++i) {
        exps[order[pos]] = (unsigned)i;
        rp_to_sparse_walk(a.f[i], order, pos + 1, exps, acc, nvars);
    }
    exps[order[pos]] = 0;
}

struct RPConv {
    RP poly;
    Int den = 1;  // cleared common denominator
};

RPConv mp_to_rp(const MultiPoly& a, const std::vector<int>& order) {
    RPConv out;
    out.poly = rp_zero((int)order.size());
    Int den = 1;
    for (const auto& [e, c] : a.terms) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    out.den = den;
    for (const auto& [e, c] : a.terms) {
        Rat t = c * Rat(den);
        sparse_to_rp_insert(out.poly, e, Int(t.get_num()), order, 0);
    }
    // trim recursively
    struct {
        void operator()(RP& p) {
            if (p.level == 0) return;
            for (auto& x : p.f) (*this)(x);
            rp_trim(p);
        }
    } trim_all;
    trim_all(out.poly);
    return out;
}

MultiPoly rp_to_mp(const RP& a, const std::vector<std::string>& vars, const std::vector<int>& order,
                   const Rat& scale) {
    MultiPoly out(vars);
    std::map<std::vector<unsigned>, Rat, ExpLess> acc;
    std::vector<unsigned> exps(vars.size(), 0);
    rp_to_sparse_walk(a, order, 0, exps, acc, vars.size());
    for (auto& [e, c] : acc) {
        Rat v = c * scale;
        if (v != 0) out.terms.emplace_back(e, v);
    }
    std::sort(out.terms.begin(), out.terms.end(),
              [](const auto& x, const auto& y) { return exp_gt(x.first, y.first); });
    return out;
}

}  // namespace

MultiPoly MultiPoly::constant(std::vector<std::string> vs, const Rat& v) {
    MultiPoly p(std::move(vs));
    if (v != 0) p.terms.emplace_back(std::vector<unsigned>(p.vars.size(), 0), v);
    return p;
}

MultiPoly MultiPoly::var_poly(std::vector<std::string> vs, const std::string& v) {
    MultiPoly p(std::move(vs));
    std::vector<unsigned> e(p.vars.size(), 0);
    int i = p.var_index(v);
    if (i < 0) throw std::invalid_argument("var_poly: unknown variable " + v);
    e[i] = 1;
    p.terms.emplace_back(e, Rat(1));
    return p;
}

MultiPoly MultiPoly::from_unipoly(const UniPoly& p) {
    MultiPoly m({p.var});
    for (size_t i = p.c.size(); i-- > 0;)
        if (p.c[i] != 0) m.terms.emplace_back(std::vector<unsigned>{(unsigned)i}, p.c[i]);
    return m;
}

int MultiPoly::var_index(const std::string& v) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == v) return (int)i;
    return -1;
}

int MultiPoly::degree(const std::string& v) const {
    int i = var_index(v);
    if (i < 0) throw std::invalid_argument("degree: unknown variable " + v);
    int d = is_zero() ? -1 : 0;
    for (const auto& [e, c] : terms) d = std::max(d, (int)e[i]);
    return d;
}

int MultiPoly::total_degree() const {
    int d = is_zero() ? -1 : 0;
    for (const auto& [e, c] : terms) {
        int t = 0;
        for (auto x : e) t += (int)x;
        d = std::max(d, t);
    }
    return d;
}

void MultiPoly::normalize() {
    std::map<std::vector<unsigned>, Rat, ExpLess> acc;
    for (auto& [e, c] : terms) acc[e] += c;
    terms.clear();
    for (auto& [e, c] : acc)
        if (c != 0) terms.emplace_back(e, c);
    std::sort(terms.begin(), terms.end(),
              [](const auto& x, const auto& y) { return exp_gt(x.first, y.first); });
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (vars == o.vars) return terms == o.terms;
    auto mv = merge_vars(vars, o.vars);
    return mp_align(*this, mv).terms == mp_align(o, mv).terms;
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    for (const auto& v : b)
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    return out;
}

MultiPoly mp_align(const MultiPoly& a, const std::vector<std::string>& vars) {
    MultiPoly out(vars);
    for (const auto& [e, c] : a.terms) {
        std::vector<unsigned> ne(vars.size(), 0);
        for (size_t i = 0; i < a.vars.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = std::find(vars.begin(), vars.end(), a.vars[i]);
            if (it == vars.end()) throw std::invalid_argument("mp_align: missing variable");
            ne[it - vars.begin()] = e[i];
        }
        out.terms.emplace_back(std::move(ne), c);
    }
    out.normalize();
    return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    auto vs = merge_vars(a.vars, b.vars);
    MultiPoly x = mp_align(a, vs), y = mp_align(b, vs);
    x.terms.insert(x.terms.end(), y.terms.begin(), y.terms.end());
    x.normalize();
    return x;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator-(const MultiPoly& a) {
    MultiPoly r = a;
    for (auto& [e, c] : r.terms) c = -c;
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    auto vs = merge_vars(a.vars, b.vars);
    MultiPoly x = mp_align(a, vs), y = mp_align(b, vs);
    std::map<std::vector<unsigned>, Rat, ExpLess> acc;
    for (const auto& [ea, ca] : x.terms)
        for (const auto& [eb, cb] : y.terms) {
            std::vector<unsigned> e(vs.size());
            for (size_t i = 0; i < vs.size(); ++i) e[i] = ea[i] + eb[i];
            acc[e] += ca * cb;
        }
    MultiPoly r(vs);
    for (auto& [e, c] : acc)
        if (c != 0) r.terms.emplace_back(e, c);
    std::sort(r.terms.begin(), r.terms.end(),
              [](const auto& p, const auto& q) { return exp_gt(p.first, q.first); });
    return r;
}

MultiPoly operator*(const MultiPoly& a, const Rat& k) {
    if (k == 0) return MultiPoly(a.vars);
    MultiPoly r = a;
    for (auto& [e, c] : r.terms) c *= k;
    return r;
}

MultiPoly mp_pow(const MultiPoly& a, unsigned long e) {
    MultiPoly r = MultiPoly::constant(a.vars, 1);
    MultiPoly b = a;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

MultiPoly mp_subst(const MultiPoly& a, const std::string& var, const Rat& value) {
    int i = a.var_index(var);
    if (i < 0) throw std::invalid_argument("mp_subst: unknown variable " + var);
    std::vector<std::string> vs;
    for (size_t j = 0; j < a.vars.size(); ++j)
        if ((int)j != i) vs.push_back(a.vars[j]);
    MultiPoly r(vs);
    for (const auto& [e, c] : a.terms) {
        std::vector<unsigned> ne;
        ne.reserve(vs.size());
        for (size_t j = 0; j < a.vars.size(); ++j)
            if ((int)j != i) ne.push_back(e[j]);
        r.terms.emplace_back(std::move(ne), c * rat_pow(value, e[i]));
    }
    r.normalize();
    return r;
}

MultiPoly mp_subst_rational(const MultiPoly& a, const std::string& var, const MultiPoly& num,
                            const MultiPoly& den) {
    int i = a.var_index(var);
    if (i < 0) throw std::invalid_argument("mp_subst_rational: unknown variable " + var);
    int d = a.degree(var);
    std::vector<std::string> rest;
    for (size_t j = 0; j < a.vars.size(); ++j)
        if ((int)j != i) rest.push_back(a.vars[j]);
    auto vs = merge_vars(merge_vars(rest, num.vars), den.vars);
    // precompute powers
    std::vector<MultiPoly> np(d + 1), dp(d + 1);
    np[0] = MultiPoly::constant(vs, 1);
    dp[0] = MultiPoly::constant(vs, 1);
    for (int k = 1; k <= d; ++k) {
        np[k] = np[k - 1] * num;
        dp[k] = dp[k - 1] * den;
    }
    MultiPoly out(vs);
    for (const auto& [e, c] : a.terms) {
        std::vector<unsigned> ne(vs.size(), 0);
        for (size_t j = 0; j < a.vars.size(); ++j) {
            if ((int)j == i || e[j] == 0) continue;
            auto it = std::find(vs.begin(), vs.end(), a.vars[j]);
            ne[it - vs.begin()] = e[j];
        }
        MultiPoly mono(vs);
        mono.terms.emplace_back(ne, c);
        out = out + mono * np[e[i]] * dp[d - (int)e[i]];
    }
    return out;
}

Rat mp_eval(const MultiPoly& a, const std::vector<Rat>& point) {
    if (point.size() != a.vars.size()) throw std::invalid_argument("mp_eval: arity mismatch");
    Rat r = 0;
    for (const auto& [e, c] : a.terms) {
        Rat t = c;
        for (size_t i = 0; i < point.size(); ++i)
            if (e[i]) t *= rat_pow(point[i], e[i]);
        r += t;
    }
    return r;
}

MultiPoly mp_coeff_wrt(const MultiPoly& a, const std::string& var, unsigned k) {
    int i = a.var_index(var);
    if (i < 0) throw std::invalid_argument("mp_coeff_wrt: unknown variable " + var);
    std::vector<std::string> vs;
    for (size_t j = 0; j < a.vars.size(); ++j)
        if ((int)j != i) vs.push_back(a.vars[j]);
    MultiPoly r(vs);
    for (const auto& [e, c] : a.terms) {
        if (e[i] != k) continue;
        std::vector<unsigned> ne;
        for (size_t j = 0; j < a.vars.size(); ++j)
            if ((int)j != i) ne.push_back(e[j]);
        r.terms.emplace_back(std::move(ne), c);
    }
    r.normalize();
    return r;
}

UniPoly mp_to_unipoly(const MultiPoly& a) {
    int active = -1;
    for (const auto& [e, c] : a.terms)
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) {
                if (active == -1) active = (int)i;
                else if (active != (int)i)
                    throw std::invalid_argument("mp_to_unipoly: more than one active variable");
            }
    UniPoly p;
    p.var = active >= 0 ? a.vars[active] : (a.vars.empty() ? "x" : a.vars[0]);
    for (const auto& [e, c] : a.terms) {
        unsigned k = active >= 0 ? e[active] : 0;
        if (p.c.size() <= k) p.c.resize(k + 1, Rat(0));
        p.c[k] += c;
    }
    p.trim();
    return p;
}

std::string mp_to_string(const MultiPoly& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : a.terms) {
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        first = false;
        Rat ac = abs(c);
        bool anyvar = false;
        for (auto x : e) anyvar |= x > 0;
        if (ac != 1 || !anyvar) os << rat_to_string(ac);
        bool started = ac != 1 || !anyvar;
        for (size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (started) os << "*";
            os << a.vars[i];
            if (e[i] > 1) os << "^" << e[i];
            started = true;
        }
    }
    return os.str();
}

namespace {

// variable order for the engine: main first, then the rest in declared order
std::vector<int> make_order(const MultiPoly& a, int main_idx) {
    std::vector<int> order;
    order.push_back(main_idx);
    for (size_t i = 0; i < a.vars.size(); ++i)
        if ((int)i != main_idx) order.push_back((int)i);
    return order;
}

}  // namespace

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var) {
    if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant: zero polynomial input");
    auto vs = merge_vars(f.vars, g.vars);
    if (std::find(vs.begin(), vs.end(), var) == vs.end())
        throw std::invalid_argument("resultant: variable " + var + " not present");
    MultiPoly F = mp_align(f, vs), G = mp_align(g, vs);
    int df = F.degree(var), dg = G.degree(var);
    if (df < 1 || dg < 1) throw std::domain_error("resultant: inputs must have positive degree in " + var);
    int main_idx = F.var_index(var);
    auto order = make_order(F, main_idx);
    RPConv cf = mp_to_rp(F, order), cg = mp_to_rp(G, order);
    RP res = rp_resultant(cf.poly, cg.poly);
    // Res(F/df_den, G/dg_den) = Res(F,G) / (df_den^dg * dg_den^df)
    Rat scale = Rat(1) / (rat_pow(Rat(cf.den), dg) * rat_pow(Rat(cg.den), df));
    std::vector<std::string> outvars;
    for (size_t i = 0; i < vs.size(); ++i)
        if ((int)i != main_idx) outvars.push_back(vs[i]);
    // remap: res lives on vars minus main, nesting order = order[1..]
    std::vector<int> order2;
    for (size_t i = 1; i < order.size(); ++i) {
        int idx = order[i];
        int shifted = idx < main_idx ? idx : idx - 1;
        order2.push_back(shifted);
    }
    return rp_to_mp(res, outvars, order2, scale);
}

MultiPoly mp_derivative(const MultiPoly& f, const std::string& var) {
    int i = f.var_index(var);
    if (i < 0) throw std::invalid_argument("mp_derivative: unknown variable " + var);
    MultiPoly r(f.vars);
    for (const auto& [e, c] : f.terms) {
        if (!e[i]) continue;
        auto ne = e;
        ne[i] -= 1;
        r.terms.emplace_back(std::move(ne), c * Rat(e[i]));
    }
    r.normalize();
    return r;
}

MultiPoly discriminant(const MultiPoly& f, const std::string& var) {
    int d = f.is_zero() ? -1 : f.degree(var);
    if (d < 1) throw std::domain_error("discriminant: degree in " + var + " is < 1");
    MultiPoly df = mp_derivative(f, var);
    MultiPoly res = resultant(f, df, var);
    MultiPoly lc = mp_coeff_wrt(f, var, (unsigned)d);
    MultiPoly q = mp_divexact(res, lc);
    if ((((long)d * (d - 1)) / 2) % 2) q = -q;
    return q;
}

namespace {

// exact division through the dense recursive engine (Gauss: primitive parts
// divide over Z exactly when the rational quotient exists)
std::optional<MultiPoly> mp_try_divexact(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw std::domain_error("mp_divexact: zero divisor");
    if (a.is_zero()) return MultiPoly(a.vars);
    auto vs = merge_vars(a.vars, b.vars);
    MultiPoly A = mp_align(a, vs), B = mp_align(b, vs);
    std::vector<int> order(vs.size());
    for (size_t i = 0; i < vs.size(); ++i) order[i] = (int)i;
    RPConv ca = mp_to_rp(A, order), cb = mp_to_rp(B, order);
    Int ga = zp_contentish(ca.poly), gb = zp_contentish(cb.poly);
    RP pa = rp_div_int(ca.poly, ga), pb = rp_div_int(cb.poly, gb);
    RP q;
    try {
        q = rp_divexact(pa, pb);
    } catch (const std::logic_error&) {
        return std::nullopt;
    }
    // quotient of the originals: (ga/da) / (gb/db) times the primitive quotient
    Rat scale = (Rat(ga) / Rat(ca.den)) / (Rat(gb) / Rat(cb.den));
    return rp_to_mp(q, vs, order, scale);
}

}  // namespace

bool mp_divides(const MultiPoly& b, const MultiPoly& a) {
    if (b.is_zero()) return a.is_zero();
    return mp_try_divexact(a, b).has_value();
}

MultiPoly mp_divexact(const MultiPoly& a, const MultiPoly& b) {
    auto q = mp_try_divexact(a, b);
    if (!q) throw std::logic_error("mp_divexact: not divisible");
    return *q;
}

}  // namespace hf
