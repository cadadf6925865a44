#include "hf/solver.hpp"

#include <algorithm>
#include <sstream>

namespace hf {

namespace {

MultiPoly mp_primitive(const MultiPoly& a) {
    if (a.is_zero()) return a;
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : a.terms) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    Rat scale = Rat(den_lcm) / Rat(num_gcd);
    MultiPoly r = a * scale;
    if (sgn(r.terms.front().second) < 0) r = -r;
    return r;
}

}  // namespace

bool ParametricMap::is_polynomial() const {
    for (const auto& [f, e] : den_factors)
        if (f.degree(svar) > 0) return false;
    return true;
}

MultiPoly ParametricMap::numerator() const {
    MultiPoly r = MultiPoly::constant({svar}, 1);
    for (const auto& [f, e] : num_factors) r = r * mp_pow(f, (unsigned long)e);
    return r;
}

MultiPoly ParametricMap::denominator() const {
    MultiPoly r = MultiPoly::constant({svar}, 1);
    for (const auto& [f, e] : den_factors) r = r * mp_pow(f, (unsigned long)e);
    return r;
}

MultiPoly ParametricMap::log_derivative_numerator() const {
    // sum of e_i F_i'/F_i over the factors (negative e for the denominator),
    // cleared by the product of the s-positive factors taken once each
    std::vector<std::pair<MultiPoly, int>> all = num_factors;
    for (const auto& [f, e] : den_factors) all.emplace_back(f, -e);
    std::vector<size_t> active;
    for (size_t i = 0; i < all.size(); ++i)
        if (all[i].first.degree(svar) > 0) active.push_back(i);
    if (active.empty()) throw std::domain_error("critical_resultant: map is constant in " + svar);
    MultiPoly total;
    for (size_t i : active) {
        MultiPoly term = mp_derivative(all[i].first, svar) * Rat(all[i].second);
        for (size_t j : active)
            if (j != i) term = term * all[j].first;
        total = total + term;
    }
    return total;
}

MultiPoly critical_resultant(const ParametricMap& map, const std::string& tvar) {
    MultiPoly delta = map.log_derivative_numerator();
    if (delta.is_zero()) throw std::domain_error("critical_resultant: degenerate map");
    MultiPoly g0 = map.numerator();
    MultiPoly ginf = map.denominator();
    auto vars = merge_vars(merge_vars(g0.vars, ginf.vars), {tvar});
    MultiPoly t = MultiPoly::var_poly(vars, tvar);
    MultiPoly F = g0 - ginf * t;
    return resultant(F, delta, map.svar);
}

MatchingSystem match_to_target(const MultiPoly& r, const UniPoly& tau, const std::string& tvar,
                               const std::vector<std::string>& unknowns, const std::string& keep) {
    int d = r.degree(tvar);
    if (d != tau.degree()) throw std::domain_error("match_to_target: degree mismatch");
    MultiPoly lead = mp_coeff_wrt(r, tvar, (unsigned)d);
    if (lead.total_degree() != 0)
        throw std::domain_error("match_to_target: leading t-coefficient is not constant");
    Rat lc = lead.terms.front().second;
    MatchingSystem sys;
    sys.unknowns = unknowns;
    sys.keep = keep;
    for (int i = 0; i < d; ++i) {
        MultiPoly eq = mp_coeff_wrt(r, tvar, (unsigned)i) - MultiPoly::constant({}, lc * tau.coeff(i));
        eq.normalize();
        if (!eq.is_zero()) sys.equations.push_back(mp_primitive(eq));
    }
    return sys;
}

namespace {

// substitute z := -B/A (from A z + B = 0) into eq, cleared by powers of A
MultiPoly subst_linear(const MultiPoly& eq, const std::string& z, const MultiPoly& A,
                       const MultiPoly& B) {
    int d = eq.degree(z);
    MultiPoly out;
    for (int k = 0; k <= d; ++k) {
        MultiPoly coef = mp_coeff_wrt(eq, z, (unsigned)k);
        if (coef.is_zero()) continue;
        MultiPoly term = coef * mp_pow(-B, (unsigned long)k) * mp_pow(A, (unsigned long)(d - k));
        out = out + term;
    }
    return out;
}

}  // namespace

UniPoly eliminate(const MatchingSystem& sys, int expected_degree, EliminationLog* log) {
    auto say = [&](const std::string& s) {
        if (log) log->steps.push_back(s);
    };
    std::vector<MultiPoly> eqs;
    for (const auto& e : sys.equations)
        if (!e.is_zero()) eqs.push_back(mp_primitive(e));
    if (eqs.empty()) throw std::domain_error("eliminate: empty system");
    std::vector<std::string> kill;
    for (const auto& u : sys.unknowns)
        if (u != sys.keep) kill.push_back(u);

    // phase 1: substitute unknowns that occur linearly in some equation
    bool changed = true;
    while (changed && !kill.empty()) {
        changed = false;
        for (size_t zi = 0; zi < kill.size() && !changed; ++zi) {
            const std::string z = kill[zi];
            for (size_t ei = 0; ei < eqs.size(); ++ei) {
                if (eqs[ei].var_index(z) < 0 || eqs[ei].degree(z) != 1) continue;
                MultiPoly A = mp_coeff_wrt(eqs[ei], z, 1);
                MultiPoly B = mp_coeff_wrt(eqs[ei], z, 0);
                std::ostringstream os;
                os << "substitute " << z << " from equation " << ei << " (degree 1)";
                say(os.str());
                std::vector<MultiPoly> next;
                for (size_t j = 0; j < eqs.size(); ++j) {
                    if (j == ei) continue;
                    MultiPoly s = eqs[j].var_index(z) >= 0 && eqs[j].degree(z) > 0
                                      ? subst_linear(eqs[j], z, A, B)
                                      : eqs[j];
                    s.normalize();
                    if (!s.is_zero()) next.push_back(mp_primitive(s));
                }
                eqs = std::move(next);
                kill.erase(kill.begin() + zi);
                changed = true;
                break;
            }
        }
    }

    // phase 2: resultants, one unknown at a time
    while (!kill.empty()) {
        // unknown of highest degree across the system
        std::string z;
        int zdeg = -1;
        for (const auto& u : kill) {
            int d = 0;
            for (const auto& e : eqs)
                if (e.var_index(u) >= 0) d = std::max(d, e.degree(u));
            if (d > zdeg) {
                zdeg = d;
                z = u;
            }
        }
        if (zdeg <= 0) {
            kill.erase(std::remove(kill.begin(), kill.end(), z), kill.end());
            continue;
        }
        // base: the equation of lowest positive degree in z
        size_t base = eqs.size();
        int best = 1 << 30;
        for (size_t i = 0; i < eqs.size(); ++i) {
            if (eqs[i].var_index(z) < 0) continue;
            int d = eqs[i].degree(z);
            if (d > 0 && d < best) {
                best = d;
                base = i;
            }
        }
        if (base == eqs.size()) throw std::domain_error("eliminate: inconsistent system (lost " + z + ")");
        std::vector<MultiPoly> next;
        for (size_t i = 0; i < eqs.size(); ++i) {
            if (i == base) continue;
            if (eqs[i].var_index(z) < 0 || eqs[i].degree(z) == 0) {
                next.push_back(eqs[i]);
                continue;
            }
            std::ostringstream os;
            os << "resultant in " << z << " of equations " << base << "," << i << " (degrees " << best
               << "," << eqs[i].degree(z) << ")";
            MultiPoly r = resultant(eqs[base], eqs[i], z);
            r.normalize();
            if (!r.is_zero()) {
                r = mp_primitive(r);
                next.push_back(r);
                os << " -> total degree " << r.total_degree();
            } else {
                os << " -> vanished";
            }
            say(os.str());
        }
        if (next.empty()) throw std::domain_error("eliminate: system collapsed eliminating " + z);
        eqs = std::move(next);
        kill.erase(std::remove(kill.begin(), kill.end(), z), kill.end());
    }

    // every survivor is univariate in keep; combine by gcd
    UniPoly acc(sys.keep, {});
    for (const auto& e : eqs) {
        for (const auto& v : e.vars)
            if (v != sys.keep && e.degree(v) > 0)
                throw std::logic_error("eliminate: leftover variable " + v);
        UniPoly u = mp_to_unipoly(e);
        u.var = sys.keep;
        acc = acc.is_zero() ? u : up_gcd(acc, u);
        if (acc.degree() == 0) throw std::domain_error("eliminate: inconsistent system (gcd 1)");
    }
    say("combined gcd degree " + std::to_string(acc.degree()));
    // squarefree part, then the factor of the expected degree
    UniPoly sf("x", {Rat(1)});
    for (auto& [g, m] : squarefree_decomposition(acc)) sf = sf * g;
    sf.var = sys.keep;
    auto fac = factor_over_Q(sf);
    std::vector<UniPoly> hits;
    for (auto& [g, m] : fac.factors)
        if (g.degree() == expected_degree) hits.push_back(g);
    if (hits.empty()) throw std::domain_error("eliminate: no factor of the expected degree");
    if (hits.size() > 1) throw std::domain_error("eliminate: several factors of the expected degree");
    say("selected factor of degree " + std::to_string(expected_degree));
    return hits[0];
}

namespace {

IdentityResult check_equal(const std::string& name, const MultiPoly& got, const MultiPoly& want) {
    IdentityResult r;
    r.name = name;
    r.pass = got == want;
    if (!r.pass) r.detail = "mismatch";
    return r;
}

bool is_fourth_power_rat(const Rat& x) {
    if (x <= 0) return false;
    Int n(x.get_num()), d(x.get_den());
    return mpz_root(nullptr, n.get_mpz_t(), 4) != 0 && mpz_root(nullptr, d.get_mpz_t(), 4) != 0;
}

Rat strip_primes(const Rat& x, const std::vector<Int>& ps) {
    Int n(abs(Int(x.get_num()))), d(x.get_den());
    for (const Int& p : ps) {
        Int rest;
        remove_factor(n, p, rest);
        n = rest;
        remove_factor(d, p, rest);
        d = rest;
    }
    Rat r = Rat(n) / Rat(d);
    return r;
}

}  // namespace

std::vector<IdentityResult> verify_identities(const FixtureStore& store) {
    std::vector<IdentityResult> out;
    auto P = [&](const std::string& f, const std::string& n = "main") { return store.get(f).poly(n); };

    {
        // (a) the decic involution: f10(9/t, (6y-9)/(8y-6)) has numerator proportional to f10
        const MultiPoly& f10 = P("f10");
        MultiPoly s1 = mp_subst_rational(f10, "t", MultiPoly::constant({"t"}, 9),
                                         MultiPoly::var_poly({"t"}, "t"));
        MultiPoly ynum = parse_poly_expr("6*y - 9", {"y"});
        MultiPoly yden = parse_poly_expr("8*y - 6", {"y"});
        MultiPoly s2 = mp_subst_rational(s1, "y", ynum, yden);
        IdentityResult r;
        r.name = "a: decic involution";
        if (mp_divides(f10, s2)) {
            MultiPoly q = mp_divexact(s2, f10);
            MultiPoly tp = MultiPoly::var_poly({"t"}, "t");
            while (q.total_degree() > 0 && mp_divides(yden, q)) q = mp_divexact(q, yden);
            while (q.total_degree() > 0 && mp_divides(tp, q)) q = mp_divexact(q, tp);
            r.pass = q.total_degree() == 0;
            if (!r.pass) r.detail = "quotient is not a scalar times cleared denominators";
        } else {
            r.pass = false;
            r.detail = "not divisible";
        }
        out.push_back(r);
    }
    {
        // (b) disc_y f10 = -2^136 3^57 5^25 t^4 (t-1)^5 (t-9)^5
        MultiPoly d = discriminant(P("f10"), "y");
        MultiPoly want = parse_poly_expr(
            "0 - 2^136*3^57*5^25*t^4*(t - 1)^5*(t - 9)^5", {"t"});
        out.push_back(check_equal("b: decic discriminant", d, want));
    }
    {
        // (c) disc_x f9 and disc_x f8
        MultiPoly d9 = discriminant(P("f9"), "x");
        MultiPoly want9 = parse_poly_expr("0 - 2^24*3^9*v^10*(4*u^3 - u^2 - 18*u*v + 27*v^2 + 4*v)^4*(27*v - 1)^6",
                                          {"u", "v"});
        out.push_back(check_equal("c1: nonic discriminant", d9, want9));
        MultiPoly d8 = discriminant(P("f8"), "x");
        MultiPoly want8 = parse_poly_expr("0 - 2^24*3^19*v^8*(4*u^3 - u^2 - 18*u*v + 27*v^2 + 4*v)^4*(u^2 - 3*v)^2",
                                          {"u", "v"});
        out.push_back(check_equal("c2: octic discriminant", d8, want8));
    }
    {
        // (d) disc_x c25 = 2^212 3^66 5^285 w^13 (w-1)^19
        MultiPoly d = discriminant(P("c25"), "x");
        MultiPoly want = parse_poly_expr("2^212*3^66*5^285*w^13*(w - 1)^19", {"w"});
        out.push_back(check_equal("d: c25 discriminant", d, want));
    }
    {
        // (e) the three resolvent discriminants
        const Fixture& fx = store.get("psl33-resolvents");
        MultiPoly dk = fx.poly("d");
        std::map<std::string, MultiPoly> env{{"d", dk}};
        MultiPoly d3 = discriminant(fx.poly("f3"), "x");
        out.push_back(check_equal("e1: cubic resolvent disc (-d; the printed d drops the"
                                  " odd-degree sign)",
                                  d3, -dk));
        MultiPoly d4 = discriminant(fx.poly("f4"), "x");
        MultiPoly want4 = parse_poly_expr("0 - 2^12*d*v^6", {"u", "v"}, &env);
        out.push_back(check_equal("e2: quartic resolvent disc", d4, want4));
        MultiPoly d8 = discriminant(fx.poly("f8"), "x");
        MultiPoly want8 = parse_poly_expr("0 - 2^60*d^17*v^14*(u^3 - v)^4", {"u", "v"}, &env);
        out.push_back(check_equal("e3: octic resolvent disc", d8, want8));
    }
    {
        // (f) D10 D32 D48 divides the conic pullback U^2+V^2+W^2-2UV-2UW-2VW
        const Fixture& uvw = store.get("uvw-202");
        const Fixture& pc = store.get("plane-curves-202");
        const MultiPoly &U = uvw.poly("U"), &V = uvw.poly("V"), &W = uvw.poly("W");
        MultiPoly conic = U * U + V * V + W * W - U * V * 2 - U * W * 2 - V * W * 2;
        MultiPoly divisor = pc.poly("D10") * pc.poly("D32") * pc.poly("D48");
        IdentityResult r;
        r.name = "f: conic pullback divisibility";
        r.pass = mp_divides(divisor, conic);
        if (!r.pass) r.detail = "product of the three preimage curves does not divide";
        out.push_back(r);
    }
    {
        // (g) the parabola parametrization satisfies (u-v)^2 = 4v
        const Fixture& pb = store.get("parabola-52");
        MultiPoly un = pb.poly("u_num"), ud = pb.poly("u_den");
        MultiPoly vn = pb.poly("v_num"), vd = pb.poly("v_den");
        // (un/ud - vn/vd)^2 == 4 vn/vd  <=>  (un vd - vn ud)^2 vd == 4 vn (ud vd)^2
        MultiPoly lhs = mp_pow(un * vd - vn * ud, 2) * vd;
        MultiPoly rhs = vn * mp_pow(ud * vd, 2) * Rat(4);
        out.push_back(check_equal("g: parabola parametrization", lhs, rhs));
    }
    {
        // (h) Koenig discriminant shape at five fixed rational (a, b)
        const Fixture& kg = store.get("konig");
        const MultiPoly& fam = kg.poly("family");
        const MultiPoly& f28 = kg.poly("disc_factor_28");
        IdentityResult r;
        r.name = "h: Koenig discriminant shape";
        r.pass = true;
        if (kg.poly("f0") == kg.poly("g0")) {
            // the extracted text prints g0 identical to f0, which makes the whole
            // family divisible by f0^3; the shape check needs the true g0
            r.pass = false;
            r.skipped = true;
            r.detail = "source text prints g0 = f0; family degenerates, shape not checkable";
            out.push_back(r);
            return out;
        }
        std::vector<std::pair<Rat, Rat>> pts = {{Rat(2), Rat(5)},  {Rat(-1), Rat(2)}, {Rat(3), Rat(-2)},
                                                {Rat(5), Rat(7)},  {Rat(-4), Rat(9)}};
        for (auto& [a0, b0] : pts) {
            MultiPoly g = mp_subst(mp_subst(fam, "a", a0), "b", b0);
            MultiPoly D = discriminant(g, "s");
            UniPoly dt = mp_to_unipoly(D);
            dt.var = "t";
            if (dt.is_zero()) {
                r.pass = false;
                r.detail = "discriminant vanishes identically";
                break;
            }
            // strip t^6
            int k = 0;
            while (k <= dt.degree() && dt.coeff(k) == 0) ++k;
            if (k != 6) {
                r.pass = false;
                r.detail = "t-power is " + std::to_string(k);
                break;
            }
            UniPoly h("t", std::vector<Rat>(dt.c.begin() + 6, dt.c.end()));
            if (h.degree() != 12) {
                r.pass = false;
                r.detail = "degree after t^6 is " + std::to_string(h.degree());
                break;
            }
            auto dec = squarefree_decomposition(h);
            UniPoly cubic("t", {Rat(1)});
            for (auto& [gq, m] : dec) {
                if (m % 4 != 0) {
                    r.pass = false;
                    r.detail = "multiplicity " + std::to_string(m) + " not divisible by 4";
                    break;
                }
                for (int i = 0; i < m / 4; ++i) cubic = cubic * gq;
            }
            if (!r.pass) break;
            if (cubic.degree() != 3) {
                r.pass = false;
                r.detail = "quartic-power part has degree " + std::to_string(cubic.degree());
                break;
            }
            Rat K = h.lc();  // cubic is monic, so lc(h) = K * lc(cubic)^4 = K
            std::vector<Rat> f28pt;
            for (const auto& vn2 : f28.vars)
                f28pt.push_back(vn2 == "a" ? a0 : vn2 == "b" ? b0 : Rat(0));
            Rat expect = rat_pow(mp_eval(f28, f28pt), 28) * rat_pow(a0, 12) *
                         rat_pow(b0 - 3, 18);
            Rat ratio = strip_primes(K / expect, {Int(2), Int(3)});
            if (!is_fourth_power_rat(ratio)) {
                r.pass = false;
                r.detail = "smooth-stripped constant ratio is not a fourth power";
                break;
            }
        }
        out.push_back(r);
    }
    return out;
}

}  // namespace hf
