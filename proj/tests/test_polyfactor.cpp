#include "doctest.h"

#include "hf/polyfactor.hpp"

#include <random>

using namespace hf;

namespace {

// tiny independent F_p poly helpers for the brute-force oracle
using FpVec = std::vector<long>;

FpVec fp_trim(FpVec a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

FpVec fp_rem(FpVec a, const FpVec& b, long p) {
    long inv = 1;
    for (long i = 1; i < p; ++i)
        if (b.back() * i % p == 1) inv = i;
    while (a.size() >= b.size()) {
        long f = a.back() * inv % p;
        size_t k = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[i + k] = ((a[i + k] - f * b[i]) % p + p) % p;
        a = fp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

// all monic polynomials of degree d over F_p
void all_monic(long p, int d, std::vector<FpVec>& out) {
    FpVec cur(d + 1, 0);
    cur[d] = 1;
    std::function<void(int)> rec = [&](int i) {
        if (i == d) {
            out.push_back(cur);
            return;
        }
        for (long c = 0; c < p; ++c) {
            cur[i] = c;
            rec(i + 1);
        }
    };
    rec(0);
}

// trial-division factor degrees of a monic polynomial over F_p (independent oracle)
std::vector<int> oracle_factor_degrees(FpVec f, long p) {
    std::vector<int> out;
    int d = 1;
    while ((int)f.size() - 1 > 0) {
        std::vector<FpVec> cands;
        all_monic(p, d, cands);
        bool split = false;
        for (const auto& g : cands) {
            if ((int)f.size() - 1 < d) break;
            if (fp_rem(f, g, p).empty()) {
                // divide out
                FpVec q;
                FpVec r = f;
                q.assign(f.size() - g.size() + 1, 0);
                long inv = 1;
                for (long i = 1; i < p; ++i)
                    if (g.back() * i % p == 1) inv = i;
                while (r.size() >= g.size()) {
                    long fac = r.back() * inv % p;
                    size_t k = r.size() - g.size();
                    q[k] = fac;
                    for (size_t i = 0; i < g.size(); ++i)
                        r[i + k] = ((r[i + k] - fac * g[i]) % p + p) % p;
                    r = fp_trim(r);
                    if (r.empty()) break;
                }
                f = q;
                out.push_back(d);
                split = true;
                break;
            }
        }
        if (!split) ++d;
        if (d > (int)f.size() - 1 && (int)f.size() - 1 > 0) {
            out.push_back((int)f.size() - 1);
            break;
        }
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

UniPoly f9_at(const Rat& u, const Rat& v) {
    // x^9-3x^8+12ux^7-4(u+12v)x^6+42vx^5-6(4u+1)vx^4+4v(2u+3v)x^3-12v^2x^2+3(4u-1)v^2x-v^2(4u-8v-1)
    std::vector<Rat> c(10);
    c[9] = 1;
    c[8] = -3;
    c[7] = 12 * u;
    c[6] = -4 * (u + 12 * v);
    c[5] = 42 * v;
    c[4] = -6 * (4 * u + 1) * v;
    c[3] = 4 * v * (2 * u + 3 * v);
    c[2] = -12 * v * v;
    c[1] = 3 * (4 * u - 1) * v * v;
    c[0] = -(v * v) * (4 * u - 8 * v - 1);
    return UniPoly("x", c);
}

}  // namespace

TEST_CASE("factor_mod_p small fixtures") {
    // x^2+x+1 irreducible mod 2
    UniPoly f("x", {Rat(1), Rat(1), Rat(1)});
    auto fac = factor_mod_p(f, Int(2));
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].first.degree() == 2);
    CHECK(fac.factors[0].second == 1);

    CHECK_THROWS(factor_mod_p(f, Int(4)));
}

TEST_CASE("factor_mod_p f9(1,1,x) mod 5 vs brute-force oracle") {
    UniPoly f = f9_at(Rat(1), Rat(1));
    auto fac = factor_mod_p(f, Int(5));
    std::vector<int> degrees;
    for (const auto& [g, m] : fac.factors)
        for (int i = 0; i < m; ++i) degrees.push_back(g.degree());
    std::sort(degrees.rbegin(), degrees.rend());

    FpVec fo;
    for (const auto& c : f.c) {
        long num = (long)Int(c.get_num() % 5).get_si();
        fo.push_back(((num % 5) + 5) % 5);
    }
    fo = fp_trim(fo);
    auto expect = oracle_factor_degrees(fo, 5);
    CHECK(degrees == expect);
}

TEST_CASE("factor_mod_p reassembly over random inputs") {
    std::mt19937_64 rng(2024);
    for (long p : {2L, 3L, 5L, 13L}) {
        for (int it = 0; it < 12; ++it) {
            std::vector<Rat> cs(1 + 2 + rng() % 7);
            for (auto& c : cs) c = Rat((long)(rng() % 2 * p) - (long)p);
            cs.back() = 1;
            UniPoly f("x", cs);
            if (f.degree() < 1) continue;
            auto fac = factor_mod_p(f, Int(p));
            PolyMod prod((uint32_t)p, {fac.unit});
            for (const auto& [g, m] : fac.factors) prod = pm_mul(prod, pm_pow(g, (unsigned long)m));
            Rat cont;
            ZPoly z = up_to_z(f, &cont);
            CHECK(prod == pm_from_z(z, (uint32_t)p));
        }
    }
}

TEST_CASE("frobenius partition basics") {
    UniPoly f("x", {Rat(-1), Rat(0), Rat(1)});  // x^2 - 1
    auto part = frobenius_partition(f, Int(5));
    CHECK(part == std::vector<int>{1, 1});
    // 2 ramifies (disc = 4)
    CHECK_THROWS(frobenius_partition(f, Int(2)));
    // partition entries sum to deg f
    UniPoly g = f9_at(Rat(1, 4), Rat(-1, 27));
    auto p7 = frobenius_partition(g, Int(7));
    int sum = 0;
    for (int d : p7) sum += d;
    CHECK(sum == 9);
}

TEST_CASE("frobenius partition agrees with gcd-ladder root counting") {
    // cross-check the number of degree-1 factors of phi-like polynomials via x^p - x
    std::mt19937_64 rng(77);
    for (int it = 0; it < 10; ++it) {
        std::vector<Rat> cs(6);
        for (auto& c : cs) c = Rat((long)(rng() % 15) - 7);
        cs[5] = 1;
        UniPoly f("x", cs);
        uint32_t p = 7;
        PolyMod fp = pm_from_z(up_to_z(f), p);
        if (pm_gcd(fp, pm_derivative(fp)).degree() != 0) continue;
        auto part = frobenius_partition(f, Int(7));
        // count linear factors with the ladder gcd(f, x^p - x)
        PolyMod xp = pm_powmod(PolyMod(p, {0, 1}), Int(7), fp);
        PolyMod lin = pm_gcd(pm_sub(xp, PolyMod(p, {0, 1})), fp);
        int ones = 0;
        for (int d : part) ones += d == 1;
        CHECK(ones == lin.degree());
    }
}

TEST_CASE("factor_over_Q round trip on two random quintics") {
    // x^5 - x - 1 and x^5 - x - 2 are irreducible mod 5 (Artin-Schreier), so over Q
    UniPoly f("x", {Rat(-1), Rat(-1), Rat(0), Rat(0), Rat(0), Rat(1)});
    UniPoly g("x", {Rat(-2), Rat(-1), Rat(0), Rat(0), Rat(0), Rat(1)});
    auto fac = factor_over_Q(f * g);
    CHECK(fac.degree_shape() == std::vector<int>{5, 5});
    UniPoly re = fac.reassemble("x");
    CHECK(re == f * g);
}

TEST_CASE("factor_over_Q basics") {
    UniPoly f("x", {Rat(1), Rat(0), Rat(1)});  // x^2 + 1
    auto fac = factor_over_Q(f);
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].first == f);

    // multiplicities survive
    UniPoly xm1("x", {Rat(-1), Rat(1)});
    auto fac2 = factor_over_Q(up_pow(xm1, 3) * f);
    CHECK(fac2.reassemble("x") == up_pow(xm1, 3) * f);
}

TEST_CASE("irreducible_over_Q") {
    UniPoly f("x", {Rat(-1), Rat(0), Rat(1)});  // x^2 - 1 factors
    auto r = irreducible_over_Q(f, {Int(3), Int(5), Int(7)});
    CHECK(r.verdict == IrreducibilityResult::Verdict::NotIrreducible);

    UniPoly g("x", {Rat(1), Rat(0), Rat(1)});  // x^2 + 1
    auto r2 = irreducible_over_Q(g, {Int(3), Int(7), Int(11)});
    CHECK(r2.verdict == IrreducibilityResult::Verdict::Irreducible);
}
