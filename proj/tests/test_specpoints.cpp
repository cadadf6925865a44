#include "doctest.h"

#include "hf/specpoints.hpp"

#include <random>

using namespace hf;

namespace {

UniPoly poly_from_roots(const std::vector<Rat>& roots) {
    UniPoly p("t", {Rat(1)});
    for (const Rat& r : roots) p = p * UniPoly("t", {-r, Rat(1)});
    return p;
}

UniPoly tau4(const Rat& u, const Rat& v) {
    // t^4 - 2t^2 v - 8tv^2 - 4uv^2 + v^2
    return UniPoly("t", {v * v - 4 * u * v * v, -8 * v * v, -2 * v, Rat(0), Rat(1)});
}

}  // namespace

TEST_CASE("quartic_normalize printed example") {
    UniPoly q = poly_from_roots({Rat(-2), Rat(0), Rat(1), Rat(2)});
    auto n = quartic_normalize(q);
    CHECK(n.u == Rat(37) / 175);
    CHECK(n.v == Rat(9) / 1715);
}

TEST_CASE("quartic_normalize fixed point and errors") {
    Rat u0(1, 3), v0(2, 27);
    auto n = quartic_normalize(tau4(u0, v0));
    CHECK(n.u == u0);
    CHECK(n.v == v0);
    // b3 = 0 branch
    CHECK_THROWS_WITH_AS(quartic_normalize(UniPoly("t", {Rat(-1), Rat(0), Rat(-2), Rat(0), Rat(1)})),
                         doctest::Contains("secondary"), std::domain_error);
    CHECK_THROWS(quartic_normalize(UniPoly("t", {Rat(1), Rat(2), Rat(1)})));
}

TEST_CASE("quartic_normalize is affine invariant") {
    std::mt19937_64 rng(4242);
    int done = 0;
    for (int it = 0; it < 300 && done < 100; ++it) {
        std::vector<Rat> c(5);
        for (auto& x : c) {
            x = Rat((long)(rng() % 17) - 8, 1 + (long)(rng() % 4));
            x.canonicalize();
        }
        c[4] = Rat(1 + (long)(rng() % 5));
        UniPoly q("t", c);
        Rat alpha((long)(rng() % 7) + 1, 1 + (long)(rng() % 3));
        alpha.canonicalize();
        if (rng() & 1) alpha = -alpha;
        Rat beta((long)(rng() % 9) - 4, 1 + (long)(rng() % 3));
        beta.canonicalize();
        Rat scale((long)(rng() % 5) + 1);
        NormalizedQuartic n1, n2;
        try {
            n1 = quartic_normalize(q);
            UniPoly qt = up_compose(q, UniPoly("t", {beta, alpha})) * scale;
            n2 = quartic_normalize(qt);
        } catch (const std::domain_error&) {
            continue;
        }
        CHECK(n1.u == n2.u);
        CHECK(n1.v == n2.v);
        ++done;
    }
    CHECK(done == 100);
}

TEST_CASE("is_integral_point examples") {
    std::vector<Int> P235 = {Int(2), Int(3), Int(5)};
    std::vector<Int> P23 = {Int(2), Int(3)};
    CHECK(is_integral_point(NuShape::N2111, {Rat(1), Rat(1)}, P235).ok);  // conic value -3
    CHECK(is_integral_point(NuShape::N1111, {Rat(2)}, P235).ok);
    CHECK_FALSE(is_integral_point(NuShape::N1111, {Rat(5, 7)}, P235).ok);
    CHECK(is_integral_point(NuShape::N311, {Rat(1, 4), Rat(-1, 27)}, P23).ok);
    CHECK(is_integral_point(NuShape::N311, {Rat(-13, 12), Rat(2, 9)}, P23).ok);
    CHECK_FALSE(is_integral_point(NuShape::N311, {Rat(1, 7), Rat(2, 9)}, P23).ok);
    CHECK_THROWS(is_integral_point(NuShape::N311, {Rat(1)}, P23));
}

TEST_CASE("enumerate_points finds the printed small points") {
    std::vector<Int> P23 = {Int(2), Int(3)};
    auto s = enumerate_points(NuShape::N311, P23, 6);
    auto has = [&](const Rat& u, const Rat& v) {
        return std::find(s.points.begin(), s.points.end(), SpecPoint{{u, v}}) != s.points.end();
    };
    CHECK(has(Rat(1, 4), Rat(-1, 27)));
    CHECK(has(Rat(1, 4), Rat(2, 27)));
    CHECK(has(Rat(-13, 12), Rat(2, 9)));
    CHECK(has(Rat(11, 12), Rat(1, 9)));
    CHECK(has(Rat(-5, 12), Rat(-8, 27)));
    // every enumerated point passes the unit conditions
    for (const auto& pt : s.points) CHECK(is_integral_point(NuShape::N311, pt.coords, P23).ok);
    // counts are monotone in the bound
    auto s4 = enumerate_points(NuShape::N311, P23, 4);
    CHECK(s4.points.size() <= s.points.size());
}

TEST_CASE("enumerate_points degenerate inputs") {
    auto s = enumerate_points(NuShape::N1111, {}, 10);
    CHECK(s.points.empty());
    CHECK(s.plateau);
}

TEST_CASE("specialize") {
    // f9 fixture shape, inline
    MultiPoly f9({"u", "v", "x"});
    {
        auto T = [&](unsigned eu, unsigned ev, unsigned ex, const char* c) {
            f9.terms.emplace_back(std::vector<unsigned>{eu, ev, ex}, rat_from_string(c));
        };
        T(0, 0, 9, "1");
        T(0, 0, 8, "-3");
        T(1, 0, 7, "12");
        T(1, 0, 6, "-4");
        T(0, 1, 6, "-48");
        T(0, 1, 5, "42");
        T(1, 1, 4, "-24");
        T(0, 1, 4, "-6");
        T(1, 1, 3, "8");
        T(0, 2, 3, "12");
        T(0, 2, 2, "-12");
        T(1, 2, 1, "12");
        T(0, 2, 1, "-3");
        T(1, 2, 0, "-4");
        T(0, 3, 0, "8");
        T(0, 2, 0, "1");
        f9.normalize();
    }
    auto sp = specialize(f9, "x", {{"u", Rat(1, 4)}, {"v", Rat(-1, 27)}});
    CHECK(sp.poly.degree() == 9);
    CHECK(sp.separable);
    // the v = 1/27 slice is flagged non-separable
    auto sp2 = specialize(f9, "x", {{"u", Rat(1)}, {"v", Rat(1, 27)}});
    CHECK_FALSE(sp2.separable);
    auto sp3 = specialize(f9, "x", {{"u", Rat(17, 12)}, {"v", Rat(1, 27)}});
    CHECK_FALSE(sp3.separable);
}
