#include "doctest.h"

#include "hf/hurwitz.hpp"

using namespace hf;

namespace {

HurwitzParameter h25() {
    return HurwitzParameter::sym(5, {parse_partition("2111"), parse_partition("5")}, {4, 1});
}

PermGroupGen wreath_s3_s2() {
    return PermGroupGen(6, {perm_from_cycles(6, {{1, 2, 3}}), perm_from_cycles(6, {{1, 2}}),
                            perm_from_cycles(6, {{1, 4}, {2, 5}, {3, 6}})});
}

}  // namespace

TEST_CASE("mass of the degree-25 parameter") {
    auto m = mass(h25());
    CHECK(m.mass == 25);
    Rat sum = 0;
    for (auto& [lam, c] : m.contributions) sum += c;
    CHECK(sum == m.mass);
}

TEST_CASE("mass closed form for the one-parameter family") {
    // (S_5, (2111, 5), (j,1)) -> (10^(j-2) - 5^(j-2))/3
    for (int j : {4, 6, 8}) {
        auto h = HurwitzParameter::sym(5, {parse_partition("2111"), parse_partition("5")}, {j, 1});
        Rat expect = (rat_pow(Rat(10), j - 2) - rat_pow(Rat(5), j - 2)) / 3;
        CHECK(mass(h).mass == expect);
    }
}

TEST_CASE("mass bounds and the (2,1,1,1) table rows") {
    auto P = [](const char* s) { return parse_partition(s); };
    CHECK(mass(h25()).mass == 25);
    CHECK(count_degree(HurwitzParameter::sym(6, {P("21111"), P("3111"), P("411"), P("321")},
                                             {2, 1, 1, 1})) == 202);
    CHECK(count_degree(HurwitzParameter::sym(6, {P("21111"), P("3111"), P("321"), P("222")},
                                             {2, 1, 1, 1})) == 52);
}

TEST_CASE("exact degrees reproduce the accessible-family table") {
    auto P = [](const char* s) { return parse_partition(s); };
    // nu = (3,1,1)
    CHECK(count_degree(HurwitzParameter::sym(6, {P("21111"), P("321"), P("51")}, {3, 1, 1})) == 150);
    CHECK(count_degree(HurwitzParameter::sym(5, {P("2111"), P("311"), P("41")}, {3, 1, 1})) == 48);
    CHECK(count_degree(HurwitzParameter::sym(5, {P("2111"), P("221"), P("41")}, {3, 1, 1})) == 48);
    CHECK(count_degree(HurwitzParameter::sym(5, {P("2111"), P("311"), P("32")}, {3, 1, 1})) == 45);
    // nu = (3,2)
    CHECK(count_degree(HurwitzParameter::sym(5, {P("311"), P("2111")}, {3, 2})) == 55);
    CHECK(count_degree(HurwitzParameter::sym(5, {P("221"), P("2111")}, {3, 2})) == 40);
    // nu = (4,1)
    CHECK(count_degree(h25()) == 25);
}

TEST_CASE("exact degrees for the larger S6 and A6 table rows" * doctest::skip(false)) {
    auto P = [](const char* s) { return parse_partition(s); };
    CHECK(count_degree(HurwitzParameter::sym(6, {P("3111"), P("21111"), P("321")}, {3, 1, 1})) == 216);
    CHECK(count_degree(HurwitzParameter::sym(6, {P("3111"), P("21111"), P("411")}, {3, 1, 1})) == 96);
    CHECK(count_degree(HurwitzParameter::alt(6, {P("3111"), P("2211")}, {4, 1})) == 192);
    CHECK(count_degree(HurwitzParameter::alt(6, {P("3111")}, {5})) == 96);
}

TEST_CASE("mass rejects ambiguous alternating classes") {
    // 7-cycles split in A_7 (all parts odd and distinct)
    CHECK_THROWS(mass(HurwitzParameter::alt(7, {parse_partition("7"), parse_partition("331")}, {2, 2})));
}

TEST_CASE("the degree-9 parameter") {
    // over S_6 the mass is 9 and every product-one tuple generates S_6
    auto h6 = HurwitzParameter::sym(6, {parse_partition("21111"), parse_partition("222"),
                                        parse_partition("33")}, {3, 1, 1});
    CHECK(mass(h6).mass == 9);
    CHECK(count_degree(h6) == 9);
    // inside the order-72 wreath subgroup the two sign characters obstruct every
    // assignment: no Nielsen tuples at all
    auto g = wreath_s3_s2();
    CHECK(group_tests(g).order == 72);
    auto h9 = HurwitzParameter::explicit_group(
        g, {parse_partition("21111"), parse_partition("33"), parse_partition("222")}, {3, 1, 1});
    CHECK(count_degree(h9) == 0);
}

TEST_CASE("mass_with_subgroups") {
    // S_4 with classes (211), (4), nu (2,2); D_4 is the only proper subgroup type meeting both
    auto h = HurwitzParameter::sym(4, {parse_partition("211"), parse_partition("4")}, {2, 2});
    PermGroupGen d4(4, {perm_from_cycles(4, {{1, 2, 3, 4}}), perm_from_cycles(4, {{1, 3}})});
    Int direct = count_degree(h);
    CHECK(mass_with_subgroups(h, {d4}) == direct);
    // degenerate self-inclusion and a vacuous proper subgroup both leave 9
    auto h6 = HurwitzParameter::sym(6, {parse_partition("21111"), parse_partition("222"),
                                        parse_partition("33")}, {3, 1, 1});
    CHECK(mass_with_subgroups(h6, {wreath_s3_s2()}) == 9);
    // empty list returns the mass itself
    auto m25 = mass_with_subgroups(h25(), {});
    CHECK(m25 == 25);
}

TEST_CASE("braid orbits of the degree-25 parameter") {
    auto s = braid_orbits(h25());
    CHECK(s.degree == 25);
    REQUIRE(s.orbit_sizes.size() == 1);
    CHECK(s.orbit_sizes[0] == 25);
    REQUIRE(s.braid_images.size() == 4);
    // the three same-class braid generators all have cycle type 3^5 2^5
    for (int i = 0; i < 3; ++i) {
        CHECK_FALSE(s.braid_is_squared[i]);
        CHECK(s.image_types[i] == parse_partition("3^5 2^5"));
    }
    CHECK(s.braid_is_squared[3]);
    // monodromy is all of S_25
    REQUIRE(s.orbit_fullness.size() == 1);
    CHECK(s.orbit_fullness[0].verdict == Fullness::Symmetric);
}

TEST_CASE("braid orbit sizes sum to the exact degree on an intransitive-free example") {
    // (S_4, (211, 4), (2,2)): several orbits are possible; sizes must sum to the count
    auto h = HurwitzParameter::sym(4, {parse_partition("211"), parse_partition("4")}, {2, 2});
    auto s = braid_orbits(h);
    int sum = 0;
    for (int x : s.orbit_sizes) sum += x;
    CHECK(Int(sum) == count_degree(h));
    CHECK(Int(sum) == s.degree);
}

TEST_CASE("genus of parametrized covers") {
    CHECK(genus_cover(5, h25()) == 0);
    // Table rows: genus = 1 - 52 + (sum of drops)/2
    auto g = [&](const char* a, const char* b, const char* c) {
        return genus_from_partitions(52, {parse_partition(a), parse_partition(b), parse_partition(c)});
    };
    CHECK(g("12^2 6 4^4 3 2 1", "3^8 2^12 1^4", "20 12 5 4^3 2 1") == 6);
    CHECK(g("10^2 8 6^3 5 1", "3^8 2^12 1^4", "10^2 6^2 5 4^2 2^2 1^3") == 5);
    CHECK(g("4^9 2^7 1^2", "3^8 2^12 1^4", "6^4 4^6 2^2") == 0);
    CHECK(g("2^22 1^8", "10^2 8 6^3 5 1", "6^4 4^6 2^2") == 2);
    CHECK(g("4^9 2^3 1^10", "12^2 6 4^4 3 2 1", "6^4 4^6 2^2") == 5);
    CHECK(g("12^2 6 4^4 3 2 1", "10^2 8 6^3 5 1", "5^5 4^2 3^4 1^7") == 9);
    // parity violation
    CHECK_THROWS(genus_from_partitions(4, {parse_partition("211"), parse_partition("1111")}));
}

TEST_CASE("mass is an upper bound for the exact degree") {
    auto h = HurwitzParameter::sym(4, {parse_partition("211"), parse_partition("4")}, {2, 2});
    auto m = mass(h);
    CHECK(m.mass >= Rat(count_degree(h)));
    CHECK(mass(h25()).mass >= Rat(count_degree(h25())));
}
