#include "doctest.h"

#include "hf/characters.hpp"
#include "hf/permgroup.hpp"

#include <random>

using namespace hf;

TEST_CASE("class sizes") {
    CHECK(class_size(5, parse_partition("2111")) == 10);
    CHECK(class_size(5, parse_partition("5")) == 24);
    CHECK(class_size(7, Partition({1, 1, 1, 1, 1, 1, 1})) == 1);
    CHECK_THROWS(class_size(5, parse_partition("33")));

    for (int n = 1; n <= 9; ++n) {
        Int sum = 0;
        for (const auto& lam : partitions_of(n)) sum += class_size(n, lam);
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("murnaghan-nakayama explicit values") {
    Partition l41({4, 1});
    CHECK(mn_character(l41, parse_partition("2111")) == 2);
    CHECK(mn_character(l41, parse_partition("5")) == -1);
    CHECK(mn_character(l41, Partition({1, 1, 1, 1, 1})) == 4);
    // trivial character
    for (const auto& mu : partitions_of(6)) CHECK(mn_character(Partition({6}), mu) == 1);
    // sign character value = parity
    for (const auto& mu : partitions_of(6))
        CHECK(mn_character(Partition({1, 1, 1, 1, 1, 1}), mu) == (mu.is_even() ? 1 : -1));
    CHECK_THROWS(mn_character(l41, parse_partition("33")));
}

TEST_CASE("character orthogonality up to n = 8") {
    for (int n = 2; n <= 8; ++n) {
        auto parts = partitions_of(n);
        Int nf = factorial(n);
        // row orthogonality over all pairs of irreducibles
        for (size_t a = 0; a < parts.size(); ++a)
            for (size_t b = a; b < parts.size(); ++b) {
                Int sum = 0;
                for (const auto& mu : parts)
                    sum += class_size(n, mu) * mn_character(parts[a], mu) * mn_character(parts[b], mu);
                CHECK(sum == (a == b ? nf : Int(0)));
            }
    }
}

TEST_CASE("partition_power matches the explicit permutation oracle") {
    std::mt19937_64 rng(31337);
    for (int it = 0; it < 500; ++it) {
        int n = 1 + (int)(rng() % 40);
        // random partition of n
        std::vector<int> parts;
        int rest = n;
        while (rest > 0) {
            int p = 1 + (int)(rng() % rest);
            parts.push_back(p);
            rest -= p;
        }
        Partition lam(parts);
        long m = 1 + (long)(rng() % 12);
        Permutation sigma = perm_of_type(n, lam);
        Permutation power(n);
        for (long i = 0; i < m; ++i) power = sigma * power;
        CHECK(partition_power(lam, m) == cycle_type(power));
    }
    CHECK(partition_power(parse_partition("3^8 2^12 1^4"), 1) == parse_partition("3^8 2^12 1^4"));
    CHECK_THROWS(partition_power(parse_partition("21"), 0));
}

TEST_CASE("tame power fixtures") {
    // squares and cubes used by the three-point tables
    CHECK(partition_power(parse_partition("3^8 2^12 1^4"), 2) == parse_partition("3^8 1^28"));
    CHECK(partition_power(parse_partition("3^8 2^12 1^4"), 3) == parse_partition("2^12 1^28"));
    CHECK(partition_power(parse_partition("6^4 4^6 2^2"), 4) == parse_partition("3^8 1^28"));
}

TEST_CASE("group_tests basics") {
    // S_5 from a transposition and a 5-cycle
    PermGroupGen s5(5, {perm_from_cycles(5, {{1, 2}}), perm_from_cycles(5, {{1, 2, 3, 4, 5}})});
    auto t = group_tests(s5);
    CHECK(t.order == 120);
    CHECK(t.transitive);
    CHECK(t.parity_mixed);

    PermGroupGen degen(6, {perm_from_cycles(6, {{1, 2}, {3, 4}, {5, 6}})});
    auto t2 = group_tests(degen);
    CHECK(t2.order == 2);
    CHECK_FALSE(t2.transitive);

    PermGroupGen a4(4, {perm_from_cycles(4, {{1, 2, 3}}), perm_from_cycles(4, {{2, 3, 4}})});
    CHECK(group_tests(a4).order == 12);
}

TEST_CASE("fullness test") {
    // (17,6,2) on 25 points with square discriminant -> A_25
    auto rep = fullness_test({parse_partition("17+6+2")}, 25, true, true);
    CHECK(rep.verdict == Fullness::Alternating);
    CHECK(rep.jordan_prime == 17);

    // 989 = 23*43 is composite: inconclusive alone
    auto rep2 = fullness_test({Partition({989, 208, 3})}, 1200, true, std::nullopt);
    CHECK(rep2.verdict == Fullness::Inconclusive);
    // adding (1181,9,6,4): 1181 is prime and sits in (600, 1198]
    auto rep3 = fullness_test({Partition({989, 208, 3}), Partition({1181, 9, 6, 4})}, 1200, true,
                              std::nullopt);
    CHECK(rep3.jordan_prime == 1181);
    CHECK(rep3.verdict != Fullness::Inconclusive);

    // intransitive input
    auto rep4 = fullness_test({parse_partition("17+6+2")}, 25, false, std::nullopt);
    CHECK(rep4.verdict == Fullness::Inconclusive);

    // generator route on S_25-generating pair
    PermGroupGen s25(25, {perm_from_cycles(25, {{1, 2}}),
                          perm_from_cycles(25, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13,
                                                 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25}})});
    auto rep5 = fullness_test(s25);
    CHECK(rep5.verdict == Fullness::Symmetric);
}

TEST_CASE("fullness never overclaims on small groups") {
    // exhaustive-ish safeguard: sample types from groups of degree <= 10 with known
    // small order and confirm no A_m/S_m verdict
    PermGroupGen c7(7, {perm_from_cycles(7, {{1, 2, 3, 4, 5, 6, 7}})});  // cyclic of order 7
    auto rep = fullness_test(c7);
    CHECK(rep.verdict == Fullness::Inconclusive);  // 7 > 7-2 so no witness

    PermGroupGen d5(10, {perm_from_cycles(10, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}),
                         perm_from_cycles(10, {{2, 10}, {3, 9}, {4, 8}, {5, 7}})});
    auto rep2 = fullness_test(d5);
    CHECK(rep2.verdict == Fullness::Inconclusive);
}
