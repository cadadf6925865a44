#pragma once

#include "hf/modpoly.hpp"

namespace hf {

struct RationalFactorization {
    Rat content = 0;
    std::vector<std::pair<UniPoly, int>> factors;  // primitive integer factors, irreducible over Q

    UniPoly reassemble(const std::string& var = "x") const;
    std::vector<int> degree_shape() const;  // factor degrees with multiplicity, sorted descending
};

// Irreducible factorization over Q: squarefree split, mod-p factorization,
// Hensel lifting to the Landau-Mignotte bound, bounded subset recombination.
// Throws recombination_cap_error when a split would need subsets larger than the cap.
struct recombination_cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
RationalFactorization factor_over_Q(const UniPoly& f, int subset_cap = 8);

struct IrreducibilityResult {
    enum class Verdict { Irreducible, NotIrreducible, Inconclusive } verdict;
    std::string method;
    std::vector<std::pair<Int, std::vector<int>>> used_partitions;
    std::vector<int> factor_degrees;  // populated when NotIrreducible came from a factorization

    bool irreducible() const { return verdict == Verdict::Irreducible; }
};

// Degree-pattern pre-test: an irreducible reduction at one prime, or an empty
// intersection of achievable proper factor degrees across primes, certifies
// irreducibility without factoring. Falls back to factor_over_Q when allowed.
IrreducibilityResult irreducible_over_Q(const UniPoly& f, const std::vector<Int>& primes,
                                        bool allow_factor = true);

}  // namespace hf
