#pragma once

#include "hf/fixtures.hpp"
#include "hf/polyfactor.hpp"

namespace hf {

// g = numerator/denominator as a map P^1_s -> P^1_t, both given in factored
// form; parameters ride along as extra variables. A polynomial map has a
// constant denominator.
struct ParametricMap {
    std::string svar = "s";
    std::vector<std::pair<MultiPoly, int>> num_factors;
    std::vector<std::pair<MultiPoly, int>> den_factors;

    MultiPoly numerator() const;
    MultiPoly denominator() const;
    // numerator of g'/g over the product of the s-dependent factors, once each
    MultiPoly log_derivative_numerator() const;
    bool is_polynomial() const;
};

// Res_s(g0 - g_inf t, Delta): Delta = g0' for polynomial maps, else the
// numerator of the logarithmic derivative g0' g_inf - g0 g_inf'.
MultiPoly critical_resultant(const ParametricMap& map, const std::string& tvar = "t");

struct MatchingSystem {
    std::vector<MultiPoly> equations;  // vanish on the solution set
    std::vector<std::string> unknowns;
    std::string keep;  // the unknown the caller ultimately wants
};

// Equations from r(t) = lc * tau(t) coefficient by coefficient. The leading
// t-coefficient of r must be constant; it supplies the proportionality factor.
MatchingSystem match_to_target(const MultiPoly& r, const UniPoly& tau, const std::string& tvar,
                               const std::vector<std::string>& unknowns, const std::string& keep);

struct EliminationLog {
    std::vector<std::string> steps;
};

// Resultant-chain elimination: substitute linearly-occurring unknowns first,
// then pairwise resultants against the lowest-degree equation, primitive parts
// between steps; the factor of the expected degree is returned squarefree.
UniPoly eliminate(const MatchingSystem& sys, int expected_degree, EliminationLog* log = nullptr);

struct IdentityResult {
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;
};

// The exact printed-identity suite over the fixture store (discriminant
// formulas, the decic involution, the conic-pullback divisibility, the
// parabola parametrization, the Koenig discriminant shape).
std::vector<IdentityResult> verify_identities(const FixtureStore& store);

}  // namespace hf
