#pragma once

#include "hf/padic.hpp"
#include "hf/permgroup.hpp"
#include "hf/polyfactor.hpp"
#include "hf/specpoints.hpp"

namespace hf {

// Signed squarefree part of disc(f) supported on P; throws when the P-free
// cofactor is not a perfect square (the class cannot be certified within P).
Int disc_square_class(const UniPoly& f, const std::vector<Int>& P);

struct FieldFingerprint {
    int degree = 0;
    std::optional<Int> disc_class;  // empty when not certifiable within P
    // partition per fingerprint prime; empty optional marks a ramified prime
    std::vector<std::pair<Int, std::optional<std::vector<int>>>> partitions;
};

FieldFingerprint fingerprint(const UniPoly& f, const std::vector<Int>& primes,
                             const std::vector<Int>& P);
bool fingerprint_equal(const FieldFingerprint& a, const FieldFingerprint& b);
// agree at every prime where both are defined (sound non-isomorphism test:
// incompatible => non-isomorphic; compatible pairs stay "indistinguished")
bool fingerprint_compatible(const FieldFingerprint& a, const FieldFingerprint& b);

struct CertifyResult {
    Fullness verdict = Fullness::Inconclusive;
    long jordan_prime = 0;
    std::vector<int> factor_degrees;  // set when NotFull came from a factorization
    std::vector<std::pair<Int, std::vector<int>>> partitions_used;
    std::string evidence;
};

// Irreducibility (= transitivity), Frobenius types, the prime-order-in-(m/2,m-2]
// criterion, and the discriminant square class combined.
CertifyResult certify_full(const UniPoly& f, const std::vector<Int>& primes,
                           const std::vector<Int>& P, int extend_primes = 40);

// the first `count` primes avoiding `exclude` (default fingerprint primes)
std::vector<Int> fingerprint_primes(const std::vector<Int>& exclude, int count = 15);

struct AuditRow {
    SpecPoint point;
    bool separable = false;
    std::vector<int> factor_shape;  // factor degrees, descending; {deg} when irreducible
    Fullness verdict = Fullness::Inconclusive;
    std::optional<Int> disc_class;
    std::vector<std::pair<Int, int>> wild;       // (p, proven wild degree)
    std::vector<std::pair<Int, bool>> tame_ok;   // (p, fully tame-certified)
    int fingerprint_class = -1;                  // among separable irreducible rows
};

struct AuditReport {
    size_t point_count = 0;
    size_t nonseparable = 0;
    std::map<std::vector<int>, int> reducible_shapes;
    size_t irreducible_count = 0;
    int fingerprint_classes = 0;
    std::map<std::string, int> fullness_histogram;
    std::map<long, size_t> wild_proven;                  // per p in P_h
    std::map<long, std::vector<SpecPoint>> wild_exceptions;  // tame-certified points
    std::map<long, std::vector<SpecPoint>> wild_open;        // neither proven nor excluded
    std::map<int, int> full_field_lower_bounds;          // degree -> distinct full classes
    std::vector<AuditRow> rows;
};

// Full per-point pipeline over a specialization set: specialize, fingerprint,
// certify, wildness at every p in P_h. Point coordinates bind to the fixture's
// parameter variables in order; `var` stays free.
AuditReport audit(const MultiPoly& fixture, const std::string& var, const SpecSet& points,
                  const std::vector<Int>& P, const std::vector<Int>& P_h,
                  const std::vector<Int>& primes, int wild_depth = 3);

}  // namespace hf
