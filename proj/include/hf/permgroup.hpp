#pragma once

#include "hf/partitions.hpp"

#include <optional>

namespace hf {

// Stabilizer chain (deterministic Schreier-Sims), adequate for degree <= ~2000.
class StabChain {
  public:
    explicit StabChain(int degree, const std::vector<Permutation>& gens);
    Int order() const { return order_; }
    bool contains(const Permutation& g) const;

  private:
    struct Impl;
    struct Level {
        int base_point;
        std::vector<int> orbit;                 // points in discovery order
        std::vector<std::optional<Permutation>> rep;  // rep[pt] maps base_point -> pt
    };
    int degree_;
    std::vector<Level> levels_;
    Int order_ = 1;

    // strips g through the chain; returns the residue and the level reached
    std::pair<Permutation, size_t> sift(const Permutation& g) const;
};

struct PermGroupGen {
    int degree = 0;
    std::vector<Permutation> gens;

    PermGroupGen() = default;
    PermGroupGen(int n, std::vector<Permutation> g) : degree(n), gens(std::move(g)) {}
};

struct GroupTests {
    Int order;
    bool transitive;
    bool parity_mixed;  // some generator is odd
};

GroupTests group_tests(const PermGroupGen& g);
std::vector<int> orbit_of(const PermGroupGen& g, int point);
bool is_transitive(const PermGroupGen& g);

enum class Fullness { Alternating, Symmetric, NotFull, Inconclusive };

struct FullnessReport {
    Fullness verdict = Fullness::Inconclusive;
    long jordan_prime = 0;
    std::string evidence;
};

// Prime part p with m/2 < p <= m-2 (an element of prime order in that window
// exists exactly when the type has such a part, since p > m/2 forces a single p-cycle).
std::optional<long> jordan_witness(const Partition& type, long m);

// Cycle-type route: the caller vouches for transitivity. disc_is_square, when
// known, decides alternating vs symmetric; otherwise observed parities decide.
FullnessReport fullness_test(const std::vector<Partition>& sampled_types, long m, bool transitive,
                             std::optional<bool> disc_is_square = std::nullopt);
// Generator route: verifies transitivity, samples deterministic random words.
FullnessReport fullness_test(const PermGroupGen& g, int samples = 256);

}  // namespace hf
