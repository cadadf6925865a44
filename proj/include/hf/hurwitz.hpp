#pragma once

#include "hf/characters.hpp"
#include "hf/permgroup.hpp"

namespace hf {

// (G, C, nu): classes labeled by cycle type, listed with multiplicities nu
// (weakly decreasing). G is the symmetric/alternating group of the stated
// degree, or an explicit permutation group given by generators.
struct HurwitzParameter {
    enum class Kind { Symmetric, Alternating, Explicit };
    Kind kind = Kind::Symmetric;
    int n = 0;  // permutation degree of the class labels
    PermGroupGen group;  // used when kind == Explicit
    std::vector<Partition> classes;
    std::vector<int> nu;

    int r() const;
    int rho() const { return r() - 3; }
    void validate() const;

    static HurwitzParameter sym(int n, std::vector<Partition> classes, std::vector<int> nu);
    static HurwitzParameter alt(int n, std::vector<Partition> classes, std::vector<int> nu);
    static HurwitzParameter explicit_group(PermGroupGen g, std::vector<Partition> classes,
                                           std::vector<int> nu);
};

struct MassResult {
    Rat mass = 0;
    std::optional<Int> degree;  // filled in when an exact count was also run
    std::vector<std::pair<Partition, Rat>> contributions;  // per irreducible (S_n labels)
};

// Character-sum mass (exact rational). Requires kind Symmetric or Alternating;
// for Alternating every class must be A_n-nonsplit (some even part or a repeat).
MassResult mass(const HurwitzParameter& h);

// Number of Nielsen tuples generating the full group, divided by |G| (trivial
// center), or counted as conjugation orbits directly otherwise.
Int count_degree(const HurwitzParameter& h, const Int& budget = Int(100000000));

// Exact degree by inclusion-exclusion: the caller supplies, up to conjugacy,
// every proper subgroup meeting all the classes.
Int mass_with_subgroups(const HurwitzParameter& h, const std::vector<PermGroupGen>& subgroups,
                        const Int& budget = Int(100000000));

struct OrbitSummary {
    std::vector<int> orbit_sizes;                 // descending
    std::vector<Permutation> braid_images;        // action on all tuple classes, one per braid index
    std::vector<bool> braid_is_squared;           // true where the colored generator is sigma_i^2
    std::vector<Partition> image_types;           // cycle types of braid_images
    std::vector<FullnessReport> orbit_fullness;   // monodromy verdict per orbit
    Int degree = 0;
};

OrbitSummary braid_orbits(const HurwitzParameter& h, const Int& budget = Int(100000000));

// Riemann-Hurwitz genus of the covers S_x -> P^1: g = 1 - n + (sum nu_i d_i)/2.
int genus_cover(int n, const HurwitzParameter& h);
int genus_from_partitions(int n, const std::vector<Partition>& lambdas);

}  // namespace hf
