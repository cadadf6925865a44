#pragma once

#include "hf/multipoly.hpp"

namespace hf {

// Multiplicity shapes with a worked-out unit-condition set.
enum class NuShape { N1111, N2111, N311, N41, N31 };
NuShape nu_shape(const std::vector<int>& nu);
std::string nu_shape_name(NuShape s);
int nu_shape_arity(NuShape s);

// the quartic discriminant kernel 4u^3 - u^2 - 18uv + 27v^2 + 4v
Rat disc_kernel(const Rat& u, const Rat& v);

struct NormalizedQuartic {
    Rat u, v;
    Rat d;      // disc_kernel(u, v)
    Rat scale;  // the alpha with q(t) ~ tau4(u, v, alpha t + beta)
    Rat shift;
};

// The unique (u,v) with q affine-equivalent to t^4 - 2t^2 v - 8tv^2 - 4uv^2 + v^2.
// Throws domain_error("secondary family") when the depressed quartic has b2 = 0 or b3 = 0.
NormalizedQuartic quartic_normalize(const UniPoly& q);

struct UnitCheck {
    std::string name;
    Rat value;
    bool ok;
};

struct PointCertificate {
    bool ok = false;
    std::vector<UnitCheck> checks;
};

PointCertificate is_integral_point(NuShape nu, const std::vector<Rat>& coords,
                                   const std::vector<Int>& P);

struct SpecPoint {
    std::vector<Rat> coords;
    bool operator<(const SpecPoint& o) const { return coords < o.coords; }
    bool operator==(const SpecPoint& o) const { return coords == o.coords; }
};

struct SpecSet {
    NuShape nu;
    std::vector<Int> P;
    int bound = 0;
    std::vector<SpecPoint> points;  // sorted, deduplicated
    size_t count_at_prev = 0;       // count with every exponent <= bound-1
    bool plateau = false;
    bool budget_exhausted = false;
};

// Exhaustive within the exponent bound B on every unit involved (coordinates
// that must be units, and the discriminant-locus values). pair_budget caps the
// number of inner candidates for the two-coordinate shapes.
SpecSet enumerate_points(NuShape nu, const std::vector<Int>& P, int B,
                         unsigned long pair_budget = 400000000UL);

// signed P-smooth rationals  +-prod p^e, |e| <= B, sorted
std::vector<Rat> smooth_rationals(const std::vector<Int>& P, int B);

// largest |e_p| over the factorization of x (x must be a P-unit)
int unit_height(const Rat& x, const std::vector<Int>& P);

struct Specialization {
    UniPoly poly;  // primitive integer coefficients
    Rat content;
    bool separable = false;
};

// Substitute every variable except `keep`; exact, content split off.
Specialization specialize(const MultiPoly& fixture, const std::string& keep,
                          const std::vector<std::pair<std::string, Rat>>& values);

}  // namespace hf
