#pragma once

#include "hf/multipoly.hpp"
#include "hf/partitions.hpp"

namespace hf {

// "valuation" below is the root valuation, i.e. the negated hull slope.
struct NewtonSegment {
    Rat valuation;
    int length;
};

struct NewtonPolygon {
    Int p;
    int zero_roots = 0;  // multiplicity of x = 0, stripped before the hull
    std::vector<std::pair<int, long>> vertices;  // (index, v_p(coeff)) along the lower hull
    std::vector<NewtonSegment> segments;         // valuation strictly decreasing
};

NewtonPolygon newton_polygon(const UniPoly& f, const Int& p);
NewtonPolygon newton_polygon(const ZPoly& f, const Int& p);

struct CensusGroup {
    Rat valuation;
    int count;
};

struct ValuationCensus {
    Int p;
    UniPoly probe;
    int zero_count = 0;  // roots where the probe vanishes exactly
    std::vector<CensusGroup> groups;
};

// Multiset of v_p(h(alpha)) over the roots alpha of f, through the Newton
// polygon of Res_x(f(x), y - h(x)).
ValuationCensus valuation_census(const UniPoly& f, const Int& p, const UniPoly& probe);

struct WildnessReport {
    Int p;
    int degree = 0;
    int wild_bound = 0;
    int tame_certified = 0;
    int undetermined = 0;
    std::vector<std::string> attribution;
};

// Lower bound on the total degree of wildly ramified local factors. Polygon
// slopes with p in the denominator are wild; integer-slope mass is probed by
// centering shifts on residue roots, fractional-but-tame-looking mass with a
// repeated residual through power probes, up to `depth` recursions.
WildnessReport wild_degree_bound(const UniPoly& f, const Int& p, int depth = 3);

// cycle type of sigma^m; the tame ramification of a specialization whose
// parameter is p-adically a unit times p^m at the cusp with class lambda
Partition tame_partition(const Partition& lambda, long m);

}  // namespace hf
