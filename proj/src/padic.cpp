#include "hf/padic.hpp"

#include "hf/modpoly.hpp"

#include <algorithm>
#include <sstream>

namespace hf {

namespace {

NewtonPolygon polygon_from_vals(const Int& p, const std::vector<std::pair<int, long>>& pts,
                                int zero_roots) {
    // lower convex hull of (i, v) scanning left to right
    NewtonPolygon np;
    np.p = p;
    np.zero_roots = zero_roots;
    std::vector<std::pair<int, long>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull[hull.size() - 1];
            // drop b when it lies on or above segment a-pt
            __int128 lhs = (__int128)(b.second - a.second) * (pt.first - a.first);
            __int128 rhs = (__int128)(pt.second - a.second) * (b.first - a.first);
            if (lhs >= rhs) hull.pop_back();
            else break;
        }
        hull.push_back(pt);
    }
    np.vertices = hull;
    for (size_t i = 0; i + 1 < hull.size(); ++i) {
        Rat slope = Rat(Int(hull[i + 1].second - hull[i].second));
        slope /= Rat(Int((long)(hull[i + 1].first - hull[i].first)));
        np.segments.push_back({-slope, hull[i + 1].first - hull[i].first});
    }
    // root valuation = -slope decreases along the hull; report in hull order
    return np;
}

}  // namespace

NewtonPolygon newton_polygon(const ZPoly& f, const Int& p) {
    if (f.is_zero()) throw std::domain_error("newton_polygon: zero polynomial");
    if (!is_prime(p)) throw std::domain_error("newton_polygon: p not prime");
    int k = 0;
    while (f.c[k] == 0) ++k;
    std::vector<std::pair<int, long>> pts;
    for (int i = k; i <= f.degree(); ++i) {
        if (f.c[i] == 0) continue;
        Int rest;
        long v = (long)remove_factor(f.c[i], p, rest);
        pts.emplace_back(i - k, v);
    }
    return polygon_from_vals(p, pts, k);
}

NewtonPolygon newton_polygon(const UniPoly& f, const Int& p) {
    if (f.is_zero()) throw std::domain_error("newton_polygon: zero polynomial");
    if (!is_prime(p)) throw std::domain_error("newton_polygon: p not prime");
    int k = 0;
    while (f.c[k] == 0) ++k;
    std::vector<std::pair<int, long>> pts;
    for (int i = k; i <= f.degree(); ++i) {
        if (f.c[i] == 0) continue;
        pts.emplace_back(i - k, qval(f.c[i], p));
    }
    return polygon_from_vals(p, pts, k);
}

ValuationCensus valuation_census(const UniPoly& f, const Int& p, const UniPoly& probe) {
    if (f.degree() < 1) throw std::domain_error("valuation_census: degree < 1");
    ValuationCensus out;
    out.p = p;
    out.probe = probe;
    if (probe.degree() < 1) {
        // constant probe: one group
        Rat c = probe.coeff(0);
        if (c == 0) {
            out.zero_count = f.degree();
        } else {
            out.groups.push_back({Rat(qval(c, p)), f.degree()});
        }
        return out;
    }
    MultiPoly F = mp_align(MultiPoly::from_unipoly(f), {f.var, "y"});
    MultiPoly H = mp_align(MultiPoly::from_unipoly(UniPoly(f.var, probe.c)), {f.var, "y"});
    MultiPoly Y = MultiPoly::var_poly({f.var, "y"}, "y");
    MultiPoly G = Y - H;
    MultiPoly R = resultant(F, G, f.var);
    UniPoly r = mp_to_unipoly(R);
    // r has degree deg f in y (up to the lc factor); its roots are probe(alpha)
    NewtonPolygon np = newton_polygon(r, p);
    out.zero_count = np.zero_roots;
    for (const auto& seg : np.segments) out.groups.push_back({seg.valuation, seg.length});
    std::sort(out.groups.begin(), out.groups.end(),
              [](const CensusGroup& a, const CensusGroup& b) { return a.valuation > b.valuation; });
    return out;
}

namespace {

struct WildAcc {
    Int p;
    uint32_t pu;
    int wild = 0, tame = 0, undet = 0;
    std::vector<std::string> notes;

    void note(const std::string& s) { notes.push_back(s); }
};

std::string rat_str(const Rat& x) { return rat_to_string(x); }

// residual polynomial of a polygon segment, as a PolyMod over F_p
PolyMod segment_residual(const ZPoly& f, int x_power, const std::pair<int, long>& v0,
                         const std::pair<int, long>& v1, long a, long b, uint32_t p) {
    // valuation a/b (reduced, b>0): along the segment v drops by a per b columns
    int len = v1.first - v0.first;
    int deg = (int)(len / b);
    PolyMod s(p);
    s.c.assign(deg + 1, 0);
    Int pp((unsigned long)p);
    for (int t = 0; t <= deg; ++t) {
        int idx = v0.first + (int)(t * b) + x_power;
        long need = v0.second - t * a;
        if (idx > (int)f.c.size() - 1) break;
        const Int& c = f.c[idx];
        if (c == 0) continue;
        Int rest;
        long v = (long)remove_factor(c, p, rest);
        if (v != need) continue;  // strictly above the segment
        Int m = rest % pp;
        if (m < 0) m += pp;
        s.c[t] = (uint32_t)m.get_ui();
    }
    s.trim();
    return s;
}

void classify_polygon(const ZPoly& f, WildAcc& acc, int depth, bool positive_only,
                      const std::string& ctx);

// handle one segment with valuation a/b > 0 context or any
void classify_segment(const ZPoly& f, const NewtonPolygon& np, size_t si, WildAcc& acc, int depth,
                      const std::string& ctx) {
    const auto& seg = np.segments[si];
    int L = seg.length;
    Int num = Int(seg.valuation.get_num());
    Int den = Int(seg.valuation.get_den());
    long a = num.get_si(), b = den.get_si();
    std::ostringstream tag;
    tag << ctx << "slope " << rat_str(seg.valuation) << " x" << L;
    if (b % acc.p.get_si() == 0) {
        acc.wild += L;
        acc.note(tag.str() + ": wild (denominator divisible by p)");
        return;
    }
    // residual polynomial along the segment
    PolyMod S = segment_residual(f, np.zero_roots, np.vertices[si], np.vertices[si + 1], a, b, acc.pu);
    if (S.degree() != (int)(L / b)) {
        acc.undet += L;
        acc.note(tag.str() + ": residual degenerated, undetermined");
        return;
    }
    auto fac = factor_mod_p(pm_to_z(S), acc.pu);
    for (const auto& [T, mu] : fac.factors) {
        int mass = (int)(b * mu * T.degree());
        if (mu == 1) {
            acc.tame += mass;
            continue;
        }
        if (depth <= 0) {
            acc.undet += mass;
            acc.note(tag.str() + ": repeated residual, depth exhausted");
            continue;
        }
        if (T.degree() == 1 && b == 1) {
            // residue root c: recenter x -> p^a (c + x) and keep the positive part
            uint32_t c = T.c[0] ? acc.pu - T.c[0] : 0;  // root of z + T0
            ZPoly g = zp_scale_arg(f, rat_pow(Rat(acc.p), a));
            g = zp_primitive(g);
            g = zp_compose_shift(g, Int((unsigned long)c));
            WildAcc sub;
            sub.p = acc.p;
            sub.pu = acc.pu;
            classify_polygon(g, sub, depth - 1, true, tag.str() + " -> ");
            int got = sub.wild + sub.tame + sub.undet;
            if (got != mass) {
                acc.undet += mass;
                acc.note(tag.str() + ": recentering mass mismatch, undetermined");
            } else {
                acc.wild += sub.wild;
                acc.tame += sub.tame;
                acc.undet += sub.undet;
                for (auto& n : sub.notes) acc.notes.push_back(n);
            }
        } else {
            // repeated residual factor T of degree d on a slope-a/b segment:
            // probe p^{ad} T(x^b / p^a); the chunk's mass is exactly the census
            // mass above valuation a*d, with no contribution from other chunks
            int d = T.degree();
            ZPoly Tz = pm_to_z_sym(T);
            UniPoly probe("x", {});
            probe.c.assign((size_t)(b * d) + 1, Rat(0));
            for (int k = 0; k <= d; ++k) {
                if (Tz.coeff(k) == 0) continue;
                probe.c[(size_t)(b * k)] = Rat(Tz.coeff(k)) * rat_pow(Rat(acc.p), a * (d - k));
            }
            probe.trim();
            ValuationCensus cen = valuation_census(UniPoly::from_z(f, "x"), acc.p, probe);
            Rat cutoff = Rat(Int(a * d));
            int seen = 0;
            for (const auto& g : cen.groups) {
                if (!(g.valuation > cutoff)) continue;
                seen += g.count;
                Int gden(g.valuation.get_den());
                if (gden % acc.p == 0) {
                    acc.wild += g.count;
                    acc.note(tag.str() + ": probe valuation " + rat_str(g.valuation) + " wild x" +
                             std::to_string(g.count));
                } else {
                    acc.undet += g.count;
                    acc.note(tag.str() + ": probe valuation " + rat_str(g.valuation) +
                             " undetermined x" + std::to_string(g.count));
                }
            }
            if (cen.zero_count) {
                // f shares a factor with the probe: that factor is a tame (e = b)
                // extension of the unramified field cut out by T
                seen += cen.zero_count;
                acc.tame += cen.zero_count;
                acc.note(tag.str() + ": probe vanishes exactly, tame x" +
                         std::to_string(cen.zero_count));
            }
            if (seen != mass) {
                acc.undet += mass - seen;
                if (mass < seen) throw std::logic_error("wild probe overcount");
            }
        }
    }
}

void classify_polygon(const ZPoly& f, WildAcc& acc, int depth, bool positive_only,
                      const std::string& ctx) {
    NewtonPolygon np = newton_polygon(f, acc.p);
    if (np.zero_roots > 0) acc.tame += np.zero_roots;  // exact rational roots
    for (size_t i = 0; i < np.segments.size(); ++i) {
        if (positive_only && np.segments[i].valuation <= 0) continue;
        classify_segment(f, np, i, acc, depth, ctx);
    }
}

}  // namespace

WildnessReport wild_degree_bound(const UniPoly& f, const Int& p, int depth) {
    if (f.degree() < 1) throw std::domain_error("wild_degree_bound: degree < 1");
    if (!is_prime(p)) throw std::domain_error("wild_degree_bound: p not prime");
    if (p >= Int(1) << 31) throw std::domain_error("wild_degree_bound: prime exceeds kernel bound");
    WildnessReport rep;
    rep.p = p;
    rep.degree = f.degree();
    Rat cont;
    ZPoly z = up_to_z(f, &cont);
    WildAcc acc;
    acc.p = p;
    acc.pu = (uint32_t)p.get_ui();
    classify_polygon(z, acc, depth, false, "");
    rep.wild_bound = acc.wild;
    rep.tame_certified = acc.tame;
    rep.undetermined = acc.undet;
    rep.attribution = acc.notes;
    if (rep.wild_bound + rep.tame_certified + rep.undetermined != rep.degree)
        throw std::logic_error("wild_degree_bound: mass mismatch");
    return rep;
}

Partition tame_partition(const Partition& lambda, long m) {
    if (m < 1) throw std::invalid_argument("tame_partition: m < 1");
    return partition_power(lambda, m);
}

}  // namespace hf
