#include "hf/permgroup.hpp"

#include <algorithm>
#include <random>

namespace hf {

// The chain keeps one global strong-generator list; level i uses every strong
// generator fixing base_[0..i-1]. Sweeps rerun until all Schreier generators
// sift to the identity, which certifies order = prod |orbit_i|.
struct StabChain::Impl {
    int degree;
    std::vector<int> base;
    std::vector<Permutation> strong;
    std::vector<std::vector<int>> orbit;                      // per level
    std::vector<std::vector<std::optional<Permutation>>> rep; // per level

    int fix_depth(const Permutation& g) const {
        int d = 0;
        while (d < (int)base.size() && g(base[d]) == base[d]) ++d;
        return d;
    }

    void rebuild_level(size_t i) {
        orbit[i].assign(1, base[i]);
        rep[i].assign(degree, std::nullopt);
        rep[i][base[i]] = Permutation(degree);
        for (size_t head = 0; head < orbit[i].size(); ++head) {
            int pt = orbit[i][head];
            for (const auto& s : strong) {
                if (fix_depth(s) < (int)i) continue;
                int im = s(pt);
                if (!rep[i][im]) {
                    rep[i][im] = s * *rep[i][pt];
                    orbit[i].push_back(im);
                }
            }
        }
    }

    void insert(const Permutation& h) {
        int d = fix_depth(h);
        if (d == (int)base.size()) {
            int b = 0;
            while (h(b) == b) ++b;
            base.push_back(b);
            orbit.emplace_back();
            rep.emplace_back();
            rebuild_level(base.size() - 1);
        }
        strong.push_back(h);
        for (size_t j = 0; j <= (size_t)d && j < base.size(); ++j) rebuild_level(j);
    }

    // strip from `from`; returns residue
    Permutation sift_from(const Permutation& g, size_t from) const {
        Permutation h = g;
        for (size_t i = from; i < base.size(); ++i) {
            int im = h(base[i]);
            if (!rep[i][im]) return h;
            h = inverse(*rep[i][im]) * h;
            if (h.is_identity()) break;
        }
        return h;
    }
};

StabChain::StabChain(int degree, const std::vector<Permutation>& gens) : degree_(degree) {
    Impl im;
    im.degree = degree;
    for (const auto& g : gens) {
        if (g.degree() != degree) throw std::invalid_argument("StabChain: degree mismatch");
        if (!g.is_identity()) im.insert(g);
    }
    bool again = !im.base.empty();
    while (again) {
        again = false;
        for (size_t i = 0; i < im.base.size() && !again; ++i) {
            for (size_t oi = 0; oi < im.orbit[i].size() && !again; ++oi) {
                int pt = im.orbit[i][oi];
                for (const auto& s : im.strong) {
                    if (im.fix_depth(s) < (int)i) continue;
                    Permutation sg = inverse(*im.rep[i][s(pt)]) * s * *im.rep[i][pt];
                    if (sg.is_identity()) continue;
                    Permutation h = im.sift_from(sg, i + 1);
                    if (h.is_identity()) continue;
                    im.insert(h);
                    again = true;
                    break;
                }
            }
        }
    }
    order_ = 1;
    for (const auto& o : im.orbit) order_ *= Int((unsigned long)o.size());
    levels_.clear();
    for (size_t i = 0; i < im.base.size(); ++i) {
        Level lv;
        lv.base_point = im.base[i];
        lv.orbit = im.orbit[i];
        lv.rep = im.rep[i];
        levels_.push_back(std::move(lv));
    }
}

std::pair<Permutation, size_t> StabChain::sift(const Permutation& g) const {
    Permutation h = g;
    for (size_t i = 0; i < levels_.size(); ++i) {
        int b = levels_[i].base_point;
        int im = h(b);
        if (!levels_[i].rep[im]) return {h, i};
        h = inverse(*levels_[i].rep[im]) * h;
    }
    return {h, levels_.size()};
}

bool StabChain::contains(const Permutation& g) const {
    if (g.degree() != degree_) return false;
    auto [res, lvl] = sift(g);
    return res.is_identity();
}

std::vector<int> orbit_of(const PermGroupGen& g, int point) {
    std::vector<char> seen(g.degree, 0);
    std::vector<int> orb = {point};
    seen[point] = 1;
    for (size_t h = 0; h < orb.size(); ++h)
        for (const auto& s : g.gens) {
            int im = s(orb[h]);
            if (!seen[im]) {
                seen[im] = 1;
                orb.push_back(im);
            }
        }
    std::sort(orb.begin(), orb.end());
    return orb;
}

bool is_transitive(const PermGroupGen& g) {
    if (g.degree == 0) return false;
    return (int)orbit_of(g, 0).size() == g.degree;
}

GroupTests group_tests(const PermGroupGen& g) {
    GroupTests t;
    StabChain chain(g.degree, g.gens);
    t.order = chain.order();
    t.transitive = is_transitive(g);
    t.parity_mixed = false;
    for (const auto& s : g.gens) t.parity_mixed |= !is_even(s);
    return t;
}

std::optional<long> jordan_witness(const Partition& type, long m) {
    for (int c : type.parts) {
        if (2L * c > m && c <= m - 2 && is_prime(Int(c))) return (long)c;
    }
    return std::nullopt;
}

FullnessReport fullness_test(const std::vector<Partition>& sampled_types, long m, bool transitive,
                             std::optional<bool> disc_is_square) {
    FullnessReport rep;
    if (!transitive) {
        rep.evidence = "not transitive";
        return rep;
    }
    bool any_odd = false;
    for (const auto& t : sampled_types) {
        if (t.n() != (int)m) throw std::invalid_argument("fullness_test: type does not partition m");
        any_odd |= !t.is_even();
        if (!rep.jordan_prime) {
            if (auto w = jordan_witness(t, m)) {
                rep.jordan_prime = *w;
            }
        }
    }
    if (!rep.jordan_prime) {
        rep.evidence = "no prime-order witness in (m/2, m-2]";
        return rep;
    }
    bool symmetric = disc_is_square ? !*disc_is_square : any_odd;
    rep.verdict = symmetric ? Fullness::Symmetric : Fullness::Alternating;
    rep.evidence = "jordan prime " + std::to_string(rep.jordan_prime);
    return rep;
}

FullnessReport fullness_test(const PermGroupGen& g, int samples) {
    FullnessReport rep;
    if (!is_transitive(g)) {
        rep.evidence = "not transitive";
        return rep;
    }
    std::vector<Partition> types;
    bool any_odd = false;
    for (const auto& s : g.gens) {
        types.push_back(cycle_type(s));
        any_odd |= !is_even(s);
    }
    std::mt19937_64 rng(0xb41dULL);
    Permutation w(g.degree);
    for (int i = 0; i < samples; ++i) {
        w = g.gens[rng() % g.gens.size()] * w;
        if (rng() & 1) w = g.gens[rng() % g.gens.size()] * w;
        types.push_back(cycle_type(w));
        any_odd |= !is_even(w);
    }
    auto r = fullness_test(types, g.degree, true, std::nullopt);
    if (r.verdict != Fullness::Inconclusive)
        r.verdict = any_odd ? Fullness::Symmetric : Fullness::Alternating;
    return r;
}

}  // namespace hf
