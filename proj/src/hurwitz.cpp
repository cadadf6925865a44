#include "hf/hurwitz.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace hf {

int HurwitzParameter::r() const {
    int s = 0;
    for (int v : nu) s += v;
    return s;
}

void HurwitzParameter::validate() const {
    if (classes.size() != nu.size()) throw std::invalid_argument("HurwitzParameter: classes/nu mismatch");
    if (classes.empty()) throw std::invalid_argument("HurwitzParameter: no classes");
    for (size_t i = 0; i + 1 < nu.size(); ++i)
        if (nu[i] < nu[i + 1]) throw std::invalid_argument("HurwitzParameter: nu not weakly decreasing");
    for (size_t i = 0; i < classes.size(); ++i) {
        if (classes[i].n() != n) throw std::invalid_argument("HurwitzParameter: class does not partition n");
        if (classes[i].count() == n) throw std::invalid_argument("HurwitzParameter: identity class");
        for (size_t j = i + 1; j < classes.size(); ++j)
            if (classes[i] == classes[j]) throw std::invalid_argument("HurwitzParameter: repeated class");
        for (int v : nu)
            if (v < 1) throw std::invalid_argument("HurwitzParameter: nonpositive multiplicity");
    }
    if (kind == Kind::Symmetric) {
        // product condition in the abelianization: total parity even
        int parity = 0;
        for (size_t i = 0; i < classes.size(); ++i)
            if (!classes[i].is_even()) parity += nu[i];
        if (parity % 2) throw std::invalid_argument("HurwitzParameter: odd total parity");
    }
    if (kind == Kind::Alternating) {
        for (const auto& c : classes)
            if (!c.is_even()) throw std::invalid_argument("HurwitzParameter: odd class for A_n");
    }
}

HurwitzParameter HurwitzParameter::sym(int n, std::vector<Partition> classes, std::vector<int> nu) {
    HurwitzParameter h;
    h.kind = Kind::Symmetric;
    h.n = n;
    h.classes = std::move(classes);
    h.nu = std::move(nu);
    h.validate();
    return h;
}

HurwitzParameter HurwitzParameter::alt(int n, std::vector<Partition> classes, std::vector<int> nu) {
    HurwitzParameter h;
    h.kind = Kind::Alternating;
    h.n = n;
    h.classes = std::move(classes);
    h.nu = std::move(nu);
    h.validate();
    return h;
}

HurwitzParameter HurwitzParameter::explicit_group(PermGroupGen g, std::vector<Partition> classes,
                                                  std::vector<int> nu) {
    HurwitzParameter h;
    h.kind = Kind::Explicit;
    h.n = g.degree;
    h.group = std::move(g);
    h.classes = std::move(classes);
    h.nu = std::move(nu);
    h.validate();
    return h;
}

namespace {

bool an_class_splits(const Partition& lambda) {
    std::set<int> seen;
    for (int p : lambda.parts) {
        if (p % 2 == 0) return false;
        if (!seen.insert(p).second) return false;
    }
    return true;  // all parts odd and distinct
}

}  // namespace

MassResult mass(const HurwitzParameter& h) {
    h.validate();
    if (h.kind == HurwitzParameter::Kind::Explicit)
        throw std::domain_error("mass: character sum needs S_n or A_n; use count_degree");
    if (h.kind == HurwitzParameter::Kind::Alternating)
        for (const auto& c : h.classes)
            if (an_class_splits(c))
                throw std::domain_error("mass: class " + c.str() +
                                        " splits in A_n; cycle-type labels are ambiguous");
    int n = h.n;
    int r = h.r();
    Int nfact = factorial((unsigned)n);
    // prod |C_i|^{nu_i} / |G|^2 * sum_chi prod chi(C_i)^{nu_i} / chi(1)^{r-2}
    Rat front = 1;
    for (size_t i = 0; i < h.classes.size(); ++i)
        front *= rat_pow(Rat(class_size(n, h.classes[i])), h.nu[i]);
    // the character sum is over Irr(S_n) either way; for A_n the tuple count is
    // the same and only |G| changes, giving an overall factor of 2 per |G| slot
    Rat gsize = Rat(nfact);
    if (h.kind == HurwitzParameter::Kind::Alternating) gsize /= 2;
    front /= gsize * gsize;
    // tuple count N = (prod |C_i|^{nu_i} / n!) * sum; mass = N / |G|
    MassResult out;
    Rat total = 0;
    for (const auto& lam : partitions_of(n)) {
        Rat term = 1;
        Int dim = mn_dimension(lam);
        for (size_t i = 0; i < h.classes.size(); ++i) {
            Int chi = mn_character(lam, h.classes[i]);
            if (chi == 0) {
                term = 0;
                break;
            }
            term *= rat_pow(Rat(chi), h.nu[i]);
        }
        if (term == 0) continue;
        term /= rat_pow(Rat(dim), r - 2);
        // scale for A_n: class sizes halve... they do not (nonsplit classes keep size);
        // the single correction factor is |G|^2 handled in `front`, but the character
        // sum must then run over the S_n pairs (chi, chi*sign) which agree on even
        // classes; summing over all of Irr(S_n) does exactly that.
        out.contributions.emplace_back(lam, front * term);
        total += front * term;
    }
    if (h.kind == HurwitzParameter::Kind::Alternating) total /= 2;
    out.mass = total;
    if (h.kind == HurwitzParameter::Kind::Alternating) {
        for (auto& [lam, c] : out.contributions) c /= 2;
    }
    return out;
}

namespace {

// materialize an explicit group by closure (throws past the budget)
std::vector<Permutation> materialize(const PermGroupGen& g, size_t budget = 2000000) {
    std::set<Permutation> elems;
    std::vector<Permutation> queue = {Permutation(g.degree)};
    elems.insert(queue[0]);
    for (size_t h = 0; h < queue.size(); ++h) {
        for (const auto& s : g.gens) {
            Permutation t = s * queue[h];
            if (elems.insert(t).second) {
                queue.push_back(t);
                if (elems.size() > budget) throw std::domain_error("materialize: group too large");
            }
        }
    }
    return {queue.begin(), queue.end()};
}

std::vector<Permutation> all_of_type(const std::vector<Permutation>& elems, const Partition& t) {
    std::vector<Permutation> out;
    for (const auto& g : elems)
        if (cycle_type(g) == t) out.push_back(g);
    return out;
}

std::vector<Permutation> symmetric_group_elements(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    std::vector<Permutation> out;
    do out.push_back(Permutation(img));
    while (std::next_permutation(img.begin(), img.end()));
    return out;
}

// permutations of degree <= 16 pack into 4-bit digits of a u64
inline uint64_t encode_perm(const Permutation& g) {
    uint64_t r = 0;
    for (int i = 0; i < g.degree(); ++i) r |= (uint64_t)g(i) << (4 * i);
    return r;
}

inline uint64_t encode_compose(uint64_t a, uint64_t b, int n) {
    // (a o b)(i) = a[b[i]]
    uint64_t r = 0;
    for (int i = 0; i < n; ++i) {
        uint64_t bi = (b >> (4 * i)) & 15;
        r |= ((a >> (4 * bi)) & 15) << (4 * i);
    }
    return r;
}

struct TupleContext {
    int n;
    std::vector<Permutation> all_elements;       // the ambient group, materialized
    std::vector<std::vector<Permutation>> slot;  // class elements per strand position
    std::vector<int> slot_class;                 // class index per strand
    std::set<Permutation> last_class;            // membership test for the final strand
    std::unordered_set<uint64_t> last_class_enc; // fast path, degree <= 16
    std::vector<Permutation> conj_elements;      // covers are counted up to these conjugations
    Int group_order;
    bool center_trivial;
    bool target_alternating = false;
    bool target_symmetric = false;
    // orders of the largest transitive subgroups of S_n below A_n, n <= 9
    long full_cap = 0;
};

TupleContext make_context(const HurwitzParameter& h, const Int& budget, bool ambient = true) {
    TupleContext cx;
    cx.n = h.n;
    switch (h.kind) {
        case HurwitzParameter::Kind::Symmetric:
            if (h.n > 9) throw std::domain_error("count_degree: S_n enumeration capped at n = 9");
            cx.all_elements = symmetric_group_elements(h.n);
            break;
        case HurwitzParameter::Kind::Alternating: {
            if (h.n > 9) throw std::domain_error("count_degree: A_n enumeration capped at n = 9");
            for (auto& g : symmetric_group_elements(h.n))
                if (is_even(g)) cx.all_elements.push_back(g);
            break;
        }
        case HurwitzParameter::Kind::Explicit:
            cx.all_elements = materialize(h.group);
            break;
    }
    cx.group_order = Int((unsigned long)cx.all_elements.size());
    // tuples index covers up to sheet relabeling: conjugation by N_{S_n}(G),
    // which is S_n for the alternating families and G itself otherwise
    if (h.kind == HurwitzParameter::Kind::Alternating)
        cx.conj_elements = symmetric_group_elements(h.n);
    else
        cx.conj_elements = cx.all_elements;
    std::vector<std::vector<Permutation>> class_elems;
    for (size_t i = 0; i < h.classes.size(); ++i) {
        auto ce = all_of_type(cx.all_elements, h.classes[i]);
        if (ce.empty()) throw std::domain_error("no elements of type " + h.classes[i].str());
        class_elems.push_back(std::move(ce));
    }
    // single-conjugacy-class check for explicit groups: orbit of the first element
    if (ambient && h.kind == HurwitzParameter::Kind::Explicit) {
        for (size_t i = 0; i < class_elems.size(); ++i) {
            std::set<Permutation> orb;
            std::vector<Permutation> q = {class_elems[i][0]};
            orb.insert(q[0]);
            for (size_t k = 0; k < q.size(); ++k)
                for (const auto& g : h.group.gens) {
                    Permutation c = conjugate(q[k], g);
                    if (orb.insert(c).second) q.push_back(c);
                }
            if (orb.size() != class_elems[i].size())
                throw std::domain_error("type " + h.classes[i].str() +
                                        " is not a single conjugacy class; labels are ambiguous");
        }
    }
    for (size_t i = 0; i < h.classes.size(); ++i)
        for (int k = 0; k < h.nu[i]; ++k) {
            cx.slot.push_back(class_elems[i]);
            cx.slot_class.push_back((int)i);
        }
    cx.last_class.insert(cx.slot.back().begin(), cx.slot.back().end());
    if (cx.n <= 16)
        for (const auto& g : cx.slot.back()) cx.last_class_enc.insert(encode_perm(g));
    cx.target_symmetric = h.kind == HurwitzParameter::Kind::Symmetric;
    cx.target_alternating = h.kind == HurwitzParameter::Kind::Alternating;
    if (h.n >= 3 && h.n <= 9) {
        static const long caps[10] = {0, 0, 0, 1, 8, 20, 120, 168, 1344, 1512};
        cx.full_cap = caps[h.n];
    }
    // search budget: prod |C_i|^{nu_i} / |C_last|
    Rat space = 1;
    for (size_t i = 0; i + 1 < cx.slot.size(); ++i) space *= Rat((unsigned long)cx.slot[i].size());
    if (space > Rat(budget)) throw std::domain_error("count_degree: search space exceeds budget");
    if (h.kind != HurwitzParameter::Kind::Explicit) {
        cx.center_trivial = h.n >= 4 || (h.kind == HurwitzParameter::Kind::Symmetric && h.n == 3);
    } else {
        cx.center_trivial = true;
        for (const auto& z : cx.all_elements) {
            if (z.is_identity()) continue;
            bool central = true;
            for (const auto& s : h.group.gens) {
                if (!(z * s == s * z)) {
                    central = false;
                    break;
                }
            }
            if (central) {
                cx.center_trivial = false;
                break;
            }
        }
    }
    return cx;
}

template <typename F>
void for_each_tuple(const TupleContext& cx, F&& visit) {
    size_t r = cx.slot.size();
    if (r < 2) throw std::domain_error("tuple enumeration needs r >= 2");
    std::vector<size_t> idx(r - 1, 0);
    std::vector<Permutation> prefix(r);  // prefix[k] = g_1 ... g_k
    prefix[0] = Permutation(cx.n);
    std::vector<Permutation> tuple(r, Permutation(cx.n));
    int k = 0;
    while (true) {
        for (; k < (int)r - 1; ++k) {
            tuple[k] = cx.slot[k][idx[k]];
            prefix[k + 1] = prefix[k] * tuple[k];
        }
        Permutation last = inverse(prefix[r - 1]);
        bool hit = cx.n <= 16 ? cx.last_class_enc.count(encode_perm(last)) > 0
                              : cx.last_class.count(last) > 0;
        if (hit) {
            tuple[r - 1] = last;
            visit(tuple);
        }
        k = (int)r - 2;
        while (k >= 0 && idx[k] + 1 == cx.slot[k].size()) {
            idx[k] = 0;
            --k;
        }
        if (k < 0) return;
        ++idx[k];
    }
}

bool generates_whole(const TupleContext& cx, const std::vector<Permutation>& tuple) {
    if (cx.n > 16) {
        StabChain chain(cx.n, tuple);
        return chain.order() == cx.group_order;
    }
    // closure over packed permutations, capped: for an S_n/A_n target a transitive
    // subgroup larger than full_cap is already >= A_n
    {
        std::vector<char> seen_pt(cx.n, 0);
        std::vector<int> orb = {0};
        seen_pt[0] = 1;
        for (size_t qh = 0; qh < orb.size(); ++qh)
            for (const auto& g : tuple) {
                int im = g(orb[qh]);
                if (!seen_pt[im]) {
                    seen_pt[im] = 1;
                    orb.push_back(im);
                }
            }
        if ((int)orb.size() != cx.n) {
            // intransitive: can still equal an explicit intransitive target
            if (cx.target_symmetric || cx.target_alternating) return false;
        }
    }
    std::vector<uint64_t> gens;
    gens.reserve(tuple.size());
    for (const auto& g : tuple) gens.push_back(encode_perm(g));
    bool has_cap = (cx.target_symmetric || cx.target_alternating) && cx.full_cap > 0;
    uint64_t idelem = encode_perm(Permutation(cx.n));
    std::unordered_set<uint64_t> seen;
    std::vector<uint64_t> queue = {idelem};
    seen.insert(idelem);
    seen.reserve(has_cap ? 4 * cx.full_cap : 2048);
    for (size_t h = 0; h < queue.size(); ++h) {
        for (uint64_t s : gens) {
            uint64_t t = encode_compose(s, queue[h], cx.n);
            if (seen.insert(t).second) {
                queue.push_back(t);
                if (has_cap && (long)seen.size() > cx.full_cap) {
                    // >= A_n; decide by parity of the tuple
                    bool any_odd = false;
                    for (const auto& g : tuple) any_odd |= !is_even(g);
                    if (cx.target_alternating) return !any_odd;
                    return any_odd;
                }
            }
        }
    }
    return Int((unsigned long)seen.size()) == cx.group_order;
}

}  // namespace

Int count_degree(const HurwitzParameter& h, const Int& budget) {
    h.validate();
    TupleContext cx = make_context(h, budget);
    if (cx.center_trivial) {
        Int count = 0;
        for_each_tuple(cx, [&](const std::vector<Permutation>& t) {
            if (generates_whole(cx, t)) ++count;
        });
        Int divisor((unsigned long)cx.conj_elements.size());
        Int q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), count.get_mpz_t(), divisor.get_mpz_t());
        if (rem != 0) throw std::logic_error("count_degree: tuple count not divisible by |N(G)|");
        return q;
    }
    // nontrivial center: count conjugation orbits directly
    std::set<std::vector<Permutation>> canon;
    for_each_tuple(cx, [&](const std::vector<Permutation>& t) {
        if (!generates_whole(cx, t)) return;
        std::vector<Permutation> best;
        for (const auto& g : cx.conj_elements) {
            std::vector<Permutation> c;
            c.reserve(t.size());
            for (const auto& x : t) c.push_back(conjugate(x, g));
            if (best.empty() || c < best) best = std::move(c);
        }
        canon.insert(best);
    });
    return Int((unsigned long)canon.size());
}

Int mass_with_subgroups(const HurwitzParameter& h, const std::vector<PermGroupGen>& subgroups,
                        const Int& budget) {
    h.validate();
    TupleContext cx = make_context(h, budget);
    // total tuple count in G
    Int total = 0;
    for_each_tuple(cx, [&](const std::vector<Permutation>&) { ++total; });
    if (subgroups.empty()) {
        Int q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), total.get_mpz_t(), cx.group_order.get_mpz_t());
        if (rem != 0) throw std::logic_error("mass_with_subgroups: mass not integral");
        return q;
    }
    Int generating = total;
    for (const auto& sub : subgroups) {
        if (sub.degree != h.n) throw std::invalid_argument("mass_with_subgroups: inconsistent fusion data");
        auto elems = materialize(sub);
        Int sub_order((unsigned long)elems.size());
        if (sub_order == cx.group_order) {
            // degenerate self-inclusion: nothing to subtract
            continue;
        }
        // tuples inside this subgroup generating exactly it
        HurwitzParameter hs = h;
        hs.kind = HurwitzParameter::Kind::Explicit;
        hs.group = sub;
        TupleContext cs = make_context(hs, budget, /*ambient=*/false);
        Int exact = 0;
        for_each_tuple(cs, [&](const std::vector<Permutation>& t) {
            if (generates_whole(cs, t)) ++exact;
        });
        // number of G-conjugates of the subgroup: |G| / |N_G(H)|
        std::set<Permutation> sub_set(elems.begin(), elems.end());
        Int norm = 0;
        for (const auto& g : cx.all_elements) {
            bool normalizes = true;
            for (const auto& s : sub.gens)
                if (!sub_set.count(conjugate(s, g))) {
                    normalizes = false;
                    break;
                }
            if (normalizes) ++norm;
        }
        Int conjugates = cx.group_order / norm;
        generating -= exact * conjugates;
    }
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), generating.get_mpz_t(), cx.group_order.get_mpz_t());
    if (rem != 0) throw std::logic_error("mass_with_subgroups: count not divisible by |G|");
    return q;
}

namespace {

std::vector<Permutation> canonical_tuple(const std::vector<Permutation>& t,
                                         const std::vector<Permutation>& conj_elements) {
    std::vector<Permutation> best;
    for (const auto& g : conj_elements) {
        std::vector<Permutation> c;
        c.reserve(t.size());
        for (const auto& x : t) c.push_back(conjugate(x, g));
        if (best.empty() || c < best) best = std::move(c);
    }
    return best;
}

}  // namespace

OrbitSummary braid_orbits(const HurwitzParameter& h, const Int& budget) {
    h.validate();
    TupleContext cx = make_context(h, budget);
    // collect generating tuples up to conjugation
    std::map<std::vector<Permutation>, int> canon_index;
    std::vector<std::vector<Permutation>> reps;
    for_each_tuple(cx, [&](const std::vector<Permutation>& t) {
        if (!generates_whole(cx, t)) return;
        auto c = canonical_tuple(t, cx.conj_elements);
        if (canon_index.emplace(c, (int)reps.size()).second) reps.push_back(c);
    });
    size_t m = reps.size();
    size_t r = cx.slot.size();
    OrbitSummary out;
    out.degree = Int((unsigned long)m);
    // braid images
    auto apply_sigma = [&](const std::vector<Permutation>& t, size_t i) {
        std::vector<Permutation> s = t;
        s[i] = t[i] * t[i + 1] * inverse(t[i]);
        s[i + 1] = t[i];
        return s;
    };
    for (size_t i = 0; i + 1 < r; ++i) {
        bool same_class = cx.slot_class[i] == cx.slot_class[i + 1];
        std::vector<int> img(m);
        for (size_t j = 0; j < m; ++j) {
            auto s = apply_sigma(reps[j], i);
            if (!same_class) s = apply_sigma(s, i);  // sigma_i^2 for cross-class strands
            // invariants: classes preserved, product still one
            Permutation prod(cx.n);
            for (const auto& x : s) prod = prod * x;
            if (!prod.is_identity()) throw std::logic_error("braid_orbits: product condition broken");
            auto c = canonical_tuple(s, cx.conj_elements);
            auto it = canon_index.find(c);
            if (it == canon_index.end()) throw std::logic_error("braid_orbits: image left the tuple set");
            img[j] = it->second;
        }
        out.braid_images.push_back(Permutation(img));
        out.braid_is_squared.push_back(!same_class);
        out.image_types.push_back(cycle_type(out.braid_images.back()));
    }
    // braid relations on adjacent same-class pairs
    for (size_t i = 0; i + 2 < r; ++i) {
        if (cx.slot_class[i] == cx.slot_class[i + 1] && cx.slot_class[i + 1] == cx.slot_class[i + 2]) {
            const Permutation& a = out.braid_images[i];
            const Permutation& b = out.braid_images[i + 1];
            if (!(a * b * a == b * a * b)) throw std::logic_error("braid_orbits: braid relation fails");
        }
    }
    // orbits under the colored action
    if (m > 0) {
        PermGroupGen act((int)m, out.braid_images);
        std::vector<int> comp(m, -1);
        int ncomp = 0;
        for (size_t j = 0; j < m; ++j) {
            if (comp[j] >= 0) continue;
            std::vector<int> orb = {(int)j};
            comp[j] = ncomp;
            for (size_t qh = 0; qh < orb.size(); ++qh)
                for (const auto& s : out.braid_images) {
                    int im = s(orb[qh]);
                    if (comp[im] < 0) {
                        comp[im] = ncomp;
                        orb.push_back(im);
                    }
                }
            out.orbit_sizes.push_back((int)orb.size());
            // monodromy restricted to the orbit
            std::vector<int> pos(m, -1);
            for (size_t k = 0; k < orb.size(); ++k) pos[orb[k]] = (int)k;
            std::vector<Permutation> restricted;
            for (const auto& s : out.braid_images) {
                std::vector<int> im(orb.size());
                for (size_t k = 0; k < orb.size(); ++k) im[k] = pos[s(orb[k])];
                restricted.push_back(Permutation(im));
            }
            out.orbit_fullness.push_back(fullness_test(PermGroupGen((int)orb.size(), restricted)));
            ++ncomp;
        }
    }
    std::sort(out.orbit_sizes.rbegin(), out.orbit_sizes.rend());
    return out;
}

int genus_from_partitions(int n, const std::vector<Partition>& lambdas) {
    long total_drop = 0;
    for (const auto& lam : lambdas) {
        if (lam.n() != n) throw std::invalid_argument("genus: partition does not partition n");
        total_drop += n - lam.count();
    }
    if (total_drop % 2) throw std::domain_error("genus: odd total drop (parity violation)");
    long g = 1 - n + total_drop / 2;
    if (g < 0) throw std::domain_error("genus: negative genus (no such cover)");
    return (int)g;
}

int genus_cover(int n, const HurwitzParameter& h) {
    std::vector<Partition> lams;
    for (size_t i = 0; i < h.classes.size(); ++i)
        for (int k = 0; k < h.nu[i]; ++k) lams.push_back(h.classes[i]);
    return genus_from_partitions(n, lams);
}

}  // namespace hf
