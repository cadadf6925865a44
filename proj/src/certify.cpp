#include "hf/certify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace hf {

Int disc_square_class(const UniPoly& f, const std::vector<Int>& P) {
    Rat disc = up_disc(f);
    if (disc == 0) throw std::domain_error("disc_square_class: zero discriminant");
    // squarefree part of num*den equals that of the rational up to squares
    Int n = Int(disc.get_num()) * Int(disc.get_den());
    return squarefree_part_smooth(n, P);
}

std::vector<Int> fingerprint_primes(const std::vector<Int>& exclude, int count) {
    std::vector<Int> out;
    Int p = 1;
    while ((int)out.size() < count) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (std::find(exclude.begin(), exclude.end(), p) != exclude.end()) continue;
        out.push_back(p);
    }
    return out;
}

FieldFingerprint fingerprint(const UniPoly& f, const std::vector<Int>& primes,
                             const std::vector<Int>& P) {
    if (!up_separable(f)) throw std::domain_error("fingerprint: polynomial not separable");
    FieldFingerprint fp;
    fp.degree = f.degree();
    try {
        fp.disc_class = disc_square_class(f, P);
    } catch (const std::domain_error&) {
        fp.disc_class = std::nullopt;
    }
    for (const Int& p : primes) {
        try {
            fp.partitions.emplace_back(p, frobenius_partition(f, p));
        } catch (const std::domain_error&) {
            fp.partitions.emplace_back(p, std::nullopt);  // ramified marker
        }
    }
    return fp;
}

bool fingerprint_equal(const FieldFingerprint& a, const FieldFingerprint& b) {
    return a.degree == b.degree && a.disc_class == b.disc_class && a.partitions == b.partitions;
}

bool fingerprint_compatible(const FieldFingerprint& a, const FieldFingerprint& b) {
    if (a.degree != b.degree) return false;
    if (a.disc_class && b.disc_class && *a.disc_class != *b.disc_class) return false;
    size_t n = std::min(a.partitions.size(), b.partitions.size());
    for (size_t i = 0; i < n; ++i) {
        if (a.partitions[i].first != b.partitions[i].first)
            throw std::invalid_argument("fingerprint_compatible: prime lists differ");
        const auto& pa = a.partitions[i].second;
        const auto& pb = b.partitions[i].second;
        if (pa && pb && *pa != *pb) return false;
    }
    return true;
}

CertifyResult certify_full(const UniPoly& f, const std::vector<Int>& primes,
                           const std::vector<Int>& P, int extend_primes) {
    if (!up_separable(f)) throw std::domain_error("certify_full: polynomial not squarefree");
    CertifyResult out;
    long m = f.degree();
    auto irr = irreducible_over_Q(f, primes, true);
    for (auto& pr : irr.used_partitions) out.partitions_used.push_back(pr);
    if (irr.verdict == IrreducibilityResult::Verdict::NotIrreducible) {
        out.verdict = Fullness::NotFull;
        out.factor_degrees = irr.factor_degrees;
        out.evidence = "reducible";
        return out;
    }
    // hunt for a prime-order witness in (m/2, m-2]
    bool any_odd = false;
    auto scan = [&](const std::vector<int>& part) {
        Partition t((std::vector<int>(part)));
        any_odd |= !t.is_even();
        if (!out.jordan_prime) {
            if (auto w = jordan_witness(t, m)) out.jordan_prime = *w;
        }
    };
    for (auto& [p, part] : out.partitions_used) scan(part);
    if (!out.jordan_prime) {
        Int p = primes.empty() ? Int(1) : primes.back();
        int tried = 0;
        while (!out.jordan_prime && tried < extend_primes) {
            mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
            ++tried;
            std::vector<int> part;
            try {
                part = frobenius_partition(f, p);
            } catch (const std::domain_error&) {
                continue;
            }
            out.partitions_used.emplace_back(p, part);
            scan(part);
        }
    }
    if (!out.jordan_prime) {
        out.verdict = Fullness::Inconclusive;
        out.evidence = "no prime-order witness found";
        return out;
    }
    std::optional<bool> disc_square;
    try {
        disc_square = disc_square_class(f, P) == 1;
    } catch (const std::domain_error&) {
        disc_square = std::nullopt;
    }
    bool symmetric = disc_square ? !*disc_square : any_odd;
    out.verdict = symmetric ? Fullness::Symmetric : Fullness::Alternating;
    out.evidence = "jordan prime " + std::to_string(out.jordan_prime);
    return out;
}

namespace {

std::string verdict_name(Fullness v) {
    switch (v) {
        case Fullness::Alternating: return "alternating";
        case Fullness::Symmetric: return "symmetric";
        case Fullness::NotFull: return "not-full";
        case Fullness::Inconclusive: return "inconclusive";
    }
    return "?";
}

}  // namespace

AuditReport audit(const MultiPoly& fixture, const std::string& var, const SpecSet& points,
                  const std::vector<Int>& P, const std::vector<Int>& P_h,
                  const std::vector<Int>& primes, int wild_depth) {
    std::vector<std::string> params;
    for (const auto& v : fixture.vars)
        if (v != var) params.push_back(v);
    AuditReport rep;
    rep.point_count = points.points.size();
    std::vector<FieldFingerprint> prints;
    std::vector<size_t> print_row;
    for (const auto& pt : points.points) {
        AuditRow row;
        row.point = pt;
        if (pt.coords.size() != params.size()) throw std::invalid_argument("audit: arity mismatch");
        std::vector<std::pair<std::string, Rat>> binding;
        for (size_t i = 0; i < params.size(); ++i) binding.emplace_back(params[i], pt.coords[i]);
        Specialization sp = specialize(fixture, var, binding);
        row.separable = sp.separable;
        if (!row.separable) {
            ++rep.nonseparable;
            rep.rows.push_back(std::move(row));
            continue;
        }
        auto cert = certify_full(sp.poly, primes, P);
        row.verdict = cert.verdict;
        if (cert.verdict == Fullness::NotFull) {
            row.factor_shape = cert.factor_degrees;
            rep.reducible_shapes[row.factor_shape] += 1;
        } else {
            row.factor_shape = {sp.poly.degree()};
            ++rep.irreducible_count;
        }
        try {
            row.disc_class = disc_square_class(sp.poly, P);
        } catch (const std::domain_error&) {
            row.disc_class = std::nullopt;
        }
        for (const Int& p : P_h) {
            auto w = wild_degree_bound(sp.poly, p, wild_depth);
            row.wild.emplace_back(p, w.wild_bound);
            row.tame_ok.emplace_back(p, w.wild_bound == 0 && w.undetermined == 0);
            long pl = p.get_si();
            if (w.wild_bound > 0) rep.wild_proven[pl] += 1;
            else if (w.undetermined == 0) rep.wild_exceptions[pl].push_back(pt);
            else rep.wild_open[pl].push_back(pt);
        }
        if (row.verdict != Fullness::NotFull) {
            prints.push_back(fingerprint(sp.poly, primes, P));
            print_row.push_back(rep.rows.size());
        }
        rep.rows.push_back(std::move(row));
    }
    // Principle A: group compatible fingerprints (union-find)
    size_t n = prints.size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (fingerprint_compatible(prints[i], prints[j])) parent[find((int)j)] = find((int)i);
    std::map<int, int> class_ids;
    for (size_t i = 0; i < n; ++i) {
        int root = find((int)i);
        auto [it, fresh] = class_ids.emplace(root, (int)class_ids.size());
        rep.rows[print_row[i]].fingerprint_class = it->second;
    }
    rep.fingerprint_classes = (int)class_ids.size();
    // Principle B histogram
    for (const auto& row : rep.rows) {
        if (!row.separable) rep.fullness_histogram["non-separable"] += 1;
        else rep.fullness_histogram[verdict_name(row.verdict)] += 1;
    }
    // full-field lower bounds per degree: distinct classes among certified-full rows
    std::map<int, std::set<int>> classes_by_degree;
    for (const auto& row : rep.rows) {
        if (!row.separable || row.fingerprint_class < 0) continue;
        if (row.verdict == Fullness::Alternating || row.verdict == Fullness::Symmetric)
            classes_by_degree[row.factor_shape[0]].insert(row.fingerprint_class);
    }
    for (auto& [deg, cls] : classes_by_degree) rep.full_field_lower_bounds[deg] = (int)cls.size();
    return rep;
}

}  // namespace hf
