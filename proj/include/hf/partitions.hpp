#pragma once

#include "hf/numbers.hpp"

namespace hf {

// Weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::initializer_list<int> p) : parts(p) { normalize(); }
    explicit Partition(std::vector<int> p) : parts(std::move(p)) { normalize(); }

    void normalize();
    int n() const;
    int count() const { return (int)parts.size(); }
    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }
    bool is_even() const;  // parity of a permutation with this cycle type
    std::string str() const;  // exponent form, e.g. "3^8 2^12 1^4"
};

// "2111" (one digit per part), "12+9+4", or "3^8 2^12 1^4"
Partition parse_partition(const std::string& s);

std::vector<Partition> partitions_of(int n);

// n!/z_lambda
Int class_size(int n, const Partition& lambda);
Int centralizer_order(const Partition& lambda);

// cycle type of sigma^m for sigma of cycle type lambda
Partition partition_power(const Partition& lambda, long m);

// One-line notation on {0..n-1}.
struct Permutation {
    std::vector<int> img;

    Permutation() = default;
    explicit Permutation(int n) : img(n) {
        for (int i = 0; i < n; ++i) img[i] = i;
    }
    explicit Permutation(std::vector<int> images);

    int degree() const { return (int)img.size(); }
    int operator()(int i) const { return img[i]; }
    bool is_identity() const;
    bool operator==(const Permutation& o) const { return img == o.img; }
    bool operator<(const Permutation& o) const { return img < o.img; }
};

Permutation operator*(const Permutation& a, const Permutation& b);  // apply b first, then a
Permutation inverse(const Permutation& a);
Permutation conjugate(const Permutation& g, const Permutation& h);  // h g h^-1
Partition cycle_type(const Permutation& a);
bool is_even(const Permutation& a);
Permutation perm_from_cycles(int n, const std::vector<std::vector<int>>& cycles);  // 1-based cycles
Permutation perm_of_type(int n, const Partition& lambda);  // canonical representative

}  // namespace hf
