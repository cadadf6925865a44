#include "hf/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hf {

void Partition::normalize() {
    for (int p : parts)
        if (p <= 0) throw std::invalid_argument("Partition: parts must be positive");
    std::sort(parts.rbegin(), parts.rend());
}

int Partition::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Partition::is_even() const {
    int t = 0;
    for (int p : parts) t += p - 1;
    return t % 2 == 0;
}

std::string Partition::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts.size();) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (i) os << " ";
        os << parts[i];
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    return os.str();
}

Partition parse_partition(const std::string& s) {
    std::vector<int> parts;
    bool compact = !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '1' && c <= '9'; });
    if (compact) {
        for (char c : s) parts.push_back(c - '0');
        return Partition(parts);
    }
    std::string tok;
    std::istringstream is(s);
    auto flush = [&](const std::string& t) {
        if (t.empty()) return;
        auto caret = t.find('^');
        if (caret == std::string::npos) {
            parts.push_back(std::stoi(t));
        } else {
            int part = std::stoi(t.substr(0, caret));
            int count = std::stoi(t.substr(caret + 1));
            for (int i = 0; i < count; ++i) parts.push_back(part);
        }
    };
    std::string cur;
    for (char c : s) {
        if (c == ' ' || c == '+' || c == ',') {
            flush(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    flush(cur);
    if (parts.empty()) throw std::invalid_argument("parse_partition: empty: " + s);
    return Partition(parts);
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxp) {
        if (rest == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(rest, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

Int centralizer_order(const Partition& lambda) {
    std::map<int, int> mult;
    for (int p : lambda.parts) mult[p]++;
    Int z = 1;
    for (auto [p, m] : mult) z *= int_pow(Int(p), m) * factorial(m);
    return z;
}

Int class_size(int n, const Partition& lambda) {
    if (lambda.n() != n) throw std::invalid_argument("class_size: partition does not sum to n");
    return factorial(n) / centralizer_order(lambda);
}

Partition partition_power(const Partition& lambda, long m) {
    if (m < 1) throw std::invalid_argument("partition_power: m < 1");
    std::vector<int> parts;
    for (int c : lambda.parts) {
        long g = std::gcd((long)c, m);
        for (long i = 0; i < g; ++i) parts.push_back(c / (int)g);
    }
    return Partition(parts);
}

Permutation::Permutation(std::vector<int> images) : img(std::move(images)) {
    std::vector<char> seen(img.size(), 0);
    for (int x : img) {
        if (x < 0 || x >= (int)img.size() || seen[x])
            throw std::invalid_argument("Permutation: not a bijection");
        seen[x] = 1;
    }
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img[i] != i) return false;
    return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("perm mul: degree mismatch");
    Permutation r(a.degree());
    for (int i = 0; i < a.degree(); ++i) r.img[i] = a.img[b.img[i]];
    return r;
}

Permutation inverse(const Permutation& a) {
    Permutation r(a.degree());
    for (int i = 0; i < a.degree(); ++i) r.img[a.img[i]] = i;
    return r;
}

Permutation conjugate(const Permutation& g, const Permutation& h) { return h * g * inverse(h); }

Partition cycle_type(const Permutation& a) {
    std::vector<char> seen(a.degree(), 0);
    std::vector<int> parts;
    for (int i = 0; i < a.degree(); ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = a.img[j];
            ++len;
        }
        parts.push_back(len);
    }
    return Partition(parts);
}

bool is_even(const Permutation& a) { return cycle_type(a).is_even(); }

Permutation perm_from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Permutation r(n);
    for (const auto& cyc : cycles) {
        for (size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i] - 1, to = cyc[(i + 1) % cyc.size()] - 1;
            if (from < 0 || from >= n || to < 0 || to >= n)
                throw std::invalid_argument("perm_from_cycles: point out of range");
            r.img[from] = to;
        }
    }
    // validate
    return Permutation(r.img);
}

Permutation perm_of_type(int n, const Partition& lambda) {
    if (lambda.n() != n) throw std::invalid_argument("perm_of_type: size mismatch");
    Permutation r(n);
    int pos = 0;
    for (int c : lambda.parts) {
        for (int i = 0; i < c; ++i) r.img[pos + i] = pos + (i + 1) % c;
        pos += c;
    }
    return r;
}

}  // namespace hf
