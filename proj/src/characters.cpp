#include "hf/characters.hpp"

#include <algorithm>
#include <mutex>

namespace hf {

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;
std::map<Key, Int> g_cache;
std::mutex g_cache_mutex;

Int mn_rec(const std::vector<int>& lambda, const std::vector<int>& mu) {
    if (mu.empty()) return lambda.empty() ? Int(1) : Int(0);
    Key key{lambda, mu};
    {
        std::lock_guard<std::mutex> lk(g_cache_mutex);
        auto it = g_cache.find(key);
        if (it != g_cache.end()) return it->second;
    }
    int ell = mu[0];
    std::vector<int> mu_rest(mu.begin() + 1, mu.end());
    int k = (int)lambda.size();
    // beta numbers b_i = lambda_i + (k - 1 - i), strictly decreasing
    std::vector<int> beta(k);
    for (int i = 0; i < k; ++i) beta[i] = lambda[i] + (k - 1 - i);
    Int total = 0;
    for (int i = 0; i < k; ++i) {
        int nb = beta[i] - ell;
        if (nb < 0) continue;
        if (std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
        int height = 0;
        for (int j = 0; j < k; ++j)
            if (beta[j] > nb && beta[j] < beta[i]) ++height;
        std::vector<int> nbeta = beta;
        nbeta[i] = nb;
        std::sort(nbeta.rbegin(), nbeta.rend());
        std::vector<int> nl;
        for (int j = 0; j < k; ++j) {
            int part = nbeta[j] - (k - 1 - j);
            if (part > 0) nl.push_back(part);
            else if (part < 0) throw std::logic_error("mn: bad beta set");
        }
        Int sub = mn_rec(nl, mu_rest);
        if (height % 2) total -= sub;
        else total += sub;
    }
    {
        std::lock_guard<std::mutex> lk(g_cache_mutex);
        g_cache.emplace(std::move(key), total);
    }
    return total;
}

}  // namespace

Int mn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n()) throw std::invalid_argument("mn_character: sizes differ");
    return mn_rec(lambda.parts, mu.parts);
}

Int mn_dimension(const Partition& lambda) {
    std::vector<int> ones(lambda.n(), 1);
    return mn_character(lambda, Partition(ones));
}

}  // namespace hf
