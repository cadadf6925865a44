#pragma once

#include "hf/unipoly.hpp"

namespace hf {

struct RootScatter {
    int precision = 0;  // decimal digits carried
    std::vector<std::pair<std::string, std::string>> roots;  // (re, im), conjugates adjacent
    int real_count = 0;  // exact, by Sturm chain
};

// All complex roots by simultaneous Aberth iteration at the requested decimal
// precision, polished until the monic residual drops below 10^(-precision/2).
RootScatter root_scatter(const UniPoly& f, int precision);

// exact number of real roots of a squarefree polynomial
int sturm_real_count(const UniPoly& f);

}  // namespace hf
