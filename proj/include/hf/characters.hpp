#pragma once

#include "hf/partitions.hpp"

namespace hf {

// Irreducible S_n character value chi_lambda(mu) by the Murnaghan-Nakayama rule.
// Memoized on (lambda, mu); the cache is shared and insertions are synchronized.
Int mn_character(const Partition& lambda, const Partition& mu);

// chi_lambda(1^n), the dimension
Int mn_dimension(const Partition& lambda);

}  // namespace hf
