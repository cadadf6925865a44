#pragma once

#include "hf/multipoly.hpp"

#include "json.hpp"

namespace hf {

using json = nlohmann::json;

// Shared polynomial text format:
//   univariate   {"var": "x", "coeffs": ["c0", "c1", ...]}         (strings, "num" or "num/den")
//   multivariate {"vars": [...], "terms": [[[e1,...,ek], "num", "den"], ...]}
json unipoly_to_json(const UniPoly& p);
UniPoly unipoly_from_json(const json& j);
json multipoly_to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const json& j);
json poly_to_json(const MultiPoly& p);     // picks the univariate form when possible
MultiPoly poly_from_json(const json& j);   // accepts either form

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

// Parse "3125*t^4 + (3750*b*c - 12500*x)*t^3" style formulas. Identifiers not
// in `vars` must appear in `env`.
MultiPoly parse_poly_expr(const std::string& s, const std::vector<std::string>& vars,
                          const std::map<std::string, MultiPoly>* env = nullptr);

}  // namespace hf
