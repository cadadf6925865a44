#pragma once

#include "hf/unipoly.hpp"

namespace hf {

// Sparse multivariate polynomial over Q. Terms are kept sorted in descending
// graded-lex order on the exponent tuples, with no zero coefficients stored.
struct MultiPoly {
    std::vector<std::string> vars;
    std::vector<std::pair<std::vector<unsigned>, Rat>> terms;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vs) : vars(std::move(vs)) {}

    static MultiPoly constant(std::vector<std::string> vs, const Rat& v);
    static MultiPoly var_poly(std::vector<std::string> vs, const std::string& v);
    static MultiPoly from_unipoly(const UniPoly& p);

    bool is_zero() const { return terms.empty(); }
    size_t nvars() const { return vars.size(); }
    int var_index(const std::string& v) const;
    int degree(const std::string& v) const;
    int total_degree() const;
    void normalize();

    bool operator==(const MultiPoly& o) const;
};

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator-(const MultiPoly& a);
MultiPoly operator*(const MultiPoly& a, const Rat& k);
MultiPoly mp_pow(const MultiPoly& a, unsigned long e);

// Substitute a rational value; the variable is removed from the list.
MultiPoly mp_subst(const MultiPoly& a, const std::string& var, const Rat& value);
// Substitute var -> num/den and clear denominators: returns a(...) * den^(deg_var a).
MultiPoly mp_subst_rational(const MultiPoly& a, const std::string& var, const MultiPoly& num,
                            const MultiPoly& den);
Rat mp_eval(const MultiPoly& a, const std::vector<Rat>& point);
// Coefficient of var^k, as a polynomial in the remaining variables.
MultiPoly mp_coeff_wrt(const MultiPoly& a, const std::string& var, unsigned k);
UniPoly mp_to_unipoly(const MultiPoly& a);  // requires at most one active variable
MultiPoly mp_align(const MultiPoly& a, const std::vector<std::string>& vars);
std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b);
std::string mp_to_string(const MultiPoly& a);

// Exact Sylvester resultant eliminating `var`, by subresultant PRS.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var);
// (-1)^(d(d-1)/2) * Res(f, df/dvar) / lc_var(f)
MultiPoly discriminant(const MultiPoly& f, const std::string& var);
MultiPoly mp_derivative(const MultiPoly& f, const std::string& var);

bool mp_divides(const MultiPoly& b, const MultiPoly& a);  // b | a over Q
MultiPoly mp_divexact(const MultiPoly& a, const MultiPoly& b);

}  // namespace hf
