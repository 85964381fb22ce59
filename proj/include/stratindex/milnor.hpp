#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "stratindex/rational.hpp"

namespace stratindex {

/**
 * A polynomial germ with rational coefficients, vanishing at the origin.
 * Variables are kept in first-use order; every exponent vector has one slot
 * per variable.
 */
struct PolynomialGerm {
    std::vector<std::string> variables;
    std::map<std::vector<int>, Rational> terms;  // exponents -> coefficient

    bool operator==(const PolynomialGerm&) const = default;
};

/**
 * Parses a sum of terms `c*x^a*y^b`: '+'/'-' separated terms, factors joined
 * by '*', each factor a rational constant (`p`, `p/q`) or a variable with an
 * optional nonnegative power.  Variables are declared by first use.  Like
 * terms combine; terms cancelling to zero are dropped.  Rejects constant
 * terms (a germ must vanish at the origin) and the zero polynomial.
 */
PolynomialGerm parse_polynomial(std::string_view text);

// Partial derivative with respect to variables[var]; keeps the variable list.
PolynomialGerm derivative(const PolynomialGerm& f, std::size_t var);

// Largest total degree of a term (0 for the zero polynomial).
int total_degree(const PolynomialGerm& f);

std::string polynomial_to_string(const PolynomialGerm& f);

// Positive weights and weighted degree of a quasihomogeneous germ.
struct QuasihomogeneousData {
    std::vector<long> weights;
    long degree = 0;
};

// True when every term of f has weighted degree exactly q.degree.
bool is_quasihomogeneous(const PolynomialGerm& f, const QuasihomogeneousData& q);

// mu = prod_i (degree - w_i) / w_i for a quasihomogeneous germ with an
// isolated critical point.  DomainError if weights/degree are not positive or
// the product is not a nonnegative integer.
std::int64_t milnor_quasihomogeneous(const QuasihomogeneousData& q);

/**
 * Milnor number as the colength of the Jacobian ideal, computed exactly:
 * dim_Q Q[x]/(J_f + m^t) over monomials of total degree < t, with t running
 * through 2d, 3d, ... (d = total degree) until the dimension repeats three
 * times in a row.  Exceeding max_truncation without stabilising raises
 * NonIsolatedError; max_truncation below 2d is a DomainError.
 */
std::int64_t milnor_jacobian(const PolynomialGerm& f, int max_truncation = 40);

// chi(M_f) = 1 + (-1)^{n-1} mu for an isolated hypersurface germ in n
// variables.
std::int64_t chi_hypersurface_fibre(int n, std::int64_t mu);

}  // namespace stratindex
