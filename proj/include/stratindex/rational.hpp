#pragma once

#include <gmpxx.h>

#include <string>

#include "stratindex/errors.hpp"

namespace stratindex {

// Exact rational arithmetic is delegated to GMP.  mpq_class values are kept
// canonical (reduced, positive denominator) everywhere.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "-p" or "p/q" (decimal).  Whitespace is not accepted.
inline Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0)
        throw DomainError("not a rational number: '" + text + "'");
    if (q.get_den() == 0)
        throw DomainError("rational with zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace stratindex
