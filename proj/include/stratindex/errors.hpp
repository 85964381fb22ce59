#pragma once

#include <stdexcept>

namespace stratindex {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed combinatorial input: order cycles, duplicate ids, broken face closure.
class StructuralError : public Error {
public:
    using Error::Error;
};

// An argument outside an operation's domain (unknown stratum, i not below j,
// non-injective heights, bad polynomial, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Checked 64-bit arithmetic overflowed.  All index computations fail loudly
// rather than wrap.
class OverflowError : public Error {
public:
    using Error::Error;
};

// The Jacobian quotient dimension failed to stabilise below the truncation
// bound, i.e. the singularity is (or may as well be) non-isolated.
class NonIsolatedError : public Error {
public:
    using Error::Error;
};

}  // namespace stratindex
