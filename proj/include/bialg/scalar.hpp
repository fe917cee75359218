#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace bialg {

// mpq_class keeps results of arithmetic canonical (reduced, positive
// denominator); only construction from text needs policing.
using Scalar = mpq_class;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class KindError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// a constructor's input fails the axioms of its declared kind
class AxiomError : public Error {
public:
    using Error::Error;
};

// "p" or "p/q", q > 0, gcd(p,q) = 1. Anything else throws ParseError.
Scalar parse_scalar(std::string_view text);

// Inverse of parse_scalar; integers print without "/1".
std::string format_scalar(const Scalar& x);

inline bool is_zero(const Scalar& x) { return sgn(x) == 0; }

}  // namespace bialg
