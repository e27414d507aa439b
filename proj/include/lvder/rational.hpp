#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace lvder {

/// Exact rational scalar. Values produced by arithmetic are always canonical
/// (positive denominator, reduced).
using Rational = mpq_class;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses "p/q" or "p" with an optional leading '-'. No whitespace, no '+',
/// and the denominator must be a positive integer. Throws ParseError naming
/// the offending token.
Rational parse_rational(std::string_view token);

/// Inverse of parse_rational: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

inline Rational half() { return Rational(1, 2); }

}  // namespace lvder
