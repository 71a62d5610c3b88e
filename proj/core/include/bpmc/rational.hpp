// Exact rational arithmetic used throughout the model layer.
//
// Probabilities, polynomial coefficients and certified bounds are all
// GMP-backed rationals; floating point appears only in heuristic step
// computations whose results are re-verified exactly before use.

#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace bpmc {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

// Parses "p/q", "p", or a decimal literal ("0.9" becomes 9/10) into an exact
// rational. Returns nullopt on malformed input; never loses precision.
std::optional<Rational> parse_rational(std::string_view text);

// Renders q as "p/q" (or just "p" for integers).
std::string to_ratio_string(const Rational& q);

// Deterministic fixed-point decimal rendering, truncated toward zero, with
// exactly `digits` fractional digits. Used for machine-readable output where
// byte-identical reruns are part of the contract.
std::string to_decimal_string(const Rational& q, unsigned digits = 12);

// Largest dyadic k/2^bits that is <= q (so rounding is directed toward
// negative infinity; for the nonnegative values used here, toward zero).
Rational round_down_dyadic(const Rational& q, unsigned bits);

// Smallest dyadic k/2^bits that is >= q.
Rational round_up_dyadic(const Rational& q, unsigned bits);

double to_double(const Rational& q);

// Exact conversion: every finite double is a dyadic rational.
Rational rational_from_double(double d);

// The rational with the smallest denominator inside [lo, hi] (ties broken by
// smallest numerator). This is the continued-fraction / Stern-Brocot
// reconstruction step used to recover exact fixed-point values from
// certified enclosures.
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

}  // namespace bpmc
