#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace trilab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Throws std::invalid_argument on a zero denominator; the sign ends up on the
// numerator and the result is in lowest terms.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rat(num) / Rat(den);
}

// Accepts "p" or "p/q" where p, q are decimal integers with an optional sign.
// Throws std::invalid_argument on anything else (including q == 0).
Rat parse_rat(const std::string& s);

// Always renders as "num/den" with den >= 1 and gcd(num, den) == 1,
// e.g. "3/1", "-1/4", "0/1".
std::string rat_to_string(const Rat& r);

double rat_to_double(const Rat& r);

// Largest integer <= r.
Int rat_floor(const Rat& r);

}  // namespace trilab
