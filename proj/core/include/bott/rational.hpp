#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace bott {

// Exact arithmetic for every coefficient in the library. Structure constants
// are integers, so rationals are closed under everything we do.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace bott
