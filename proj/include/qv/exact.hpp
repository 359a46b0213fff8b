#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qv {

// All bound values in the library are exact; no floating point anywhere.
using ExactInt = boost::multiprecision::cpp_int;
using ExactRat = boost::multiprecision::cpp_rational;

ExactInt pow_int(const ExactInt& base, long exp);

/// q^e for possibly negative e (exact rational).
ExactRat pow_rat(long q, long e);

/// "numerator/denominator" decimal string; integers render without "/1".
std::string to_string(const ExactRat& r);

ExactRat rat_from_string(const std::string& s);

} // namespace qv
