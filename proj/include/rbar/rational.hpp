#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace rbar {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "-p" or "p/q" (q > 0 after normalization).
Rational parse_rational(const std::string& text);

/// Formats as "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& r);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(const Integer& n) { return n.convert_to<double>(); }

}  // namespace rbar
