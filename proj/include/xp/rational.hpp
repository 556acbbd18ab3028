#ifndef XP_RATIONAL_HPP
#define XP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "xp/errors.hpp"

namespace xp {

using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& q)   { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Renders "p" or "p/q"; the complex/simplex JSON formats use this everywhere.
std::string rat_to_string(const Rational& q);

// Accepts "p", "p/q", decimal literals like "-0.25", and tolerates spaces.
Rational parse_rational(const std::string& s);

} // namespace xp

#endif
