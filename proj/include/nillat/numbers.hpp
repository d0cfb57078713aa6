#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "nillat/error.hpp"

namespace nillat {

// All scalars in this library are exact: arbitrary-precision integers and
// rationals. cpp_rational keeps gcd-reduced form with positive denominator,
// which is exactly the canonical form the wire format assumes.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

inline Int to_int(const Rat& r) {
  require(is_integer(r), Err::Internal, "expected integral rational, got " + r.str());
  return num(r);
}

// Floor division for both kinds; C++ '/' truncates toward zero.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int rat_floor(const Rat& r) { return floor_div(num(r), den(r)); }

// Remainder of a modulo b normalized into [0, |b|).
inline Int mod_floor(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

inline std::string rat_str(const Rat& r) {
  if (is_integer(r)) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

}  // namespace nillat
