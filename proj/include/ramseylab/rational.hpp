#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "ramseylab/error.hpp"

namespace ramseylab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical text form used in every verdict-bearing field: "num/den" with
// den > 0 and gcd(num,den) = 1; integers print without the "/1".
inline std::string rational_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

inline Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    require(den != 0, ErrorCode::ParseError, "zero denominator in '" + s + "'");
    return Rational(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError, "bad rational '" + s + "'");
  }
}

}  // namespace ramseylab
