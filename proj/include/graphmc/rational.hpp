#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace gmc {

// Exact rational scalar. boost::multiprecision keeps values in lowest terms
// with positive denominator, which is exactly the invariant we need. No
// floating point anywhere in this project.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

inline std::string rat_str(const Rat& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

// Parses "a" or "a/b" with optional leading sign.
inline Rat rat_parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::runtime_error("bad rational literal: '" + s + "'");
  }
}

inline int sign_pow(long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace gmc
