#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>

#include "errors.hpp"

namespace absinc {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, kept reduced with positive denominator
// (cpp_rational canonicalizes on every operation; zero is 0/1).
using Rational = boost::multiprecision::cpp_rational;

/// "num/den", with "/den" omitted when the denominator is 1.
inline std::string rational_to_string(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += "/";
    s += denominator(q).str();
  }
  return s;
}

inline Rational rational_from_string(const std::string& s) {
  std::size_t i = 0;
  auto bad = [&](const std::string& why) {
    fail(ErrKind::Parse, "invalid rational \"" + s + "\": " + why);
  };
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  std::size_t num_start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == num_start) bad("missing digits");
  BigInt num(s.substr(0, i));
  BigInt den(1);
  if (i < s.size()) {
    if (s[i] != '/') bad("unexpected character");
    ++i;
    std::size_t den_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == den_start || i != s.size()) bad("bad denominator");
    den = BigInt(s.substr(den_start));
    if (den == 0) bad("zero denominator");
  }
  return Rational(num, den);
}

}  // namespace absinc
