#pragma once

#include <cstdint>

#include "errors.hpp"
#include "rational.hpp"

namespace absinc {

/// Trial-division primality test.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = (r * b) % p;
    b = (b * b) % p;
    e >>= 1;
  }
  return r;
}

/// Exact field kernel over the rationals.
struct QOps {
  using Value = Rational;
  Value zero() const { return Value(0); }
  Value one() const { return Value(1); }
  bool is_zero(const Value& a) const { return a == 0; }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value neg(const Value& a) const { return -a; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value div(const Value& a, const Value& b) const {
    if (b == 0) fail(ErrKind::DivisionByZero, "rational division by zero");
    return a / b;
  }
  bool eq(const Value& a, const Value& b) const { return a == b; }
  std::string str(const Value& a) const { return rational_to_string(a); }
  Value from_rational(const Rational& q) const { return q; }
};

/// Exact field kernel modulo a prime p < 2^31 (so products fit in 64 bits).
struct FpOps {
  using Value = std::uint64_t;
  std::uint64_t p{0};

  Value zero() const { return 0; }
  Value one() const { return 1 % p; }
  bool is_zero(const Value& a) const { return a % p == 0; }
  Value add(const Value& a, const Value& b) const { return (a + b) % p; }
  Value sub(const Value& a, const Value& b) const { return (a + p - b % p) % p; }
  Value neg(const Value& a) const { return (p - a % p) % p; }
  Value mul(const Value& a, const Value& b) const { return (a % p) * (b % p) % p; }
  Value inv(const Value& a) const {
    if (is_zero(a)) fail(ErrKind::DivisionByZero, "inverse of 0 mod " + std::to_string(p));
    return mod_pow(a % p, p - 2, p);
  }
  Value div(const Value& a, const Value& b) const { return mul(a, inv(b)); }
  bool eq(const Value& a, const Value& b) const { return a % p == b % p; }
  std::string str(const Value& a) const { return std::to_string(a % p); }
  Value from_rational(const Rational& q) const {
    const BigInt pp(p);
    BigInt num = numerator(q) % pp;
    if (num < 0) num += pp;
    BigInt den = denominator(q) % pp;
    if (den == 0)
      fail(ErrKind::DivisionByZero,
           "denominator of " + rational_to_string(q) + " vanishes mod " + std::to_string(p));
    return mul(num.convert_to<std::uint64_t>(), inv(den.convert_to<std::uint64_t>()));
  }
};

}  // namespace absinc
